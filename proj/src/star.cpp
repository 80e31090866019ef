#include "star.hpp"

#include <algorithm>

#include "error.hpp"

namespace llg {

StarResult star_graph(const Graph& g) {
    require_locally_linear(g);
    std::vector<Triangle> tris = enumerate_triangles(g);
    const std::size_t m = tris.size();

    // Triangles of a locally linear graph pairwise share at most one vertex;
    // two triangles sharing two vertices would put an edge in both.
    EdgeList edges;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            int shared = 0;
            for (Vertex a : tris[i].v)
                for (Vertex b : tris[j].v)
                    if (a == b) ++shared;
            internal_check(shared <= 1, "two triangles share an edge in a locally linear graph");
            if (shared == 1) edges.emplace_back(Vertex(i), Vertex(j));
        }
    }
    return {Graph(Vertex(m), edges), std::move(tris), g.vertex_count()};
}

std::optional<std::array<Vertex, 4>> find_induced_diamond(const Graph& h) {
    const Vertex n = h.vertex_count();
    // A 4-set induces K4-e exactly when it spans five edges.
    for (Vertex a = 0; a < n; ++a) {
        if (h.degree(a) < 1) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            int ab = h.adjacent(a, b);
            for (Vertex c = b + 1; c < n; ++c) {
                int abc = ab + h.adjacent(a, c) + h.adjacent(b, c);
                if (abc < 1) continue;
                for (Vertex d = c + 1; d < n; ++d) {
                    int total = abc + h.adjacent(a, d) + h.adjacent(b, d) + h.adjacent(c, d);
                    if (total == 5) return std::array<Vertex, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 5>> find_induced_k14(const Graph& h) {
    const Vertex n = h.vertex_count();
    // Scan 5-sets in lexicographic order; a set qualifies when it spans four
    // edges all meeting one center.
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    for (Vertex e = d + 1; e < n; ++e) {
                        const std::array<Vertex, 5> set{a, b, c, d, e};
                        int edges = 0;
                        std::array<int, 5> deg{};
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                if (h.adjacent(set[i], set[j])) {
                                    ++edges;
                                    ++deg[i];
                                    ++deg[j];
                                }
                        if (edges != 4) continue;
                        for (int i = 0; i < 5; ++i)
                            if (deg[i] == 4) return set;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

CommonNeighborStat max_common_neighbors_nonadjacent(const Graph& h) {
    const Vertex n = h.vertex_count();
    if (n < 2) fail(errc::too_small, "need at least two vertices");
    std::size_t best = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v)) best = std::max(best, common_neighbor_count(h, u, v));

    CommonNeighborStat stat;
    stat.max_count = best;
    for (Vertex u = 0; u < n && !stat.witness; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v) && common_neighbor_count(h, u, v) == best) {
                stat.witness = {u, v};
                break;
            }
    // A complete graph has no nonadjacent pair at all: max 0, no witness.
    if (best == 0 && h.edge_count() == std::size_t(n) * (n - 1) / 2) stat.witness.reset();
    return stat;
}

std::string StarValidity::violation() const {
    if (diamond) {
        const auto& d = *diamond;
        return "induced diamond on {" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
               std::to_string(d[2]) + "," + std::to_string(d[3]) + "}";
    }
    if (k14) {
        const auto& s = *k14;
        return "induced K_{1,4} on {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
               std::to_string(s[2]) + "," + std::to_string(s[3]) + "," + std::to_string(s[4]) + "}";
    }
    return "";
}

StarValidity is_valid_star(const Graph& h) {
    StarValidity out;
    out.diamond = find_induced_diamond(h);
    out.k14 = find_induced_k14(h);
    out.valid = !out.diamond && !out.k14;
    return out;
}

}  // namespace llg
