#include "reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "local_linear.hpp"
#include "star.hpp"

namespace llg {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    return os.str();
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

CliquePartition neighborhood_partition(const Graph& h, Vertex v) {
    const std::vector<Vertex>& nb = h.neighbors(v);
    // connected components of the induced neighborhood; for a cluster graph
    // these are exactly its cliques
    std::vector<int> comp(nb.size(), -1);
    std::vector<std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        if (comp[i] != -1) continue;
        int id = int(groups.size());
        groups.emplace_back();
        std::vector<std::size_t> stack{i};
        comp[i] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            groups[std::size_t(id)].push_back(nb[cur]);
            for (std::size_t j = 0; j < nb.size(); ++j)
                if (comp[j] == -1 && h.adjacent(nb[cur], nb[j])) {
                    comp[j] = id;
                    stack.push_back(j);
                }
        }
    }
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = a + 1; b < g.size(); ++b)
                if (!g.empty() && !h.adjacent(g[a], g[b]))
                    fail(errc::not_cluster_neighborhood,
                         "neighborhood of " + std::to_string(v) + " links " + std::to_string(g[a]) +
                             " and " + std::to_string(g[b]) + " without an edge");
    }
    if (groups.size() > 3)
        fail(errc::too_many_parts, "neighborhood of " + std::to_string(v) + " splits into " +
                                       std::to_string(groups.size()) + " cliques");
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    CliquePartition p;
    p.center = v;
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Vertex> part = k < groups.size() ? groups[k] : std::vector<Vertex>{};
        part.push_back(v);
        std::sort(part.begin(), part.end());
        p.parts[k] = std::move(part);
    }
    return p;
}

ReconstructionResult reconstruct_base(const Graph& h) {
    StarValidity validity = is_valid_star(h);
    if (!validity.valid) fail(errc::invalid_star, validity.violation());

    std::size_t m = h.vertex_count();
    std::vector<CliquePartition> parts;
    parts.reserve(m);
    for (Vertex v = 0; v < m; ++v) parts.push_back(neighborhood_partition(h, v));

    auto slot_of = [&](Vertex center, Vertex member) -> std::size_t {
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& p = parts[center].parts[k];
            if (std::binary_search(p.begin(), p.end(), member)) return k;
        }
        internal_check(false, "neighbor missing from partition");
        return 0;
    };

    // Glue V-sets along H-edges: for edge (x,y) the part of x containing y and
    // the part of y containing x intersect in {x,y}, so the proof says they
    // are the same set. Checked, then merged.
    UnionFind uf(3 * m);
    for (const auto& [x, y] : h.edges()) {
        std::size_t px = std::size_t(x) * 3 + slot_of(x, y);
        std::size_t py = std::size_t(y) * 3 + slot_of(y, x);
        if (parts[x].parts[px % 3] != parts[y].parts[py % 3])
            fail(errc::gluing_contradiction,
                 "V-sets through edge (" + std::to_string(x) + "," + std::to_string(y) +
                     ") intersect in two vertices but differ: {" +
                     vertex_list(parts[x].parts[px % 3]) + "} vs {" +
                     vertex_list(parts[y].parts[py % 3]) + "}");
        uf.unite(px, py);
    }

    // base vertex ids follow the smallest part id in each class
    std::map<std::size_t, Vertex> root_to_base;
    for (std::size_t p = 0; p < 3 * m; ++p) {
        std::size_t r = uf.find(p);
        if (!root_to_base.count(r)) {
            Vertex id = Vertex(root_to_base.size());
            root_to_base[r] = id;
        }
    }
    std::size_t base_n = root_to_base.size();

    ReconstructionResult res;
    res.vertex_origin.assign(base_n, {});
    std::vector<std::vector<Vertex>> class_centers(base_n);
    for (std::size_t p = 0; p < 3 * m; ++p) {
        Vertex b = root_to_base[uf.find(p)];
        const auto& set = parts[p / 3].parts[p % 3];
        if (res.vertex_origin[b].empty())
            res.vertex_origin[b] = set;
        else if (res.vertex_origin[b] != set)
            fail(errc::gluing_contradiction,
                 "glued class mixes distinct V-sets {" + vertex_list(res.vertex_origin[b]) +
                     "} and {" + vertex_list(set) + "}");
        class_centers[b].push_back(Vertex(p / 3));
    }
    for (std::size_t b = 0; b < base_n; ++b) {
        auto& cs = class_centers[b];
        std::sort(cs.begin(), cs.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
            fail(errc::gluing_contradiction,
                 "two V-sets of one center glued (class {" + vertex_list(res.vertex_origin[b]) +
                     "})");
        // nonsingleton classes close up: the glued sets list exactly the
        // centers whose parts were merged
        if (cs != res.vertex_origin[b] && res.vertex_origin[b].size() > 1)
            fail(errc::gluing_contradiction,
                 "class centers {" + vertex_list(cs) + "} do not match its V-set {" +
                     vertex_list(res.vertex_origin[b]) + "}");
    }

    // adjacency rule: classes are adjacent iff they hold V-sets of one center
    EdgeList edges;
    std::map<std::pair<Vertex, Vertex>, Vertex> edge_center;
    res.triangle_of.assign(m, {});
    for (std::size_t i = 0; i < m; ++i) {
        std::array<Vertex, 3> tri;
        for (std::size_t k = 0; k < 3; ++k) tri[k] = root_to_base[uf.find(i * 3 + k)];
        std::sort(tri.begin(), tri.end());
        if (tri[0] == tri[1] || tri[1] == tri[2])
            fail(errc::gluing_contradiction,
                 "center " + std::to_string(i) + " does not span three classes");
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                auto key = std::make_pair(tri[a], tri[b]);
                auto [it, fresh] = edge_center.emplace(key, i);
                if (!fresh)
                    fail(errc::gluing_contradiction,
                         "edge (" + std::to_string(tri[a]) + "," + std::to_string(tri[b]) +
                             ") built by centers " + std::to_string(it->second) + " and " +
                             std::to_string(i));
                edges.emplace_back(tri[a], tri[b]);
            }
        res.triangle_of[i] = tri;
    }

    res.base = Graph(Vertex(base_n), edges);
    LinearityVerdict verdict = check_locally_linear(res.base);
    if (!verdict.is_locally_linear)
        fail(errc::gluing_contradiction,
             "reconstructed base is not locally linear: " + verdict.witness->describe());

    // the base's triangle graph must come back to H
    StarResult back = star_graph(res.base);
    internal_check(back.triangles.size() == m, "triangle count after reconstruction");
    internal_check(are_isomorphic(back.star, h).has_value(), "star of reconstruction differs from input");
    return res;
}

RoundtripReport roundtrip_check(const Graph& g) {
    require_locally_linear(g);
    Graph h = star_graph(g).star;
    ReconstructionResult rec = reconstruct_base(h);
    RoundtripReport rep;
    rep.base_iso = are_isomorphic(rec.base, g);
    rep.star_iso = are_isomorphic(star_graph(rec.base).star, h);
    rep.ok = rep.base_iso.has_value() && rep.star_iso.has_value();
    return rep;
}

}  // namespace llg
