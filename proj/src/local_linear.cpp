#include "local_linear.hpp"

#include <algorithm>

#include "error.hpp"

namespace llg {

std::string LinearityWitness::describe() const {
    switch (kind) {
        case Kind::isolated_vertex:
            return "vertex " + std::to_string(u) + " is isolated";
        case Kind::edge_triangle_count:
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") in " + std::to_string(count) +
                   " triangles";
        case Kind::neighborhood_not_linear:
            return "neighborhood of vertex " + std::to_string(u) + " is not 1-regular";
    }
    return "";
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
    // For each edge (u,v), walk the neighbor-set intersection above v so each
    // triangle is produced once with a < b < c; edge order keeps the result
    // lexicographic without a final sort.
    std::vector<Triangle> out;
    for (auto [u, v] : g.edges()) {
        const std::uint64_t* ru = g.row_bits(u);
        const std::uint64_t* rv = g.row_bits(v);
        for (std::size_t w = 0; w < g.words_per_row(); ++w) {
            std::uint64_t both = ru[w] & rv[w];
            while (both) {
                Vertex c = Vertex(w * 64 + std::size_t(__builtin_ctzll(both)));
                both &= both - 1;
                if (c > v) out.push_back(Triangle{{u, v, c}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Definition (a): every vertex has a nonempty neighborhood inducing a
// 1-regular graph.
bool check_by_neighborhoods(const Graph& g, std::optional<LinearityWitness>& witness) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) {
            if (!witness) witness = LinearityWitness{LinearityWitness::Kind::isolated_vertex, v};
            return false;
        }
        for (Vertex x : nb) {
            std::size_t deg_in = 0;
            for (Vertex y : nb)
                if (y != x && g.adjacent(x, y)) ++deg_in;
            if (deg_in != 1) {
                if (!witness) witness = LinearityWitness{LinearityWitness::Kind::neighborhood_not_linear, v};
                return false;
            }
        }
    }
    return true;
}

// Definition (b): no isolated vertices and every edge in exactly one triangle.
bool check_by_triangles(const Graph& g, std::optional<LinearityWitness>& witness) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            if (!witness) witness = LinearityWitness{LinearityWitness::Kind::isolated_vertex, v};
            return false;
        }
    }
    bool ok = true;
    for (auto [u, v] : g.edges()) {
        std::size_t tri = common_neighbor_count(g, u, v);
        if (tri != 1) {
            if (!witness) witness = LinearityWitness{LinearityWitness::Kind::edge_triangle_count, u, v, tri};
            ok = false;
            break;
        }
    }
    return ok;
}

}  // namespace

LinearityVerdict check_locally_linear(const Graph& g) {
    std::optional<LinearityWitness> witness_b;
    bool by_b = check_by_triangles(g, witness_b);
    std::optional<LinearityWitness> witness_a;
    bool by_a = check_by_neighborhoods(g, witness_a);
    internal_check(by_a == by_b, "locally-linear definitions disagree");
    if (by_b) return {true, std::nullopt};
    return {false, witness_b ? witness_b : witness_a};
}

void require_locally_linear(const Graph& g) {
    LinearityVerdict verdict = check_locally_linear(g);
    if (!verdict.is_locally_linear)
        fail(errc::not_locally_linear, verdict.witness ? verdict.witness->describe() : "not locally linear");
}

IncidenceMatrix triangle_incidence(const Graph& g) {
    require_locally_linear(g);
    std::vector<Triangle> tris = enumerate_triangles(g);
    IncidenceMatrix b;
    b.rows = g.vertex_count();
    b.cols = tris.size();
    b.data.assign(b.rows * b.cols, 0);
    for (std::size_t j = 0; j < tris.size(); ++j)
        for (Vertex v : tris[j].v) b.data[std::size_t(v) * b.cols + j] = 1;
    return b;
}

}  // namespace llg
