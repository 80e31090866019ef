#include "generators.hpp"

#include <random>
#include <set>

#include "error.hpp"

namespace llg {

Graph paley9() {
    // GF(9) = GF(3)[i]/(i^2+1); element (a,b) = a+bi has id 3a+b.
    auto mul = [](std::pair<int, int> x, std::pair<int, int> y) {
        int re = ((x.first * y.first - x.second * y.second) % 3 + 3) % 3;
        int im = (x.first * y.second + x.second * y.first) % 3;
        return std::pair<int, int>{re, im};
    };
    std::set<int> squares;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            auto sq = mul({a, b}, {a, b});
            squares.insert(sq.first * 3 + sq.second);
        }
    EdgeList edges;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) {
            int da = ((u / 3 - v / 3) % 3 + 3) % 3;
            int db = ((u % 3 - v % 3) % 3 + 3) % 3;
            if (squares.count(da * 3 + db)) edges.emplace_back(Vertex(u), Vertex(v));
        }
    return Graph(9, edges);
}

Graph triangular_snake(std::uint32_t t) {
    if (t < 1) fail(errc::invalid_param, "triangle count must be >= 1");
    EdgeList edges;
    for (std::uint32_t i = 1; i <= t; ++i) {
        Vertex prev = i - 1, cur = i, apex = t + i;
        edges.emplace_back(prev, cur);
        edges.emplace_back(prev, apex);
        edges.emplace_back(cur, apex);
    }
    return Graph(2 * t + 1, edges);
}

Graph friendship(std::uint32_t t) {
    if (t < 1) fail(errc::invalid_param, "triangle count must be >= 1");
    EdgeList edges;
    for (std::uint32_t i = 1; i <= t; ++i) {
        Vertex a = 2 * i - 1, b = 2 * i;
        edges.emplace_back(0u, a);
        edges.emplace_back(0u, b);
        edges.emplace_back(a, b);
    }
    return Graph(2 * t + 1, edges);
}

Graph random_triangular_cactus(std::uint32_t t, std::uint64_t seed) {
    if (t < 1) fail(errc::invalid_param, "triangle count must be >= 1");
    std::mt19937_64 rng(seed);
    EdgeList edges{{0, 1}, {0, 2}, {1, 2}};
    Vertex n = 3;
    for (std::uint32_t i = 1; i < t; ++i) {
        Vertex at = Vertex(std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng));
        Vertex a = n, b = n + 1;
        edges.emplace_back(at, a);
        edges.emplace_back(at, b);
        edges.emplace_back(a, b);
        n += 2;
    }
    return Graph(n, edges);
}

namespace {

struct Build {
    Vertex n = 0;
    EdgeList edges;
    std::vector<std::set<Vertex>> adj;

    bool edge_exists(Vertex u, Vertex v) const { return adj[u].count(v) > 0; }

    bool have_common_neighbor(Vertex u, Vertex v) const {
        for (Vertex w : adj[u])
            if (adj[v].count(w)) return true;
        return false;
    }

    void add_triangle(Vertex a, Vertex b, Vertex c) {
        for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
            edges.emplace_back(u, v);
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    Vertex fresh() {
        adj.emplace_back();
        return n++;
    }
};

}  // namespace

Graph random_locally_linear(std::uint32_t t, double merge_bias, std::uint64_t seed) {
    if (t < 1) fail(errc::invalid_param, "triangle count must be >= 1");
    if (merge_bias < 0.0 || merge_bias > 1.0) fail(errc::invalid_param, "merge_bias must be in [0,1]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Build b;

    for (std::uint32_t i = 0; i < t; ++i) {
        const int max_attempts = 64;
        bool placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
            // Pick up to three distinct existing vertices, one coin per slot.
            std::vector<Vertex> reuse;
            for (int slot = 0; slot < 3; ++slot) {
                if (b.n == 0 || coin(rng) >= merge_bias) continue;
                Vertex v = Vertex(std::uniform_int_distribution<std::uint32_t>(0, b.n - 1)(rng));
                bool dup = false;
                for (Vertex r : reuse) dup = dup || r == v;
                if (!dup) reuse.push_back(v);
            }
            // Reused vertices must be pairwise nonadjacent with no common
            // neighbor, or a new edge would close a second triangle.
            bool ok = true;
            for (std::size_t x = 0; x < reuse.size() && ok; ++x)
                for (std::size_t y = x + 1; y < reuse.size() && ok; ++y)
                    ok = !b.edge_exists(reuse[x], reuse[y]) && !b.have_common_neighbor(reuse[x], reuse[y]);
            if (!ok) continue;
            while (reuse.size() < 3) reuse.push_back(b.fresh());
            b.add_triangle(reuse[0], reuse[1], reuse[2]);
            placed = true;
        }
        if (!placed) fail(errc::retry_exhausted, "could not place triangle " + std::to_string(i) + "; retry with a new seed");
    }
    return Graph(b.n, b.edges);
}

}  // namespace llg
