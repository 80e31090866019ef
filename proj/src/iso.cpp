#include "iso.hpp"

#include <algorithm>
#include <map>

namespace llg {

bool certificate_valid(const Graph& g, const Graph& h, const IsoCertificate& cert) {
    const Vertex n = g.vertex_count();
    if (h.vertex_count() != n || cert.mapping.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Vertex v = 0; v < n; ++v) {
        Vertex w = cert.mapping[v];
        if (w >= n || hit[w]) return false;
        hit[w] = true;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(cert.mapping[u], cert.mapping[v])) return false;
    return true;
}

namespace {

// Iterated neighbor-color refinement (degree is the initial color). Returns a
// stable coloring with colors renumbered into a canonical order shared by both
// graphs when their multisets agree.
std::vector<int> refine_colors(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = int(g.degree(v));
    for (int round = 0; round < int(n); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        for (Vertex v = 0; v < n; ++v) next_ids.emplace(sig[v], 0);
        int id = 0;
        for (auto& [key, val] : next_ids) val = id++;
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v) next[v] = next_ids[sig[v]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct Search {
    const Graph& g;
    const Graph& h;
    std::vector<int> gcolor, hcolor;
    std::vector<Vertex> order;           // source vertices, fixed order
    std::vector<Vertex> mapping;         // g -> h, n = unassigned
    std::vector<bool> used;              // h side
    Vertex n;

    bool consistent(Vertex v, Vertex w) const {
        if (gcolor[v] != hcolor[w]) return false;
        for (Vertex u = 0; u < n; ++u) {
            if (mapping[u] == n) continue;
            if (g.adjacent(u, v) != h.adjacent(mapping[u], w)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        Vertex v = order[depth];
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || !consistent(v, w)) continue;
            mapping[v] = w;
            used[w] = true;
            if (extend(depth + 1)) return true;
            mapping[v] = n;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h) {
    const Vertex n = g.vertex_count();
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return IsoCertificate{{}};

    std::vector<int> gc = refine_colors(g);
    std::vector<int> hc = refine_colors(h);
    {
        std::vector<int> a(gc), b(hc);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Assign vertices most-constrained-first: start from the rarest color
    // class, then always prefer vertices with many already-placed neighbors.
    std::vector<int> class_size(size_t(*std::max_element(gc.begin(), gc.end())) + 1, 0);
    for (Vertex v = 0; v < n; ++v) ++class_size[gc[v]];
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        Vertex best = n;
        long best_key = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            long mapped_nb = 0;
            for (Vertex w : g.neighbors(v))
                if (placed[w]) ++mapped_nb;
            long key = mapped_nb * 1000000L + long(n - class_size[gc[v]]) * 100 + long(g.degree(v));
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    Search s{g, h, std::move(gc), std::move(hc), std::move(order), std::vector<Vertex>(n, n),
             std::vector<bool>(n, false), n};
    if (!s.extend(0)) return std::nullopt;
    return IsoCertificate{std::move(s.mapping)};
}

}  // namespace llg
