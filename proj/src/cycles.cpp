#include "cycles.hpp"

#include <algorithm>
#include <optional>

#include "error.hpp"
#include "local_linear.hpp"
#include "star.hpp"

namespace llg {

namespace {

// Canonical tuple when s (sorted) induces a single |s|-cycle, else nullopt.
std::optional<std::vector<Vertex>> cycle_tuple(const Graph& g, const std::vector<Vertex>& s) {
    std::size_t k = s.size();
    std::vector<std::array<int, 2>> nb(k, {-1, -1});
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!g.adjacent(s[i], s[j])) continue;
            if (nb[i][1] != -1 || nb[j][1] != -1) return std::nullopt;
            nb[i][nb[i][0] == -1 ? 0 : 1] = int(j);
            nb[j][nb[j][0] == -1 ? 0 : 1] = int(i);
            ++edges;
        }
    if (edges != k) return std::nullopt;
    // 2-regular with k edges: a disjoint union of cycles; walk to see whether
    // vertex 0's cycle covers everything. s is ascending, so s[0] is smallest
    // and picking the smaller neighbor fixes the reflection.
    int a = nb[0][0], b = nb[0][1];
    int cur = s[std::size_t(a)] < s[std::size_t(b)] ? a : b;
    std::vector<Vertex> tup{s[0], s[std::size_t(cur)]};
    int prev = 0;
    while (true) {
        int nxt = nb[std::size_t(cur)][0] == prev ? nb[std::size_t(cur)][1] : nb[std::size_t(cur)][0];
        if (nxt == 0) break;
        tup.push_back(s[std::size_t(nxt)]);
        prev = cur;
        cur = nxt;
    }
    if (tup.size() != k) return std::nullopt;
    return tup;
}

void scan_subsets(const Graph& g, unsigned k, Vertex next, std::vector<Vertex>& chosen,
                  std::vector<int>& deg, std::vector<std::vector<Vertex>>& out) {
    if (chosen.size() == k) {
        if (auto tup = cycle_tuple(g, chosen)) out.push_back(std::move(*tup));
        return;
    }
    std::size_t n = g.vertex_count();
    for (Vertex v = next; v + (k - chosen.size()) <= n; ++v) {
        // keep induced degrees <= 2; they only grow as vertices are added
        int dv = 0;
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
            if (!g.adjacent(chosen[i], v)) continue;
            ++dv;
            ok = dv <= 2 && deg[i] < 2;
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (g.adjacent(chosen[i], v)) ++deg[i];
        chosen.push_back(v);
        deg.push_back(dv);
        scan_subsets(g, k, v + 1, chosen, deg, out);
        chosen.pop_back();
        deg.pop_back();
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (g.adjacent(chosen[i], v)) --deg[i];
    }
}

}  // namespace

CycleSet count_induced_cycles(const Graph& h, unsigned k) {
    if (k < 4 || k > 6)
        fail(errc::unsupported_length, "induced cycle length " + std::to_string(k));
    CycleSet cs;
    cs.length = k;
    std::vector<Vertex> chosen;
    std::vector<int> deg;
    scan_subsets(h, k, 0, chosen, deg, cs.cycles);
    std::sort(cs.cycles.begin(), cs.cycles.end());
    return cs;
}

namespace {

std::vector<Vertex> tri_intersection(const Triangle& a, const Triangle& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.v.begin(), a.v.end(), b.v.begin(), b.v.end(), std::back_inserter(out));
    return out;
}

CycleBijection cycle_bijection(const Graph& g, unsigned k) {
    StarResult sr = star_graph(g);
    CycleSet star_cycles = count_induced_cycles(sr.star, k);
    CycleSet base_cycles = count_induced_cycles(g, k);

    CycleBijection bij;
    bij.length = k;
    std::vector<std::vector<Vertex>> images;
    for (const auto& cyc : star_cycles.cycles) {
        std::vector<Vertex> img;
        for (unsigned i = 0; i < k; ++i) {
            const Triangle& t = sr.triangles[cyc[i]];
            const Triangle& u = sr.triangles[cyc[(i + 1) % k]];
            auto inter = tri_intersection(t, u);
            if (inter.size() != 1)
                fail(errc::bijection_failure, "consecutive triangles share " +
                                                  std::to_string(inter.size()) + " vertices");
            img.push_back(inter[0]);
        }
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue;
                if (!tri_intersection(sr.triangles[cyc[i]], sr.triangles[cyc[j]]).empty())
                    fail(errc::bijection_failure, "opposite triangles intersect");
            }
        std::vector<Vertex> sorted_img = img;
        std::sort(sorted_img.begin(), sorted_img.end());
        if (std::adjacent_find(sorted_img.begin(), sorted_img.end()) != sorted_img.end())
            fail(errc::bijection_failure, "intersection vertices collide");
        auto tup = cycle_tuple(g, sorted_img);
        if (!tup) fail(errc::bijection_failure, "image is not an induced cycle");
        if (!std::binary_search(base_cycles.cycles.begin(), base_cycles.cycles.end(), *tup))
            fail(errc::bijection_failure, "image cycle missing from census");
        images.push_back(*tup);
        bij.pairs.emplace_back(cyc, std::move(*tup));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        fail(errc::bijection_failure, "two star cycles map to one base cycle");
    if (images.size() != base_cycles.cycles.size())
        fail(errc::bijection_failure, "map is not onto the base cycles");
    return bij;
}

}  // namespace

CycleBijection quadrilateral_bijection(const Graph& g) { return cycle_bijection(g, 4); }

CycleBijection pentagon_bijection(const Graph& g) { return cycle_bijection(g, 5); }

namespace {

// Hexagon 0..5 with an apex triangle on every side; apexes of opposite sides
// i and i+3 are identified when mask has bit i set.
Graph hexagon_with_merged_apexes(unsigned mask) {
    std::vector<Vertex> apex(6);
    Vertex next = 6;
    for (unsigned i = 0; i < 3; ++i) {
        if (mask & (1u << i)) {
            apex[i] = apex[i + 3] = next++;
        } else {
            apex[i] = next++;
            apex[i + 3] = next++;
        }
    }
    EdgeList e;
    for (Vertex i = 0; i < 6; ++i) {
        Vertex j = (i + 1) % 6;
        e.emplace_back(i, j);
        e.emplace_back(i, apex[i]);
        e.emplace_back(j, apex[i]);
    }
    return Graph(next, e);
}

// Ring of six apex triangles on cycle 0..5 plus one chord triangle {i, j, w}.
Graph ring_with_chord_triangle(Vertex i, Vertex j) {
    EdgeList e;
    for (Vertex a = 0; a < 6; ++a) {
        Vertex b = (a + 1) % 6;
        e.emplace_back(a, b);
        e.emplace_back(a, Vertex(6 + a));
        e.emplace_back(b, Vertex(6 + a));
    }
    Vertex w = 12;
    e.emplace_back(i, j);
    e.emplace_back(i, w);
    e.emplace_back(j, w);
    return Graph(13, e);
}

std::optional<HexCounterexample> census_if_counterexample(Graph g, bool base_side,
                                                          std::string description) {
    if (!check_locally_linear(g).is_locally_linear) return std::nullopt;
    std::size_t cb = count_induced_cycles(g, 6).cycles.size();
    std::size_t cs = count_induced_cycles(star_graph(g).star, 6).cycles.size();
    bool hit = base_side ? cb > cs : cs > cb;
    if (!hit) return std::nullopt;
    return HexCounterexample{std::move(g), cb, cs, std::move(description)};
}

}  // namespace

std::pair<HexCounterexample, HexCounterexample> find_hexagon_counterexamples() {
    std::optional<HexCounterexample> base_side;
    for (unsigned mask = 1; mask < 8 && !base_side; ++mask)
        base_side = census_if_counterexample(
            hexagon_with_merged_apexes(mask), true,
            "hexagon with apex triangles, opposite apexes merged (mask " + std::to_string(mask) +
                ")");
    if (!base_side) fail(errc::search_exhausted, "no base-side hexagon counterexample found");

    std::optional<HexCounterexample> star_side;
    for (Vertex i = 0; i < 6 && !star_side; ++i)
        for (Vertex j = i + 2; j < 6 && !star_side; ++j) {
            if (i == 0 && j == 5) continue;
            star_side = census_if_counterexample(
                ring_with_chord_triangle(i, j), false,
                "six-triangle ring with chord triangle at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
        }
    if (!star_side) fail(errc::search_exhausted, "no star-side hexagon counterexample found");
    return {std::move(*base_side), std::move(*star_side)};
}

}  // namespace llg
