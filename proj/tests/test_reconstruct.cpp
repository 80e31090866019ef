#include <doctest.h>

#include <set>

#include "error.hpp"
#include "generators.hpp"
#include "iso.hpp"
#include "local_linear.hpp"
#include "oracles.hpp"
#include "reconstruct.hpp"
#include "star.hpp"

using namespace llg;

namespace {

Graph k33() {
    EdgeList e;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v) e.emplace_back(u, v);
    return Graph(6, e);
}

}  // namespace

TEST_CASE("partition of a K33 vertex: three pads and singles") {
    auto part = neighborhood_partition(k33(), 0);
    CHECK(part.center == 0);
    // neighbors 3, 4, 5 are pairwise nonadjacent: three singleton cliques
    CHECK(part.parts[0] == std::vector<Vertex>{0, 3});
    CHECK(part.parts[1] == std::vector<Vertex>{0, 4});
    CHECK(part.parts[2] == std::vector<Vertex>{0, 5});
}

TEST_CASE("partition pads up to three parts") {
    Graph p2(2, {{0, 1}});
    auto part = neighborhood_partition(p2, 0);
    CHECK(part.parts[0] == std::vector<Vertex>{0, 1});
    CHECK(part.parts[1] == std::vector<Vertex>{0});
    CHECK(part.parts[2] == std::vector<Vertex>{0});

    auto lonely = neighborhood_partition(Graph(1, {}), 0);
    for (auto& p : lonely.parts) CHECK(p == std::vector<Vertex>{0});
}

TEST_CASE("partition keeps whole cliques together") {
    // K5 center 0: one clique part {0,1,2,3,4}
    Graph k5 = star_graph(friendship(5)).star;
    REQUIRE(k5.vertex_count() == 5);
    auto part = neighborhood_partition(k5, 0);
    CHECK(part.parts[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(part.parts[1] == std::vector<Vertex>{0});
}

TEST_CASE("partition rejects a diamond neighborhood") {
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    try {
        neighborhood_partition(diamond, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_cluster_neighborhood);
    }
}

TEST_CASE("partition rejects four cliques") {
    Graph claw(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    try {
        neighborhood_partition(claw, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::too_many_parts);
    }
}

TEST_CASE("reconstruct a triangle from one vertex") {
    auto res = reconstruct_base(Graph(1, {}));
    CHECK(res.base.vertex_count() == 3);
    CHECK(res.base.edge_count() == 3);
    REQUIRE(res.triangle_of.size() == 1);
    CHECK(res.triangle_of[0] == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("reconstruct paley9 from K33") {
    auto res = reconstruct_base(k33());
    CHECK(res.base.vertex_count() == 9);
    CHECK(res.base.edge_count() == 18);
    CHECK(are_isomorphic(res.base, paley9()).has_value());
}

TEST_CASE("reconstruct a snake from a path") {
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto res = reconstruct_base(p5);
    CHECK(res.base.vertex_count() == 11);
    CHECK(are_isomorphic(res.base, triangular_snake(5)).has_value());
}

TEST_CASE("reconstruct friendship from a complete graph") {
    // merged classes here are larger than any single V-set pair intersection
    auto res = reconstruct_base(star_graph(friendship(5)).star);
    CHECK(are_isomorphic(res.base, friendship(5)).has_value());
    std::size_t hub_count = 0;
    for (auto& origin : res.vertex_origin)
        if (origin.size() == 5) ++hub_count;
    CHECK(hub_count == 1);
}

TEST_CASE("reconstruct a pentagon ring from C5") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto res = reconstruct_base(c5);
    CHECK(are_isomorphic(res.base, oracle::pentagon_ring()).has_value());
}

TEST_CASE("vertex origins partition into triangles") {
    Graph h = star_graph(random_triangular_cactus(9, 2)).star;
    auto res = reconstruct_base(h);
    REQUIRE(res.triangle_of.size() == h.vertex_count());
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        auto tri = res.triangle_of[x];
        std::set<Vertex> distinct(tri.begin(), tri.end());
        CHECK(distinct.size() == 3);
        for (Vertex cls : tri) {
            REQUIRE(cls < res.base.vertex_count());
            const auto& origin = res.vertex_origin[cls];
            CHECK(std::binary_search(origin.begin(), origin.end(), x));
        }
    }
    CHECK(check_locally_linear(res.base).is_locally_linear);
}

TEST_CASE("reconstruct refuses invalid stars") {
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    try {
        reconstruct_base(diamond);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_star);
        CHECK(!e.detail().empty());
    }

    Graph claw(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS_AS(reconstruct_base(claw), Error);
}

TEST_CASE("roundtrip on named graphs") {
    for (const Graph& g : {paley9(), triangular_snake(7), friendship(3),
                           Graph(3, {{0, 1}, {0, 2}, {1, 2}}), oracle::pentagon_ring()}) {
        auto rep = roundtrip_check(g);
        CHECK(rep.ok);
        REQUIRE(rep.base_iso.has_value());
        REQUIRE(rep.star_iso.has_value());
        auto res = reconstruct_base(star_graph(g).star);
        CHECK(certificate_valid(res.base, g, *rep.base_iso));
        CHECK(certificate_valid(star_graph(res.base).star, star_graph(g).star, *rep.star_iso));
    }
}

TEST_CASE("roundtrip on random instances") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        CHECK(roundtrip_check(random_triangular_cactus(11, seed)).ok);
        CHECK(roundtrip_check(random_locally_linear(11, 0.7, seed)).ok);
    }
}

TEST_CASE("V-set intersections track adjacency in H") {
    Graph h = star_graph(random_locally_linear(10, 0.5, 9)).star;
    auto res = reconstruct_base(h);
    // reconst vertex x of H maps to V-sets via its triangle; the intersection
    // size of two origins says how x and y relate
    for (Vertex x = 0; x < h.vertex_count(); ++x)
        for (Vertex y = x + 1; y < h.vertex_count(); ++y) {
            std::set<Vertex> sx, sy;
            for (Vertex c : res.triangle_of[x]) sx.insert(c);
            for (Vertex c : res.triangle_of[y]) sy.insert(c);
            std::vector<Vertex> shared;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                  std::back_inserter(shared));
            if (h.adjacent(x, y))
                CHECK(shared.size() == 1);
            else
                CHECK(shared.empty());
        }
}
