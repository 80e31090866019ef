#include <doctest.h>

#include <numeric>

#include "error.hpp"
#include "graph.hpp"

using namespace llg;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("edge list canonicalization") {
    Graph g(3, {{2, 1}, {0, 1}, {1, 2}, {1, 0}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == EdgeList{{0, 1}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("duplicate reversed pair collapses") {
    Graph g(2, {{0, 1}, {1, 0}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("self loop and range errors") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    try {
        Graph(3, {{0, 5}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::endpoint_out_of_range);
    }
    try {
        Graph(3, {{2, 2}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::self_loop);
    }
}

TEST_CASE("degree sum equals twice edge count") {
    Graph g = k4();
    std::size_t total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
}

TEST_CASE("isolated vertices representable") {
    Graph g(5, {{0, 1}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.degree(4) == 0);
    CHECK(g.neighbors(4).empty());
}

TEST_CASE("induced subgraph relabels ascending") {
    Graph g = k4();
    auto sub = induced_subgraph(g, {3, 1});
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.labels == std::vector<Vertex>{1, 3});
}

TEST_CASE("induced subgraph on all vertices is the graph") {
    Graph g = k4();
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced_subgraph(g, all).graph == g);
}

TEST_CASE("induced subgraph rejects out-of-range vertices") {
    CHECK_THROWS_AS(induced_subgraph(k4(), {0, 7}), Error);
}

TEST_CASE("common neighbors") {
    Graph g = k4();
    CHECK(common_neighbor_count(g, 0, 1) == 2);
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(common_neighbor_count(path, 0, 2) == 1);
    CHECK(common_neighbor_count(path, 0, 1) == 0);
}

TEST_CASE("parse and format edge list") {
    Graph g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(format_edge_list(g) == "3 3\n0 1\n0 2\n1 2\n");  // canonical edge order
}

TEST_CASE("parse accepts comments and blank lines") {
    Graph g = parse_edge_list("# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), Error);
    CHECK_THROWS_AS(parse_edge_list("2 1\n"), Error);          // missing edge line
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n0 1\n"), Error);  // extra edge line
    CHECK_THROWS_AS(parse_edge_list("2 x\n"), Error);
    try {
        parse_edge_list("2 2\n0 1\n");
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("round trip through text") {
    Graph g = k4();
    CHECK(parse_edge_list(format_edge_list(g)) == g);
}

TEST_CASE("load reports missing file") {
    try {
        load_edge_list("/nonexistent/path/g.edges");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_error);
    }
}

TEST_CASE("dot export") {
    Graph g(3, {{0, 1}});
    std::string dot = format_dot(g);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("2;") != std::string::npos);  // isolated vertex listed
}
