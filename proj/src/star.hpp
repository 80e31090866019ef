#ifndef LLG_STAR_HPP
#define LLG_STAR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "local_linear.hpp"

namespace llg {

// The triangle graph of a locally linear G: one vertex per triangle, edges
// between triangles sharing exactly one vertex of G.
struct StarResult {
    Graph star;
    std::vector<Triangle> triangles;  // star vertex i corresponds to triangles[i]
    Vertex source_n = 0;
};

StarResult star_graph(const Graph& g);

// Lexicographically first 4-set inducing K4 minus one edge, if any.
std::optional<std::array<Vertex, 4>> find_induced_diamond(const Graph& h);

// Lexicographically first 5-set inducing a 4-star (center plus four pairwise
// nonadjacent leaves), if any.
std::optional<std::array<Vertex, 5>> find_induced_k14(const Graph& h);

struct CommonNeighborStat {
    std::size_t max_count = 0;
    std::optional<std::pair<Vertex, Vertex>> witness;  // first nonadjacent pair attaining the max
};

// Maximum |N(u) ∩ N(v)| over nonadjacent pairs; 0 with no witness when the
// graph is complete. Requires at least two vertices.
CommonNeighborStat max_common_neighbors_nonadjacent(const Graph& h);

struct StarValidity {
    bool valid = false;
    std::optional<std::array<Vertex, 4>> diamond;
    std::optional<std::array<Vertex, 5>> k14;
    std::string violation() const;  // empty when valid
};

// Necessary conditions for being some G's triangle graph: no induced diamond,
// no induced 4-star. Realizability is settled constructively by reconstruction.
StarValidity is_valid_star(const Graph& h);

}  // namespace llg

#endif
