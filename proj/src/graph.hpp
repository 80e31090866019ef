#ifndef LLG_GRAPH_HPP
#define LLG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace llg {

using Vertex = std::uint32_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Undirected simple graph over dense vertex ids 0..n-1, stored as a canonical
// sorted edge set. Vertices may be isolated (n can exceed the largest
// endpoint). Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Canonicalizes: (v,u)/(u,v) and duplicate pairs collapse, self-loops and
    // out-of-range endpoints are rejected.
    Graph(Vertex n, const EdgeList& pairs);

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    const EdgeList& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    // Row of the adjacency matrix as 64-bit blocks; words_per_row() blocks.
    const std::uint64_t* row_bits(Vertex v) const { return bits_.data() + std::size_t(v) * words_; }
    std::size_t words_per_row() const { return words_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    Vertex n_ = 0;
    std::size_t words_ = 0;
    EdgeList edges_;                         // sorted, u < v
    std::vector<std::vector<Vertex>> adj_;   // sorted neighbor lists
    std::vector<std::uint64_t> bits_;        // adjacency rows
};

Graph graph_from_edge_list(Vertex n, const EdgeList& pairs);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> labels;  // labels[i] = original id of subgraph vertex i
};

// Subgraph induced on S, relabeled 0..|S|-1 in ascending original-id order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

// Edge-list text format: first line "n m", then m lines "u v"; '#' starts a
// comment, blank lines are skipped.
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);
std::string format_edge_list(const Graph& g);
std::string format_dot(const Graph& g);

}  // namespace llg

#endif
