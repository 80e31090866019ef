#ifndef LLG_LOCAL_LINEAR_HPP
#define LLG_LOCAL_LINEAR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace llg {

// Sorted vertex triple; all three pairs are edges of the host graph.
struct Triangle {
    std::array<Vertex, 3> v;
    bool operator==(const Triangle& o) const { return v == o.v; }
    bool operator<(const Triangle& o) const { return v < o.v; }
};

// All triangles in lexicographic order. The position in this list is the
// triangle id used by the incidence matrix and the star graph.
std::vector<Triangle> enumerate_triangles(const Graph& g);

struct LinearityWitness {
    enum class Kind { isolated_vertex, edge_triangle_count, neighborhood_not_linear };
    Kind kind;
    Vertex u = 0;
    Vertex v = 0;           // second endpoint for edge witnesses
    std::size_t count = 0;  // triangle count for edge witnesses
    std::string describe() const;
};

struct LinearityVerdict {
    bool is_locally_linear;
    std::optional<LinearityWitness> witness;  // present iff not locally linear
};

// Decided through both equivalent definitions (1-regular neighborhoods;
// every edge in exactly one triangle, no isolated vertex), which must agree.
LinearityVerdict check_locally_linear(const Graph& g);

// Throws NotLocallyLinear carrying the witness description.
void require_locally_linear(const Graph& g);

// n x m 0/1 vertex-triangle incidence matrix. Column j has exactly three
// 1-entries; row i sums to degree(i)/2.
struct IncidenceMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;  // row-major
    std::uint8_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

IncidenceMatrix triangle_incidence(const Graph& g);

}  // namespace llg

#endif
