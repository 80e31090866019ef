#ifndef LLG_ISO_HPP
#define LLG_ISO_HPP

#include <optional>
#include <vector>

#include "graph.hpp"

namespace llg {

// Vertex bijection g -> h. mapping[v in g] = image in h.
struct IsoCertificate {
    std::vector<Vertex> mapping;
};

// Adjacency- and non-adjacency-preserving bijection check, both directions.
bool certificate_valid(const Graph& g, const Graph& h, const IsoCertificate& cert);

// Backtracking search with color refinement; intended for graphs up to a few
// dozen vertices.
std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace llg

#endif
