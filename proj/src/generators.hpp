#ifndef LLG_GENERATORS_HPP
#define LLG_GENERATORS_HPP

#include <cstdint>

#include "graph.hpp"

namespace llg {

// Paley graph on 9 vertices: pairs over GF(3) with adjacency iff the
// difference is a nonzero square of GF(9). Strongly regular (9,4,1,2).
Graph paley9();

// Path of t triangles, consecutive ones sharing a path vertex: vertices
// v0..vt (ids 0..t) plus apexes a1..at (ids t+1..2t), triangle i on
// {v_{i-1}, v_i, a_i}.
Graph triangular_snake(std::uint32_t t);

// t triangles all through vertex 0; outer vertices 1..2t.
Graph friendship(std::uint32_t t);

// Connected cactus of t triangles, each new one glued at a uniformly chosen
// existing vertex. Deterministic for a fixed seed.
Graph random_triangular_cactus(std::uint32_t t, std::uint64_t seed);

// t triangles where each new one reuses 0-3 existing vertices (reuse
// probability merge_bias per slot), rejecting choices that would put an edge
// in two triangles. Always locally linear; deterministic for a fixed seed.
Graph random_locally_linear(std::uint32_t t, double merge_bias, std::uint64_t seed);

}  // namespace llg

#endif
