#ifndef LLG_CYCLES_HPP
#define LLG_CYCLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace llg {

// Induced k-cycles in canonical rotation: smallest vertex first, then its
// smaller cycle-neighbor; no rotation/reflection duplicates. Sorted.
struct CycleSet {
    unsigned length = 0;
    std::vector<std::vector<Vertex>> cycles;
};

CycleSet count_induced_cycles(const Graph& h, unsigned k);

// Pairs (cycle in G*, cycle in G); the G-cycle vertices are the pairwise
// intersections of consecutive triangles of the G*-cycle.
struct CycleBijection {
    unsigned length = 0;
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> pairs;
};

CycleBijection quadrilateral_bijection(const Graph& g);
CycleBijection pentagon_bijection(const Graph& g);

struct HexCounterexample {
    Graph graph;
    std::size_t c6_base = 0;
    std::size_t c6_star = 0;
    std::string description;
};

// Two locally linear graphs from a bounded deterministic search: first has an
// induced C6 that does not survive into G*, second has one in G* with no
// preimage in G.
std::pair<HexCounterexample, HexCounterexample> find_hexagon_counterexamples();

}  // namespace llg

#endif
