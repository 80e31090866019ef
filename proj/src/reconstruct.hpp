#ifndef LLG_RECONSTRUCT_HPP
#define LLG_RECONSTRUCT_HPP

#include <array>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "iso.hpp"

namespace llg {

// N(center) split into maximal cliques, each part augmented with the center,
// padded with singleton {center} parts to exactly three. Parts are sorted
// vertex lists, ordered by smallest non-center member; pads last.
struct CliquePartition {
    Vertex center = 0;
    std::array<std::vector<Vertex>, 3> parts;
};

// Fails with NotClusterNeighborhood when N(v) is not a disjoint union of
// cliques (induced diamond through v) and TooManyParts when it has more than
// three cliques (induced 4-star at v).
CliquePartition neighborhood_partition(const Graph& h, Vertex v);

struct ReconstructionResult {
    Graph base;
    // base vertex -> the glued V-set as sorted H-vertices
    std::vector<std::vector<Vertex>> vertex_origin;
    // H vertex -> its triangle in the base
    std::vector<std::array<Vertex, 3>> triangle_of;
};

// Inverse of star_graph: rebuilds the locally linear base whose triangle
// graph is h. The gluing argument's unreachable branches are live checks: any
// violated assumption raises GluingContradiction.
ReconstructionResult reconstruct_base(const Graph& h);

struct RoundtripReport {
    bool ok = false;
    std::optional<IsoCertificate> base_iso;  // reconstruct(star(G)).base -> G
    std::optional<IsoCertificate> star_iso;  // star(reconstructed base) -> star(G)
};

RoundtripReport roundtrip_check(const Graph& g);

}  // namespace llg

#endif
