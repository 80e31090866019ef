#ifndef LLG_SPECTRAL_HPP
#define LLG_SPECTRAL_HPP

#include <optional>

#include "graph.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace llg {

IntMatrix adjacency_matrix(const Graph& g);

// A + D/2 for a locally linear graph (all degrees even); asserted equal to
// B*B^T where B is the vertex-triangle incidence matrix.
IntMatrix half_laplacian_like(const Graph& g);

// B^T*B; asserted equal to adjacency(star(G)) + 3I.
IntMatrix star_adjacency_plus_3I(const Graph& g);

struct RegularCase {
    unsigned k = 0;  // valency
    IntPolynomial alt_rhs;
    bool alt_holds = false;
};

// lhs is always P_A* (degree m). rhs is (x+3)^(m-n) * P_{A+D/2}(x+3) with a
// negative exponent realized as exact division; the identity itself is checked
// cross-multiplied so everything stays in the polynomial ring.
struct TheoremReport {
    std::size_t n = 0;  // |V(G)|
    std::size_t m = 0;  // |V(G*)| = number of triangles
    IntPolynomial lhs;
    IntPolynomial rhs;
    bool holds = false;
    std::optional<RegularCase> regular_case;
};

TheoremReport verify_theorem1(const Graph& g);

}  // namespace llg

#endif
