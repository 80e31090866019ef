#include "spectral.hpp"

#include "error.hpp"
#include "local_linear.hpp"
#include "star.hpp"

namespace llg {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    return a;
}

namespace {

IntMatrix incidence_as_matrix(const IncidenceMatrix& b) {
    IntMatrix m(b.rows, b.cols);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) m.at(i, j) = int(b.at(i, j));
    return m;
}

}  // namespace

IntMatrix half_laplacian_like(const Graph& g) {
    require_locally_linear(g);
    std::size_t n = g.vertex_count();
    IntMatrix m = adjacency_matrix(g);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t d = g.degree(Vertex(v));
        if (d % 2 != 0) fail(errc::odd_degree, "vertex " + std::to_string(v) + " has odd degree");
        m.at(v, v) = BigInt(static_cast<unsigned long>(d / 2));
    }
    IntMatrix b = incidence_as_matrix(triangle_incidence(g));
    internal_check(mat_mul(b, mat_transpose(b)) == m, "BB^T != A + D/2");
    return m;
}

IntMatrix star_adjacency_plus_3I(const Graph& g) {
    StarResult sr = star_graph(g);
    IntMatrix b = incidence_as_matrix(triangle_incidence(g));
    IntMatrix btb = mat_mul(mat_transpose(b), b);
    IntMatrix expect = adjacency_matrix(sr.star);
    for (std::size_t i = 0; i < expect.rows(); ++i) expect.at(i, i) += 3;
    internal_check(btb == expect, "B^TB != A* + 3I");
    return btb;
}

TheoremReport verify_theorem1(const Graph& g) {
    StarResult sr = star_graph(g);
    TheoremReport rep;
    rep.n = g.vertex_count();
    rep.m = sr.triangles.size();
    rep.lhs = charpoly_exact(adjacency_matrix(sr.star));

    IntPolynomial shifted = poly_shift(charpoly_exact(half_laplacian_like(g)), 3);
    if (rep.m >= rep.n) {
        rep.rhs = poly_mul(poly_power_linear(3, unsigned(rep.m - rep.n)), shifted);
        rep.holds = rep.lhs == rep.rhs;
    } else {
        unsigned e = unsigned(rep.n - rep.m);
        IntPolynomial cross = poly_mul(poly_power_linear(3, e), rep.lhs);
        rep.holds = cross == shifted;
        auto reduced = poly_divexact(shifted, poly_power_linear(3, e));
        rep.rhs = reduced ? *reduced : shifted;
    }

    std::size_t n = g.vertex_count();
    bool regular = n > 0;
    std::size_t k = regular ? g.degree(0) : 0;
    for (std::size_t v = 1; v < n && regular; ++v) regular = g.degree(Vertex(v)) == k;
    if (regular) {
        RegularCase rc;
        rc.k = unsigned(k);
        internal_check(k % 2 == 0, "regular valency odd");
        IntPolynomial pa = charpoly_exact(adjacency_matrix(g));
        IntPolynomial shifted_a = poly_shift(pa, 3 - BigInt(static_cast<unsigned long>(k / 2)));
        if (rep.m >= rep.n) {
            rc.alt_rhs = poly_mul(poly_power_linear(3, unsigned(rep.m - rep.n)), shifted_a);
            rc.alt_holds = rep.lhs == rc.alt_rhs;
        } else {
            unsigned e = unsigned(rep.n - rep.m);
            IntPolynomial cross = poly_mul(poly_power_linear(3, e), rep.lhs);
            rc.alt_holds = cross == shifted_a;
            auto reduced = poly_divexact(shifted_a, poly_power_linear(3, e));
            rc.alt_rhs = reduced ? *reduced : shifted_a;
        }
        rep.regular_case = std::move(rc);
    }
    return rep;
}

}  // namespace llg
