#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "local_linear.hpp"
#include "reconstruct.hpp"
#include "spectral.hpp"
#include "star.hpp"

namespace llg {

std::string format_decimal3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

TextReport report_verify(const Graph& g) {
    LinearityVerdict v = check_locally_linear(g);
    std::ostringstream os;
    if (v.is_locally_linear) {
        os << "locally-linear: true\n";
        os << "n=" << g.vertex_count() << "\n";
        os << "edges=" << g.edge_count() << "\n";
        os << "triangles=" << enumerate_triangles(g).size() << "\n";
        return {os.str(), true};
    }
    os << "locally-linear: false, witness: " << v.witness->describe() << "\n";
    return {os.str(), false};
}

std::string report_star(const Graph& g) {
    StarResult sr = star_graph(g);
    std::ostringstream os;
    os << format_edge_list(sr.star);
    os << "# star of a graph with " << sr.source_n << " vertices\n";
    for (std::size_t i = 0; i < sr.triangles.size(); ++i) {
        const auto& t = sr.triangles[i].v;
        os << "# triangle " << i << ": " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    return os.str();
}

namespace {

void put_poly(std::ostringstream& os, const std::string& key, const IntPolynomial& p,
              bool with_roots) {
    os << key << ".coeffs=" << poly_coeff_string(p) << "\n";
    os << key << ".factored=" << poly_factored_string(p) << "\n";
    if (!with_roots) return;
    os << key << ".roots=";
    auto roots = real_roots(p);
    for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? " " : "") << format_decimal3(roots[i]);
    os << "\n";
}

}  // namespace

std::string report_charpoly(const Graph& g) {
    StarResult sr = star_graph(g);
    std::ostringstream os;
    os << "n=" << g.vertex_count() << "\n";
    os << "m=" << sr.triangles.size() << "\n";
    put_poly(os, "A", charpoly_exact(adjacency_matrix(g)), false);
    put_poly(os, "A_half_D", charpoly_exact(half_laplacian_like(g)), false);
    put_poly(os, "A_star", charpoly_exact(adjacency_matrix(sr.star)), false);
    return os.str();
}

std::string report_theorem(const Graph& g) {
    TheoremReport rep = verify_theorem1(g);
    std::ostringstream os;
    os << "n=" << rep.n << "\n";
    os << "m=" << rep.m << "\n";
    os << "holds=" << (rep.holds ? "true" : "false") << "\n";
    put_poly(os, "lhs", rep.lhs, true);
    put_poly(os, "rhs", rep.rhs, true);
    os << "regular=" << (rep.regular_case ? "true" : "false") << "\n";
    if (rep.regular_case) {
        os << "k=" << rep.regular_case->k << "\n";
        os << "alt_holds=" << (rep.regular_case->alt_holds ? "true" : "false") << "\n";
        put_poly(os, "alt_rhs", rep.regular_case->alt_rhs, false);
    }
    return os.str();
}

std::string report_census(const Graph& g) {
    Graph star = star_graph(g).star;
    std::ostringstream os;
    for (unsigned k = 4; k <= 6; ++k) {
        std::size_t cb = count_induced_cycles(g, k).cycles.size();
        std::size_t cs = count_induced_cycles(star, k).cycles.size();
        os << "c" << k << ".base=" << cb << "\n";
        os << "c" << k << ".star=" << cs << "\n";
        os << "c" << k << ".match=" << (cb == cs ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string report_reconstruct(const Graph& h) {
    ReconstructionResult rec = reconstruct_base(h);
    std::ostringstream os;
    os << format_edge_list(rec.base);
    for (std::size_t b = 0; b < rec.vertex_origin.size(); ++b) {
        os << "# origin " << b << ":";
        for (Vertex v : rec.vertex_origin[b]) os << " " << v;
        os << "\n";
    }
    for (std::size_t i = 0; i < rec.triangle_of.size(); ++i) {
        const auto& t = rec.triangle_of[i];
        os << "# triangle " << i << ": " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    return os.str();
}

TextReport report_roundtrip(const Graph& g) {
    RoundtripReport rep = roundtrip_check(g);
    std::ostringstream os;
    os << "roundtrip=" << (rep.ok ? "pass" : "fail") << "\n";
    auto put_cert = [&os](const char* key, const std::optional<IsoCertificate>& c) {
        os << key << "=";
        if (c)
            for (std::size_t i = 0; i < c->mapping.size(); ++i)
                os << (i ? " " : "") << c->mapping[i];
        else
            os << "none";
        os << "\n";
    };
    put_cert("base_iso", rep.base_iso);
    put_cert("star_iso", rep.star_iso);
    return {os.str(), rep.ok};
}

std::string report_hex_counterexample(const HexCounterexample& hx, const std::string& path) {
    std::ostringstream os;
    os << "fixture=" << path << "\n";
    os << "description=" << hx.description << "\n";
    os << "c6.base=" << hx.c6_base << "\n";
    os << "c6.star=" << hx.c6_star << "\n";
    return os.str();
}

}  // namespace llg
