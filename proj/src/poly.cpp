#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"

namespace llg {

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_scale(const IntPolynomial& a, const BigInt& k) {
    std::vector<BigInt> c = a.coeffs();
    for (auto& x : c) x *= k;
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_derivative(const IntPolynomial& a) {
    if (a.degree() <= 0) return {};
    std::vector<BigInt> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a[i] * BigInt(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_shift(const IntPolynomial& p, const BigInt& c) {
    if (p.degree() <= 0 || c == 0) return p;
    // Repeated in-place synthetic division by (x - c); the successive
    // remainders are the Taylor coefficients of p at c, i.e. p(x + c).
    std::vector<BigInt> a = p.coeffs();
    std::size_t n = a.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i > k; --i) a[i - 1] += c * a[i];
    }
    return IntPolynomial(std::move(a));
}

IntPolynomial poly_power_linear(const BigInt& c, unsigned e) {
    IntPolynomial acc = IntPolynomial::constant(1);
    IntPolynomial base = IntPolynomial::linear(c);
    for (unsigned i = 0; i < e; ++i) acc = poly_mul(acc, base);
    return acc;
}

std::optional<IntPolynomial> poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> q(a.degree() - b.degree() + 1, 0);
    const BigInt& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[std::size_t(k + b.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        BigInt f = top / lead;
        q[std::size_t(k)] = f;
        for (int i = 0; i <= b.degree(); ++i) rem[std::size_t(k + i)] -= f * b[std::size_t(i)];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

namespace {

BigInt poly_content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = poly_content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
}

// l(v)^(deg u - deg v + 1) * u = q*v + r; returns r.
IntPolynomial pseudo_remainder(IntPolynomial u, const IntPolynomial& v) {
    const BigInt& lead = v.leading();
    int dv = v.degree();
    while (!u.is_zero() && u.degree() >= dv) {
        int k = u.degree() - dv;
        std::vector<BigInt> c(u.coeffs().size(), 0);
        for (std::size_t i = 0; i < u.coeffs().size(); ++i) c[i] = u[i] * lead;
        const BigInt top = u.leading();
        for (int i = 0; i <= dv; ++i) c[std::size_t(k + i)] -= top * v[std::size_t(i)];
        u = IntPolynomial(std::move(c));
    }
    return u;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial u = primitive_part(a);
    IntPolynomial v = primitive_part(b);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (true) {
        if (v.degree() == 0) return IntPolynomial::constant(1);
        IntPolynomial r = pseudo_remainder(u, v);
        if (r.is_zero()) return primitive_part(v);
        u = std::move(v);
        v = primitive_part(r);
    }
}

std::vector<std::pair<unsigned, IntPolynomial>> squarefree_decomposition(const IntPolynomial& p) {
    internal_check(!p.is_zero(), "squarefree decomposition of zero polynomial");
    std::vector<std::pair<unsigned, IntPolynomial>> out;
    if (p.degree() == 0) return out;
    // Musser's algorithm on the primitive part; every quotient below is a
    // product of the squarefree factors, hence exact over the integers.
    IntPolynomial g = poly_gcd(p, poly_derivative(p));
    IntPolynomial b = *poly_divexact(primitive_part(p), g);
    if (g.degree() == 0) {
        out.emplace_back(1, b);
        return out;
    }
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPolynomial c = poly_gcd(b, g);
        IntPolynomial a = *poly_divexact(b, c);
        if (a.degree() > 0) out.emplace_back(i, a);
        if (c.degree() > 0) {
            auto gq = poly_divexact(g, c);
            internal_check(gq.has_value(), "squarefree decomposition division");
            g = *gq;
        }
        b = std::move(c);
        ++i;
    }
    return out;
}

namespace {

// Exact sign of p at the dyadic rational q (doubles are dyadic, so any double
// endpoint converts losslessly via mpq).
int sign_at(const IntPolynomial& p, const mpq_class& q) {
    if (p.is_zero()) return 0;
    const mpz_class num(q.get_num());
    const mpz_class den(q.get_den());
    int d = p.degree();
    BigInt acc = p[std::size_t(d)];
    BigInt dpow = 1;
    for (int i = d - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p[std::size_t(i)] * dpow;
    }
    return sgn(acc);
}

int sign_at(const IntPolynomial& p, double x) { return sign_at(p, mpq_class(x)); }

// Roots of a squarefree polynomial, ascending, no multiplicity.
std::vector<double> roots_squarefree(const IntPolynomial& f) {
    std::vector<double> out;
    int d = f.degree();
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(-f[0].get_d() / f[1].get_d());
        return out;
    }
    if (d == 2) {
        BigInt disc = f[1] * f[1] - 4 * f[2] * f[0];
        if (disc < 0) return out;
        double s = std::sqrt(disc.get_d());
        double a2 = 2.0 * f[2].get_d();
        double r1 = (-f[1].get_d() - s) / a2;
        double r2 = (-f[1].get_d() + s) / a2;
        if (r1 > r2) std::swap(r1, r2);
        out.push_back(r1);
        if (disc > 0) out.push_back(r2);
        return out;
    }
    // Cauchy bound, then bisect between consecutive critical points. f is
    // squarefree so f never vanishes at a root of f'.
    BigInt maxc = 0;
    for (int i = 0; i < d; ++i) {
        BigInt a = abs(f[std::size_t(i)]);
        if (a > maxc) maxc = a;
    }
    BigInt lead = abs(f[std::size_t(d)]);
    BigInt bound = maxc / lead + 2;
    double big = bound.get_d();

    IntPolynomial dsf = f;
    {
        IntPolynomial der = poly_derivative(f);
        IntPolynomial g = poly_gcd(der, poly_derivative(der));
        if (g.degree() > 0) der = *poly_divexact(primitive_part(der), g);
        dsf = der;
    }
    std::vector<double> cuts = roots_squarefree(dsf);
    cuts.insert(cuts.begin(), -big);
    cuts.push_back(big);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        if (!(lo < hi)) continue;
        int slo = sign_at(f, lo);
        int shi = sign_at(f, hi);
        if (slo == 0) {  // critical-point double landed exactly on a root
            out.push_back(lo);
            continue;
        }
        if (shi == 0 || slo == shi) continue;
        for (int it = 0; it < 200; ++it) {
            double mid = lo + (hi - lo) / 2;
            if (mid <= lo || mid >= hi) break;
            int sm = sign_at(f, mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
        out.push_back(lo + (hi - lo) / 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p) {
    std::vector<double> out;
    if (p.is_zero() || p.degree() == 0) return out;
    for (const auto& [mult, f] : squarefree_decomposition(p)) {
        for (double r : roots_squarefree(f))
            for (unsigned k = 0; k < mult; ++k) out.push_back(r);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

FactoredForm factor_integer_roots(const IntPolynomial& p) {
    internal_check(!p.is_zero(), "factoring zero polynomial");
    FactoredForm form;
    form.content = poly_content(p);
    if (p.leading() < 0) form.content = -form.content;
    IntPolynomial rest = primitive_part(p);

    // Integer root candidates come from the isolated real roots of each
    // squarefree factor; each candidate is confirmed by exact evaluation.
    std::vector<BigInt> candidates;
    if (rest.degree() > 0) {
        for (const auto& [mult, f] : squarefree_decomposition(rest)) {
            (void)mult;
            for (double r : roots_squarefree(f)) {
                double n = std::nearbyint(r);
                if (std::abs(r - n) < 1e-6) candidates.emplace_back(long(n));
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), std::greater<BigInt>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const BigInt& r : candidates) {
        unsigned mult = 0;
        while (rest.degree() > 0 && rest.eval(r) == 0) {
            auto q = poly_divexact(rest, IntPolynomial::linear(-r));
            internal_check(q.has_value(), "deflation by confirmed root");
            rest = *q;
            ++mult;
        }
        if (mult > 0) form.roots.emplace_back(r, mult);
    }
    form.remainder = std::move(rest);
    return form;
}

std::string poly_coeff_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += p[i].get_str();
    }
    return s;
}

namespace {

void append_monomial(std::string& s, unsigned e) {
    if (e == 0) return;
    s += 'x';
    if (e > 1) {
        s += '^';
        s += std::to_string(e);
    }
}

}  // namespace

std::string poly_pretty(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p[std::size_t(i)];
        if (c == 0) continue;
        bool first = s.empty();
        if (c < 0)
            s += '-';
        else if (!first)
            s += '+';
        BigInt a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        append_monomial(s, unsigned(i));
    }
    return s;
}

std::string poly_factored_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    FactoredForm f = factor_integer_roots(p);
    std::string s;
    if (f.content != 1) s += f.content.get_str();
    for (const auto& [r, mult] : f.roots)
        if (r == 0) append_monomial(s, mult);
    for (const auto& [r, mult] : f.roots) {
        if (r == 0) continue;
        s += "(x";
        s += (r > 0 ? '-' : '+');
        s += BigInt(abs(r)).get_str();
        s += ')';
        if (mult > 1) {
            s += '^';
            s += std::to_string(mult);
        }
    }
    if (f.remainder.degree() >= 1) {
        s += '(';
        s += poly_pretty(f.remainder);
        s += ')';
    } else if (s.empty()) {
        s = f.remainder.is_zero() ? "0" : "1";
    }
    return s;
}

}  // namespace llg
