#ifndef LLG_POLY_HPP
#define LLG_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace llg {

using BigInt = mpz_class;

// Dense integer polynomial, ascending-degree coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPolynomial constant(BigInt v) { return IntPolynomial({std::move(v)}); }
    // x + c
    static IntPolynomial linear(BigInt c) { return IntPolynomial({std::move(c), 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }
    const BigInt& leading() const { return c_.back(); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    BigInt eval(const BigInt& x) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_scale(const IntPolynomial& a, const BigInt& k);
IntPolynomial poly_derivative(const IntPolynomial& a);

// q(x) = p(x + c), exact Taylor shift.
IntPolynomial poly_shift(const IntPolynomial& p, const BigInt& c);

// (x + c)^e
IntPolynomial poly_power_linear(const BigInt& c, unsigned e);

// Exact quotient; nullopt when b does not divide a.
std::optional<IntPolynomial> poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Square-free decomposition p = content * prod f_i^i; returns (i, f_i) with
// deg f_i >= 1, ascending i.
std::vector<std::pair<unsigned, IntPolynomial>> squarefree_decomposition(const IntPolynomial& p);

// All real roots with multiplicity, descending. Exact dyadic bisection on the
// square-free factors; display-grade doubles, never used for verification.
std::vector<double> real_roots(const IntPolynomial& p);

struct FactoredForm {
    BigInt content = 1;                              // sign carried here if leading < 0
    std::vector<std::pair<BigInt, unsigned>> roots;  // integer roots, descending, with multiplicity
    IntPolynomial remainder;                         // integer-root-free cofactor (may be constant 1)
};

// Integer roots split off exactly; the remainder keeps whatever does not
// factor over the rationals.
FactoredForm factor_integer_roots(const IntPolynomial& p);

// "c0 c1 ... cd" ascending.
std::string poly_coeff_string(const IntPolynomial& p);
// Human form, descending: "x^5-4x^3+3x".
std::string poly_pretty(const IntPolynomial& p);
// "x^6(x-2)(x-3)(x-4)(x^2-6x+6)" style.
std::string poly_factored_string(const IntPolynomial& p);

}  // namespace llg

#endif
