#include "matrix.hpp"

#include "error.hpp"

namespace llg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    internal_check(a.rows() == b.rows() && a.cols() == b.cols(), "matrix shape mismatch in add");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    internal_check(a.cols() == b.rows(), "matrix shape mismatch in mul");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mat_transpose(const IntMatrix& a) {
    IntMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
    return c;
}

IntMatrix mat_scale(const IntMatrix& a, const BigInt& k) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) * k;
    return c;
}

BigInt mat_trace(const IntMatrix& a) {
    internal_check(a.rows() == a.cols(), "trace of non-square matrix");
    BigInt t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

IntPolynomial charpoly_exact(const IntMatrix& a) {
    internal_check(a.rows() == a.cols(), "charpoly of non-square matrix");
    std::size_t n = a.rows();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));
    IntMatrix m = a;
    c[n - 1] = -mat_trace(m);
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        m = mat_mul(a, m);
        BigInt t = mat_trace(m);
        internal_check(mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)) != 0,
                       "charpoly trace division");
        c[n - k] = -t / BigInt(static_cast<unsigned long>(k));
    }
    return IntPolynomial(std::move(c));
}

}  // namespace llg
