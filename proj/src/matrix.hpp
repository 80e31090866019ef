#ifndef LLG_MATRIX_HPP
#define LLG_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "poly.hpp"

namespace llg {

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_transpose(const IntMatrix& a);
IntMatrix mat_scale(const IntMatrix& a, const BigInt& k);
BigInt mat_trace(const IntMatrix& a);

// Characteristic polynomial det(xI - A), monic, exact (Faddeev-LeVerrier;
// every trace division is exact over the integers).
IntPolynomial charpoly_exact(const IntMatrix& a);

}  // namespace llg

#endif
