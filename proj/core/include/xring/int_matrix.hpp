#pragma once

#include "xring/rational.hpp"

#include <vector>

namespace xring {

/// Dense square-ish integer matrix; just enough linear algebra for
/// automorphism actions on Z^n and bilinear cocycles.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    Int determinant() const;
    /// Inverse of a unimodular matrix (det = +-1) via the adjugate.
    /// Throws std::domain_error otherwise.
    IntMatrix unimodular_inverse() const;
    /// M^k for any integer k (negative powers through the unimodular inverse).
    IntMatrix power(long k) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;
    /// x^T * this * y.
    Int bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    bool is_antisymmetric() const;
    bool is_square() const { return rows_ == cols_; }

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace xring
