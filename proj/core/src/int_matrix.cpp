#include "xring/int_matrix.hpp"

#include <stdexcept>

namespace xring {

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix: ragged rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    }
    return m;
}

namespace {

// Cofactor expansion; the matrices here are tiny (rank of Z^n presets).
Int det_recursive(const IntMatrix& m, std::vector<size_t>& cols, size_t row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    Int sum = 0;
    for (size_t i = 0; i < cols.size(); ++i) {
        size_t c = cols[i];
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j) {
            if (j != i) rest.push_back(cols[j]);
        }
        Int minor = det_recursive(m, rest, row + 1);
        if (i % 2 == 0) {
            sum += m.at(row, c) * minor;
        } else {
            sum -= m.at(row, c) * minor;
        }
    }
    return sum;
}

}  // namespace

Int IntMatrix::determinant() const {
    if (!is_square()) {
        throw std::invalid_argument("determinant of non-square matrix");
    }
    if (rows_ == 0) return 1;
    std::vector<size_t> cols(cols_);
    for (size_t i = 0; i < cols_; ++i) cols[i] = i;
    return det_recursive(*this, cols, 0);
}

IntMatrix IntMatrix::unimodular_inverse() const {
    Int det = determinant();
    if (det != 1 && det != -1) {
        throw std::domain_error("matrix is not unimodular (det must be +-1)");
    }
    const size_t n = rows_;
    IntMatrix adj(n, n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            // Minor with row r and column c removed, with checkerboard sign.
            IntMatrix minor(n - 1, n - 1);
            for (size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor.at(mi, mj) = at(i, j);
                    ++mj;
                }
                ++mi;
            }
            Int cof = (n == 1) ? Int(1) : minor.determinant();
            if ((r + c) % 2 == 1) cof = -cof;
            adj.at(c, r) = cof * det;  // det is +-1, so this divides exactly
        }
    }
    return adj;
}

IntMatrix IntMatrix::power(long k) const {
    if (!is_square()) {
        throw std::invalid_argument("power of non-square matrix");
    }
    IntMatrix base = (k < 0) ? unimodular_inverse() : *this;
    unsigned long e = (k < 0) ? static_cast<unsigned long>(-(k + 1)) + 1ul : static_cast<unsigned long>(k);
    IntMatrix result = identity(rows_);
    while (e > 0) {
        if (e & 1ul) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    std::vector<Int> out(rows_, Int(0));
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    }
    return out;
}

Int IntMatrix::bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rows_ || y.size() != cols_) {
        throw std::invalid_argument("bilinear form dimension mismatch");
    }
    Int out = 0;
    for (size_t r = 0; r < rows_; ++r) {
        if (x[r] == 0) continue;
        for (size_t c = 0; c < cols_; ++c) out += x[r] * at(r, c) * y[c];
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    IntMatrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r) {
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.at(r, k) == 0) continue;
            for (size_t c = 0; c < b.cols_; ++c) {
                out.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix difference dimension mismatch");
    }
    IntMatrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool IntMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != -at(c, r)) return false;
        }
    }
    return true;
}

}  // namespace xring
