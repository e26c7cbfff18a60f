#pragma once

#include "errors.hpp"
#include "integers.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace spinq {

/// Dense matrix over the integers with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw DimensionMismatch("ragged initializer for IntMatrix");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(const IntVector& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(a.rows() + i, a.cols() + j) = b(i, j);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_diagonal() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p(i, j) += a * o(k, j);
            }
        return p;
    }

    IntVector operator*(const IntVector& v) const {
        if (cols_ != v.size())
            throw DimensionMismatch("matrix-vector shape mismatch");
        IntVector w(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) w[i] += (*this)(i, j) * v[j];
        return w;
    }

    IntVector column(std::size_t j) const {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    // Elementary operations; normal form routines track them in transform matrices.
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) += c * (*this)(j, k);
    }

    /// col_j += c * col_i
    void add_col_multiple(std::size_t j, std::size_t i, const Int& c) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, j) += c * (*this)(k, i);
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = -(*this)(i, k);
    }

    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, j) = -(*this)(k, j);
    }

    /// Fraction-free Gaussian elimination (Bareiss); exact at every step.
    Int determinant() const {
        if (!is_square())
            throw DimensionMismatch("determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t r = k + 1;
                while (r < n && m(r, k) == 0) ++r;
                if (r == n) return 0;
                m.swap_rows(k, r);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
    }
    return os << "]";
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum shape mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference shape mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline IntVector operator-(const IntVector& a) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline IntVector operator*(const Int& c, const IntVector& a) {
    IntVector b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = c * a[i];
    return b;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot product shape mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Matrix of exact rationals; only what the integer routines need.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact inverse over Q by Gauss-Jordan elimination.
inline RationalMatrix inverse_rational(const IntMatrix& m) {
    if (!m.is_square())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n)
            throw SingularMatrix("matrix has no inverse");
        std::swap(a[k], a[piv]);
        const Rational d = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
    return inv;
}

} // namespace spinq
