#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sapp/errors.hpp"
#include "sapp/scalar.hpp"

namespace sapp {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> basis_vector(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <class K>
bool is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class K>
Vec<K> scaled(Vec<K> a, const K& s) {
    for (auto& x : a) x *= s;
    return a;
}

// Dense row-major matrix. Used for linear maps (column j is the image of e_j),
// bilinear forms (B[i][j] = B(e_i, e_j)) and 2-tensors (r[i][j] is the
// coefficient of e_i (x) e_j).
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Matrix square(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<K>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec<K> column(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec<K> row(std::size_t i) const {
        return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    Vec<K> apply(const Vec<K>& x) const {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
        Vec<K> y(rows_, K(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (x[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const K& m = (*this)(i, j);
                if (!m.is_zero()) y[i] += m * x[j];
            }
        }
        return y;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const K& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
    friend Matrix operator*(const K& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const K& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

template <class K>
using LinearMap = Matrix<K>;
template <class K>
using BilinearForm = Matrix<K>;
template <class K>
using Tensor2 = Matrix<K>;

// t[i][j][k] is the coefficient of e_i (x) e_j (x) e_k.
template <class K>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n, K(0)) {}

    std::size_t dim() const { return n_; }
    K& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const K& operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }
    const std::vector<K>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor3& operator+=(const Tensor3& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, const K& s) {
        for (auto& x : a.a_) x *= s;
        return a;
    }
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    void check_same(const Tensor3& o) const {
        if (n_ != o.n_) throw DimensionMismatch("tensor dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<K> a_;
};

// Gaussian elimination to reduced row echelon form; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = K(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
    return m.is_square() && rank(m) == m.rows();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularForm();
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Basis of the right kernel {x : m x = 0}.
template <class K>
std::vector<Vec<K>> kernel(Matrix<K> m) {
    auto piv = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sapp
