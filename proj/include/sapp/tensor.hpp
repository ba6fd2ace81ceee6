#pragma once

#include <vector>

#include "sapp/dense.hpp"

namespace sapp {

template <class K>
Tensor2<K> tau(const Tensor2<K>& r) {
    return r.transpose();
}

// Cyclic shift x (x) y (x) z -> y (x) z (x) x.
template <class K>
Tensor3<K> xi(const Tensor3<K>& t) {
    std::size_t n = t.dim();
    Tensor3<K> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(k, i, j);
    return out;
}

// Swap of the first two slots of a 3-tensor.
template <class K>
Tensor3<K> tau12(const Tensor3<K>& t) {
    std::size_t n = t.dim();
    Tensor3<K> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(j, i, k);
    return out;
}

// r^sharp : A* -> A, e*_i |-> sum_j r_ij e_j.
template <class K>
LinearMap<K> sharp(const Tensor2<K>& r) {
    return r.transpose();
}

template <class K>
Tensor2<K> unsharp(const LinearMap<K>& m) {
    return m.transpose();
}

// B^natural : A -> A*, e_i |-> sum_j B(e_i, e_j) e*_j.
template <class K>
LinearMap<K> natural(const BilinearForm<K>& b) {
    return b.transpose();
}

template <class K>
BilinearForm<K> form_from_natural(const LinearMap<K>& m) {
    return m.transpose();
}

template <class K>
Tensor2<K> phi_from_form(const BilinearForm<K>& b) {
    return unsharp(inverse(natural(b)));
}

template <class K>
K form_value(const BilinearForm<K>& b, const Vec<K>& x, const Vec<K>& y) {
    K s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) s += x[i] * b(i, j) * y[j];
    }
    return s;
}

// P-hat with B(P-hat x, y) = B(x, P y).
template <class K>
LinearMap<K> adjoint_wrt_form(const LinearMap<K>& p, const BilinearForm<K>& b) {
    if (!p.is_square() || p.rows() != b.rows()) throw DimensionMismatch("adjoint: shape mismatch");
    Matrix<K> binv_t = inverse(b).transpose();
    return binv_t * p.transpose() * b.transpose();
}

template <class K>
LinearMap<K> dual_map(const LinearMap<K>& p) {
    return p.transpose();
}

// (F (x) G) r.
template <class K>
Tensor2<K> apply_map_tensor(const LinearMap<K>& f, const LinearMap<K>& g, const Tensor2<K>& r) {
    if (f.cols() != r.rows() || g.cols() != r.cols()) throw DimensionMismatch("apply_map_tensor: slot mismatch");
    return f * r * g.transpose();
}

// (F (x) G (x) H) t.
template <class K>
Tensor3<K> apply_map_tensor(const LinearMap<K>& f, const LinearMap<K>& g, const LinearMap<K>& h,
                            const Tensor3<K>& t) {
    std::size_t n = t.dim();
    if (f.cols() != n || g.cols() != n || h.cols() != n || f.rows() != n || g.rows() != n || h.rows() != n)
        throw DimensionMismatch("apply_map_tensor: slot mismatch");
    Tensor3<K> s1(n), s2(n), s3(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            if (f(a, i).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!t(i, j, k).is_zero()) s1(a, j, k) += f(a, i) * t(i, j, k);
        }
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) {
            if (g(b, j).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < n; ++k)
                    if (!s1(a, j, k).is_zero()) s2(a, b, k) += g(b, j) * s1(a, j, k);
        }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) {
            if (h(c, k).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!s2(a, b, k).is_zero()) s3(a, b, c) += h(c, k) * s2(a, b, k);
        }
    return s3;
}

template <class K>
Tensor2<K> outer(const Vec<K>& x, const Vec<K>& y) {
    Tensor2<K> t(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) t(i, j) = x[i] * y[j];
    return t;
}

// t (x) v as a 3-tensor.
template <class K>
Tensor3<K> outer(const Tensor2<K>& t, const Vec<K>& v) {
    std::size_t n = v.size();
    Tensor3<K> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(i, j) * v[k];
        }
    return out;
}

template <class K>
bool is_symmetric(const Matrix<K>& m) {
    return m == m.transpose();
}

}  // namespace sapp
