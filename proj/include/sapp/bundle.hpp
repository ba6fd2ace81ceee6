#pragma once

#include <map>
#include <string>
#include <vector>

#include "sapp/dense.hpp"
#include "sapp/report.hpp"
#include "sapp/tensor.hpp"

namespace sapp {

// Bilinear multiplication by structure constants: e_i * e_j = sum_k c(i,j,k) e_k.
template <class K>
class Mult {
public:
    Mult() = default;
    explicit Mult(std::size_t n) : n_(n), c_(n * n * n, K(0)) {}

    std::size_t dim() const { return n_; }
    K& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const K& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    const std::vector<K>& data() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        Vec<K> v(n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
        return v;
    }

    Vec<K> operator()(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out(n_, K(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                K xy = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) {
                    const K& c = (*this)(i, j, k);
                    if (!c.is_zero()) out[k] += xy * c;
                }
            }
        }
        return out;
    }

    // Left multiplication L(x): y |-> x * y.
    LinearMap<K> left(const Vec<K>& x) const {
        LinearMap<K> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const K& c = (*this)(i, j, k);
                    if (!c.is_zero()) m(k, j) += x[i] * c;
                }
        }
        return m;
    }
    LinearMap<K> left(std::size_t i) const { return left(basis_vector<K>(n_, i)); }

    // Right multiplication R(y): x |-> x * y.
    LinearMap<K> right(const Vec<K>& y) const {
        LinearMap<K> m(n_, n_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t k = 0; k < n_; ++k) {
                    const K& c = (*this)(i, j, k);
                    if (!c.is_zero()) m(k, i) += y[j] * c;
                }
        }
        return m;
    }
    LinearMap<K> right(std::size_t j) const { return right(basis_vector<K>(n_, j)); }

    Mult opposite() const {
        Mult o(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) o(i, j, k) = (*this)(j, i, k);
        return o;
    }

    Mult& operator+=(const Mult& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Mult& operator-=(const Mult& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Mult operator+(Mult a, const Mult& b) { return a += b; }
    friend Mult operator-(Mult a, const Mult& b) { return a -= b; }
    friend Mult operator*(Mult a, const K& s) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const Mult& a, const Mult& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const Mult& a, const Mult& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<K> c_;
};

template <class K>
std::vector<ResidualEntry> residual_of(const Mult<K>& m) {
    std::vector<ResidualEntry> out;
    std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!m(i, j, k).is_zero()) out.push_back({{i, j, k}, m(i, j, k).str()});
    return out;
}

// Build a multiplication from a bilinear rule on basis elements.
template <class K, class F>
Mult<K> mult_from(std::size_t n, F&& rule) {
    Mult<K> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> v = rule(i, j);
            for (std::size_t k = 0; k < n; ++k) m(i, j, k) = v[k];
        }
    return m;
}

// Comultiplication by basis images: images[k] = Delta(e_k).
template <class K>
class Comult {
public:
    Comult() = default;
    explicit Comult(std::size_t n) : n_(n), img_(n, Tensor2<K>(n, n)) {}

    std::size_t dim() const { return n_; }
    Tensor2<K>& operator[](std::size_t k) { return img_[k]; }
    const Tensor2<K>& operator[](std::size_t k) const { return img_[k]; }

    Tensor2<K> operator()(const Vec<K>& x) const {
        Tensor2<K> t(n_, n_);
        for (std::size_t k = 0; k < n_; ++k)
            if (!x[k].is_zero()) t += img_[k] * x[k];
        return t;
    }

    bool is_zero() const {
        for (const auto& t : img_)
            if (!t.is_zero()) return false;
        return true;
    }

    Comult& operator+=(const Comult& o) {
        for (std::size_t k = 0; k < n_; ++k) img_[k] += o.img_[k];
        return *this;
    }
    friend Comult operator+(Comult a, const Comult& b) { return a += b; }
    friend Comult operator-(Comult a, const Comult& b) {
        for (std::size_t k = 0; k < a.n_; ++k) a.img_[k] -= b.img_[k];
        return a;
    }
    friend bool operator==(const Comult& a, const Comult& b) { return a.n_ == b.n_ && a.img_ == b.img_; }
    friend bool operator!=(const Comult& a, const Comult& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<Tensor2<K>> img_;
};

namespace names {
inline constexpr const char* dot = "dot";
inline constexpr const char* circ = "circ";
inline constexpr const char* tri_r = "tri_r";
inline constexpr const char* tri_l = "tri_l";
inline constexpr const char* star = "star";
inline constexpr const char* frown = "frown";
inline constexpr const char* smile = "smile";
inline constexpr const char* diamond = "diamond";
inline constexpr const char* succ = "succ";
inline constexpr const char* prec = "prec";
}  // namespace names

// The single container for a based space with named multiplications,
// operators, forms, tensors and comultiplications.
template <class K>
struct Bundle {
    std::size_t dim = 0;
    std::map<std::string, Mult<K>> mults;
    std::map<std::string, LinearMap<K>> ops;
    std::map<std::string, BilinearForm<K>> forms;
    std::map<std::string, Tensor2<K>> tensors;
    std::map<std::string, Comult<K>> comults;
    std::vector<std::string> warnings;

    Bundle() = default;
    explicit Bundle(std::size_t n) : dim(n) {}

    const Mult<K>& mult(const std::string& name) const { return lookup(mults, name); }
    const LinearMap<K>& op(const std::string& name) const { return lookup(ops, name); }
    const BilinearForm<K>& form(const std::string& name) const { return lookup(forms, name); }
    const Tensor2<K>& tensor(const std::string& name) const { return lookup(tensors, name); }
    const Comult<K>& comult(const std::string& name) const { return lookup(comults, name); }

    bool has_mult(const std::string& name) const { return mults.count(name) != 0; }
    bool has_op(const std::string& name) const { return ops.count(name) != 0; }

    Bundle& set_mult(const std::string& name, Mult<K> m) {
        if (m.dim() != dim) throw DimensionMismatch("multiplication '" + name + "' has wrong dimension");
        mults[name] = std::move(m);
        return *this;
    }
    Bundle& set_op(const std::string& name, LinearMap<K> m) {
        if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("operator '" + name + "' has wrong shape");
        ops[name] = std::move(m);
        return *this;
    }
    Bundle& set_form(const std::string& name, BilinearForm<K> m) {
        if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("form '" + name + "' has wrong shape");
        forms[name] = std::move(m);
        return *this;
    }
    Bundle& set_tensor(const std::string& name, Tensor2<K> m) {
        if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("tensor '" + name + "' has wrong shape");
        tensors[name] = std::move(m);
        return *this;
    }
    Bundle& set_comult(const std::string& name, Comult<K> c) {
        if (c.dim() != dim) throw DimensionMismatch("comultiplication '" + name + "' has wrong dimension");
        comults[name] = std::move(c);
        return *this;
    }

    friend bool operator==(const Bundle& a, const Bundle& b) {
        return a.dim == b.dim && a.mults == b.mults && a.ops == b.ops && a.forms == b.forms &&
               a.tensors == b.tensors && a.comults == b.comults;
    }

private:
    template <class M>
    static const typename M::mapped_type& lookup(const M& m, const std::string& name) {
        auto it = m.find(name);
        if (it == m.end()) throw UnknownName(name);
        return it->second;
    }
};

// Block embedding helpers for A (+) V with A's basis first.
template <class K>
Vec<K> concat(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> v(a);
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

template <class K>
LinearMap<K> block_diag(const LinearMap<K>& a, const LinearMap<K>& b) {
    LinearMap<K> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class K>
LinearMap<K> zero_map(std::size_t rows, std::size_t cols) {
    return LinearMap<K>(rows, cols);
}

// Projection of A (+) V onto the first n coordinates (or the remaining ones).
template <class K>
LinearMap<K> projection(std::size_t n, std::size_t m, bool first) {
    LinearMap<K> p(n + m, n + m);
    for (std::size_t i = 0; i < n + m; ++i)
        if ((i < n) == first) p(i, i) = K(1);
    return p;
}

// The pairing form B_d(x + a*, y + b*) = <x, b*> + <a*, y> on A (+) A*.
template <class K>
BilinearForm<K> pairing_form(std::size_t n) {
    BilinearForm<K> b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = K(1);
        b(n + i, i) = K(1);
    }
    return b;
}

}  // namespace sapp
