#pragma once

#include "sapp/constructions.hpp"

namespace sapp {

// e*_i * e*_j = sum_k Delta(e_k)[i][j] e*_k
template <class K>
Mult<K> dual_multiplication(const Comult<K>& c) {
    std::size_t n = c.dim();
    Mult<K> m(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j, k) = c[k](i, j);
    return m;
}

template <class K>
Comult<K> dualize_mult(const Mult<K>& m) {
    std::size_t n = m.dim();
    Comult<K> c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c[k](i, j) = m(i, j, k);
    return c;
}

// (D (x) id) t and (id (x) D) t for a 2-tensor t.
template <class K>
Tensor3<K> comult_left(const Comult<K>& d, const Tensor2<K>& t) {
    std::size_t n = d.dim();
    Tensor3<K> out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (t(a, b).is_zero()) continue;
            const auto& img = d[a];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!img(i, j).is_zero()) out(i, j, b) += t(a, b) * img(i, j);
        }
    return out;
}

template <class K>
Tensor3<K> comult_right(const Comult<K>& d, const Tensor2<K>& t) {
    std::size_t n = d.dim();
    Tensor3<K> out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (t(a, b).is_zero()) continue;
            const auto& img = d[b];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!img(i, j).is_zero()) out(a, i, j) += t(a, b) * img(i, j);
        }
    return out;
}

template <class K>
CheckReport check_coassoc_cocomm(const Comult<K>& d) {
    CheckReport rep("COASSOC_COCOMM");
    std::size_t n = d.dim();
    for (std::size_t k = 0; k < n; ++k)
        if (!expect_zero(rep, "cocomm", {k}, d[k] - tau(d[k]))) break;
    for (std::size_t k = 0; k < n; ++k)
        if (!expect_zero(rep, "coassoc", {k}, comult_left(d, d[k]) - comult_right(d, d[k]))) break;
    return rep;
}

// Delta(x y) = (L(x) (x) id) Delta(y) + (id (x) L(y)) Delta(x)
template <class K>
CheckReport check_inf_bialgebra(const Bundle<K>& a, const Comult<K>& d) {
    CheckReport rep("INF_BIALGEBRA");
    const auto& dot = a.mult(names::dot);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto lhs = d(dot.basis_product(x, y));
            auto rhs = apply_map_tensor(dot.left(x), id, d[y]) + apply_map_tensor(id, dot.left(y), d[x]);
            if (!expect_zero(rep, "bib", {x, y}, lhs - rhs)) return rep;
        }
    return rep;
}

template <class K>
CheckReport check_averaging_bialgebra(const Bundle<K>& a, const Comult<K>& d, const std::string& p = "P",
                                      const std::string& q = "Q") {
    CheckReport rep("AVERAGING_BIALGEBRA");
    rep.absorb(check_coassoc_cocomm(d));
    rep.absorb(check_inf_bialgebra(a, d));
    rep.absorb(check_suite(a, suites::admissible_averaging_comm<K>(p, q)));
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto lhs = apply_map_tensor(Q, Q, d[x]);
        auto rhs = apply_map_tensor(Q, id, d(Q.column(x)));
        if (!expect_zero(rep, "aoco1", {x}, lhs - rhs)) break;
    }
    for (std::size_t x = 0; x < n; ++x) {
        auto dpx = d(P.column(x));
        auto t1 = apply_map_tensor(Q, P, d[x]);
        auto t2 = apply_map_tensor(Q, id, dpx);
        auto t3 = apply_map_tensor(id, P, dpx);
        if (!expect_zero(rep, "aoco2", {x}, t1 - t2)) break;
        if (!expect_zero(rep, "aoco2", {x}, t2 - t3)) break;
    }
    return rep;
}

template <class K>
CheckReport check_sapp_coalgebra(const Comult<K>& vartheta, const Comult<K>& theta) {
    CheckReport rep("SAPP_COALGEBRA");
    Comult<K> eta = vartheta + theta;
    std::size_t n = eta.dim();
    for (std::size_t x = 0; x < n; ++x) {
        auto ee_l = comult_left(eta, eta[x]);
        auto ee_r = comult_right(eta, eta[x]);
        if (!expect_zero(rep, "co2", {x}, ee_l - ee_r)) break;
    }
    for (std::size_t x = 0; x < n; ++x) {
        auto ee_l = comult_left(eta, eta[x]);
        auto ee_r = comult_right(eta, eta[x]);
        if (!expect_zero(rep, "co3", {x}, ee_r - tau12(ee_l))) break;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!expect_zero(rep, "co1", {x}, theta[x] - tau(theta[x]))) break;
    for (std::size_t x = 0; x < n; ++x)
        if (!expect_zero(rep, "co4", {x}, comult_left(eta, theta[x]) - comult_right(theta, eta[x]))) break;
    for (std::size_t x = 0; x < n; ++x)
        if (!expect_zero(rep, "co5", {x}, comult_right(theta, eta[x] + theta[x]))) break;
    return rep;
}

template <class K>
CheckReport check_sapp_bialgebra(const Bundle<K>& a, const Comult<K>& vartheta, const Comult<K>& theta) {
    CheckReport rep("SAPP_BIALGEBRA");
    rep.absorb(check_suite(a, suites::sapp<K>()));
    rep.absorb(check_sapp_coalgebra(vartheta, theta));
    Comult<K> eta = vartheta + theta;
    const auto& tl = a.mult(names::tri_l);
    Mult<K> o = circ_of_sapp(a);
    std::size_t n = a.dim;
    auto id = Matrix<K>::identity(n);
    std::vector<bool> done(8, false);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto exy = eta(o.basis_product(x, y));
            auto eql = eta(tl.basis_product(x, y));
            auto txy = theta(o.basis_product(x, y));
            auto tyx = theta(o.basis_product(y, x));
            Tensor2<K> res[8];
            res[1] = exy - apply_map_tensor(o.left(x), id, eta[y]) + apply_map_tensor(id, o.right(y), theta[x]);
            res[2] = exy - apply_map_tensor(id, o.right(y), eta[x]) + apply_map_tensor(tl.left(x), id, eta[y]);
            res[3] = exy - apply_map_tensor(id, o.left(x), eta[y]) - apply_map_tensor(tl.left(y), id, theta[x]);
            res[4] = eql - apply_map_tensor(id, tl.left(x), eta[y]) - tau(apply_map_tensor(id, tl.left(y), eta[x]));
            res[5] = eql - tau(eql);
            res[6] = txy - apply_map_tensor(id, o.left(x), theta[y]) - apply_map_tensor(o.left(y), id, theta[x]);
            res[7] = txy - tyx;
            for (int e = 1; e <= 7; ++e) {
                if (done[e]) continue;
                if (!expect_zero(rep, "bialg" + std::to_string(e), {x, y}, res[e])) done[e] = true;
            }
        }
    return rep;
}

// Dualize (vartheta, theta) to a SAPP on A*, and cross-check the coalgebra
// axioms against the algebra suite.
template <class K>
std::pair<Bundle<K>, CheckReport> duality_bridge(const Comult<K>& vartheta, const Comult<K>& theta) {
    Bundle<K> dual(vartheta.dim());
    dual.set_mult(names::tri_r, dual_multiplication(vartheta));
    dual.set_mult(names::tri_l, dual_multiplication(theta));
    CheckReport co = check_sapp_coalgebra(vartheta, theta);
    CheckReport alg = check_suite(dual, suites::sapp<K>());
    CheckReport rep("DUALITY_BRIDGE");
    if (co.pass != alg.pass) rep.fail("duality", {}, {});
    rep.note(std::string("coalgebra ") + (co.pass ? "PASS" : "FAIL") + ", dual algebra " + (alg.pass ? "PASS" : "FAIL"));
    return {dual, rep};
}

}  // namespace sapp
