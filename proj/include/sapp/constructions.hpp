#pragma once

#include <string>

#include "sapp/suites.hpp"

namespace sapp {

namespace detail {

template <class K>
void require(Bundle<K>& out, const CheckReport& rep, const std::string& what) {
    if (!rep.pass) out.warnings.push_back(what + " precondition failed: " + rep.suite + " (" + rep.failing.front() + ")");
}

}  // namespace detail

// x o y = P(x) . y
template <class K>
Bundle<K> perm_from_averaging(const Bundle<K>& a, const std::string& p = "P") {
    Bundle<K> out = a;
    detail::require(out, check_suite(a, suites::averaging<K>(names::dot, p)), "perm_from_averaging");
    const auto& dot = a.mult(names::dot);
    const auto& P = a.op(p);
    out.set_mult(names::circ, mult_from<K>(a.dim, [&](std::size_t i, std::size_t j) {
        return dot(P.column(i), basis_vector<K>(a.dim, j));
    }));
    return out;
}

// x . y = x * y + y * x
template <class K>
Bundle<K> subadjacent_comm(const Bundle<K>& a) {
    Bundle<K> out = a;
    detail::require(out, check_suite(a, suites::zinbiel<K>()), "subadjacent_comm");
    const auto& st = a.mult(names::star);
    out.set_mult(names::dot, st + st.opposite());
    return out;
}

// x |> y = P(x) . y + Q(x . y),  x <| y = -Q(x . y)
template <class K>
Bundle<K> sapp_from_admissible(const Bundle<K>& a, const std::string& p = "P", const std::string& q = "Q") {
    Bundle<K> out = a;
    detail::require(out, check_suite(a, suites::admissible_averaging_comm<K>(p, q)), "sapp_from_admissible");
    const auto& dot = a.mult(names::dot);
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    std::size_t n = a.dim;
    out.set_mult(names::tri_r, mult_from<K>(n, [&](std::size_t i, std::size_t j) {
        auto ej = basis_vector<K>(n, j);
        return dot(P.column(i), ej) + Q.apply(dot.basis_product(i, j));
    }));
    out.set_mult(names::tri_l, mult_from<K>(n, [&](std::size_t i, std::size_t j) {
        return scaled(Q.apply(dot.basis_product(i, j)), K(-1));
    }));
    return out;
}

// x ^ y = P(x) * y + Q(x * y),  x _ y = y * P(x) + Q(y * x),  x <> y = -Q(x * y)
template <class K>
Bundle<K> presapp_from_zinbiel(const Bundle<K>& a, const std::string& p = "P", const std::string& q = "Q") {
    Bundle<K> out = a;
    IdentitySuite<K> pre{"ADMISSIBLE_AVERAGING_ZINBIEL", {}};
    pre.add_all(suites::zinbiel<K>());
    pre.add_all(suites::averaging<K>(names::star, p));
    pre.add_all(suites::admissible_zinbiel<K>(p, q));
    detail::require(out, check_suite(a, pre), "presapp_from_zinbiel");
    const auto& st = a.mult(names::star);
    const auto& P = a.op(p);
    const auto& Q = a.op(q);
    std::size_t n = a.dim;
    out.set_mult(names::frown, mult_from<K>(n, [&](std::size_t i, std::size_t j) {
        return st(P.column(i), basis_vector<K>(n, j)) + Q.apply(st.basis_product(i, j));
    }));
    out.set_mult(names::smile, mult_from<K>(n, [&](std::size_t i, std::size_t j) {
        return st(basis_vector<K>(n, j), P.column(i)) + Q.apply(st.basis_product(j, i));
    }));
    out.set_mult(names::diamond, mult_from<K>(n, [&](std::size_t i, std::size_t j) {
        return scaled(Q.apply(st.basis_product(i, j)), K(-1));
    }));
    return out;
}

// x |> y = x ^ y + x _ y,  x <| y = x <> y + y <> x
template <class K>
Bundle<K> subadjacent_sapp(const Bundle<K>& a) {
    Bundle<K> out = a;
    detail::require(out, check_suite(a, suites::pre_sapp<K>()), "subadjacent_sapp");
    const auto& fr = a.mult(names::frown);
    const auto& sm = a.mult(names::smile);
    const auto& di = a.mult(names::diamond);
    out.set_mult(names::tri_r, fr + sm);
    out.set_mult(names::tri_l, di + di.opposite());
    return out;
}

// x > y = x ^ y + x <> y,  x < y = x _ y + y <> x
template <class K>
Bundle<K> pre_perm_of_pre_sapp(const Bundle<K>& a) {
    Bundle<K> out = a;
    const auto& fr = a.mult(names::frown);
    const auto& sm = a.mult(names::smile);
    const auto& di = a.mult(names::diamond);
    out.set_mult(names::succ, fr + di);
    out.set_mult(names::prec, sm + di.opposite());
    return out;
}

template <class K>
Mult<K> circ_of_sapp(const Bundle<K>& a) {
    return a.mult(names::tri_r) + a.mult(names::tri_l);
}

template <class K>
Bundle<K> with_circ(const Bundle<K>& a) {
    Bundle<K> out = a;
    out.set_mult(names::circ, circ_of_sapp(a));
    return out;
}

template <class K>
Mult<K> mult_direct_sum(const Mult<K>& a, const Mult<K>& b) {
    std::size_t na = a.dim(), nb = b.dim();
    Mult<K> m(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) m(i, j, k) = a(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) m(na + i, na + j, na + k) = b(i, j, k);
    return m;
}

// Blockwise direct sum of two bundles with identical multiplication and
// operator names. Forms are added blockwise when both carry them.
template <class K>
Bundle<K> direct_sum(const Bundle<K>& a, const Bundle<K>& b) {
    auto keys = [](const auto& m) {
        std::vector<std::string> k;
        for (const auto& [name, v] : m) k.push_back(name);
        return k;
    };
    if (keys(a.mults) != keys(b.mults)) throw NameMismatch("direct_sum: multiplication names differ");
    if (keys(a.ops) != keys(b.ops)) throw NameMismatch("direct_sum: operator names differ");
    Bundle<K> out(a.dim + b.dim);
    for (const auto& [name, m] : a.mults) out.set_mult(name, mult_direct_sum(m, b.mult(name)));
    for (const auto& [name, m] : a.ops) out.set_op(name, block_diag(m, b.op(name)));
    for (const auto& [name, f] : a.forms)
        if (b.forms.count(name)) out.set_form(name, block_diag(f, b.form(name)));
    return out;
}

}  // namespace sapp
