#pragma once

#include <functional>
#include <map>
#include <string>

#include "sapp/identity.hpp"

namespace sapp::suites {

namespace n = sapp::names;

template <class K>
IdentitySuite<K> comm_assoc(const std::string& m = n::dot) {
    IdentitySuite<K> s{"COMM_ASSOC", {}};
    auto x = var(0), y = var(1), z = var(2);
    s.add("comm", 2, mul(m, x, y), mul(m, y, x));
    s.add("assoc", 3, mul(m, mul(m, x, y), z), mul(m, x, mul(m, y, z)));
    return s;
}

template <class K>
IdentitySuite<K> perm(const std::string& m = n::circ) {
    IdentitySuite<K> s{"PERM", {}};
    auto x = var(0), y = var(1), z = var(2);
    s.add("perm1", 3, mul(m, x, mul(m, y, z)), mul(m, mul(m, x, y), z));
    s.add("perm2", 3, mul(m, mul(m, x, y), z), mul(m, mul(m, y, x), z));
    return s;
}

template <class K>
IdentitySuite<K> zinbiel(const std::string& m = n::star) {
    IdentitySuite<K> s{"ZINBIEL", {}};
    auto x = var(0), y = var(1), z = var(2);
    s.add("zinb", 3, mul(m, x, mul(m, y, z)), Lin<K>(mul(m, mul(m, x, y), z)) + mul(m, mul(m, y, x), z));
    return s;
}

template <class K>
Lin<K> bilin(const std::string& m, const Lin<K>& a, const Lin<K>& b) {
    Lin<K> out;
    for (const auto& [ca, ea] : a.terms)
        for (const auto& [cb, eb] : b.terms) out.terms.emplace_back(ca * cb, mul(m, ea, eb));
    return out;
}

// x o y = x |> y + x <| y, written out so suites need only tri_r and tri_l.
template <class K>
Lin<K> circ_of(const Lin<K>& a, const Lin<K>& b, const std::string& tr = n::tri_r,
               const std::string& tl = n::tri_l) {
    return bilin<K>(tr, a, b) + bilin<K>(tl, a, b);
}

template <class K>
Lin<K> apply_op(const std::string& p, const Lin<K>& a) {
    Lin<K> out;
    for (const auto& [c, e] : a.terms) out.terms.emplace_back(c, op(p, e));
    return out;
}

template <class K>
IdentitySuite<K> sapp() {
    IdentitySuite<K> s{"SAPP", {}};
    Lin<K> x = var(0), y = var(1), z = var(2);
    auto o = [](const Lin<K>& a, const Lin<K>& b) { return circ_of<K>(a, b); };
    auto l = [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::tri_l, a, b); };
    s.add("tri_l_comm", 2, l(x, y), l(y, x));
    s.add("perm1", 3, o(x, o(y, z)), o(o(x, y), z));
    s.add("perm2", 3, o(o(x, y), z), o(o(y, x), z));
    s.add("sdpp1", 3, l(o(x, y), z), o(x, l(y, z)));
    s.add("sdpp2", 3, o(x, l(y, z)), K(-1) * l(x, l(y, z)));
    return s;
}

template <class K>
void add_pre_perm(IdentitySuite<K>& s, const std::function<Lin<K>(const Lin<K>&, const Lin<K>&)>& su,
                  const std::function<Lin<K>(const Lin<K>&, const Lin<K>&)>& pr) {
    Lin<K> x = var(0), y = var(1), z = var(2);
    auto o = [&](const Lin<K>& a, const Lin<K>& b) { return su(a, b) + pr(a, b); };
    s.add("pp1", 3, su(x, su(y, z)), su(y, su(x, z)));
    s.add("pp2", 3, su(y, su(x, z)), su(o(x, y), z));
    s.add("pp3", 3, pr(x, o(y, z)), pr(pr(x, y), z));
    s.add("pp4", 3, pr(pr(x, y), z), pr(su(y, x), z));
    s.add("pp5", 3, pr(su(y, x), z), su(y, pr(x, z)));
}

template <class K>
IdentitySuite<K> pre_perm() {
    IdentitySuite<K> s{"PRE_PERM", {}};
    add_pre_perm<K>(
        s, [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::succ, a, b); },
        [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::prec, a, b); });
    return s;
}

template <class K>
IdentitySuite<K> pre_sapp() {
    IdentitySuite<K> s{"PRE_SAPP", {}};
    auto fr = [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::frown, a, b); };
    auto sm = [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::smile, a, b); };
    auto di = [](const Lin<K>& a, const Lin<K>& b) { return bilin<K>(n::diamond, a, b); };
    auto su = [=](const Lin<K>& a, const Lin<K>& b) { return fr(a, b) + di(a, b); };
    auto pr = [=](const Lin<K>& a, const Lin<K>& b) { return sm(a, b) + di(b, a); };
    auto o = [=](const Lin<K>& a, const Lin<K>& b) { return su(a, b) + pr(a, b); };
    auto tl = [=](const Lin<K>& a, const Lin<K>& b) { return di(a, b) + di(b, a); };
    add_pre_perm<K>(s, su, pr);
    Lin<K> x = var(0), y = var(1), z = var(2);
    s.add("pd1", 3, di(o(x, y), z), su(x, di(y, z)));
    s.add("pd2", 3, su(x, di(y, z)), K(-1) * di(x, di(y, z)));
    s.add("pd3", 3, K(-1) * di(x, di(y, z)), di(y, su(x, z)));
    s.add("pd4", 3, di(tl(x, y), z), K(-1) * di(y, pr(z, x)));
    s.add("pd5", 3, K(-1) * di(y, pr(z, x)), K(-1) * pr(z, tl(x, y)));
    return s;
}

template <class K>
IdentitySuite<K> averaging(const std::string& m, const std::string& p) {
    IdentitySuite<K> s{"AVERAGING", {}};
    auto x = var(0), y = var(1);
    s.add("ao1", 2, mul(m, op(p, x), op(p, y)), op(p, mul(m, op(p, x), y)));
    s.add("ao2", 2, op(p, mul(m, op(p, x), y)), op(p, mul(m, x, op(p, y))));
    return s;
}

template <class K>
IdentitySuite<K> admissible_pair(const std::string& p, const std::string& q, const std::string& m = n::dot) {
    IdentitySuite<K> s{"ADMISSIBLE_PAIR", {}};
    auto x = var(0), y = var(1);
    s.add("pair1", 2, mul(m, op(p, x), op(q, y)), op(q, mul(m, op(p, x), y)));
    s.add("pair2", 2, op(q, mul(m, op(p, x), y)), op(q, mul(m, x, op(q, y))));
    return s;
}

template <class K>
IdentitySuite<K> admissible_zinbiel(const std::string& p, const std::string& q, const std::string& m = n::star) {
    IdentitySuite<K> s{"ADMISSIBLE_ZINBIEL", {}};
    auto x = var(0), y = var(1);
    s.add("zq1", 2, op(q, mul(m, op(p, x), y)), mul(m, op(p, x), op(q, y)));
    s.add("zq2", 2, mul(m, op(p, x), op(q, y)), op(q, mul(m, x, op(q, y))));
    s.add("zq3", 2, op(q, mul(m, op(q, x), y)), mul(m, op(q, x), op(p, y)));
    s.add("zq4", 2, mul(m, op(q, x), op(p, y)), op(q, mul(m, x, op(p, y))));
    return s;
}

template <class K>
void add_rota_baxter(IdentitySuite<K>& s, const std::string& m, const std::string& r, const K& lambda,
                     const std::string& tag) {
    auto x = var(0), y = var(1);
    s.add("rb_" + tag, 2, mul(m, op(r, x), op(r, y)),
          Lin<K>(op(r, mul(m, op(r, x), y))) + op(r, mul(m, x, op(r, y))) + lambda * Lin<K>(op(r, mul(m, x, y))));
}

template <class K>
IdentitySuite<K> rota_baxter(const std::string& m, const std::string& r, const K& lambda) {
    IdentitySuite<K> s{"ROTA_BAXTER", {}};
    add_rota_baxter<K>(s, m, r, lambda, m);
    return s;
}

// Weight-lambda Rota-Baxter law on both SAPP products.
template <class K>
IdentitySuite<K> rota_baxter_sapp(const std::string& r, const K& lambda) {
    IdentitySuite<K> s{"ROTA_BAXTER_SAPP", {}};
    add_rota_baxter<K>(s, n::tri_r, r, lambda, n::tri_r);
    add_rota_baxter<K>(s, n::tri_l, r, lambda, n::tri_l);
    return s;
}

template <class K>
IdentitySuite<K> commute(const std::string& p, const std::string& r) {
    IdentitySuite<K> s{"COMMUTE", {}};
    auto x = var(0);
    s.add("commute", 1, op(p, op(r, x)), op(r, op(p, x)));
    return s;
}

// The admissible averaging commutative axioms as one suite.
template <class K>
IdentitySuite<K> admissible_averaging_comm(const std::string& p = "P", const std::string& q = "Q") {
    IdentitySuite<K> s{"ADMISSIBLE_AVERAGING_COMM", {}};
    s.add_all(comm_assoc<K>());
    s.add_all(averaging<K>(n::dot, p));
    s.add_all(admissible_pair<K>(p, q));
    return s;
}

}  // namespace sapp::suites
