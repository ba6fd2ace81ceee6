#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sapp/bundle.hpp"
#include "sapp/report.hpp"

namespace sapp {

// Formal multilinear expressions in variables x0, x1, ... built from named
// multiplications and named operators of a bundle.
struct Node {
    enum Kind { Var, Mul, Op } kind;
    std::size_t var = 0;
    std::string name;
    std::shared_ptr<const Node> a, b;
};
using Expr = std::shared_ptr<const Node>;

inline Expr var(std::size_t i) { return std::make_shared<Node>(Node{Node::Var, i, {}, nullptr, nullptr}); }
inline Expr mul(const std::string& m, Expr x, Expr y) {
    return std::make_shared<Node>(Node{Node::Mul, 0, m, std::move(x), std::move(y)});
}
inline Expr op(const std::string& p, Expr x) {
    return std::make_shared<Node>(Node{Node::Op, 0, p, std::move(x), nullptr});
}

// Linear combination of expressions.
template <class K>
struct Lin {
    std::vector<std::pair<K, Expr>> terms;

    Lin() = default;
    Lin(Expr e) { terms.emplace_back(K(1), std::move(e)); }

    friend Lin operator+(Lin a, const Lin& b) {
        a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
        return a;
    }
    friend Lin operator-(Lin a, const Lin& b) {
        for (const auto& [c, e] : b.terms) a.terms.emplace_back(-c, e);
        return a;
    }
    friend Lin operator*(const K& s, Lin a) {
        for (auto& t : a.terms) t.first *= s;
        return a;
    }
};

template <class K>
struct Equation {
    std::string id;
    std::size_t arity;
    Lin<K> lhs;  // identity reads lhs = 0
};

template <class K>
struct IdentitySuite {
    std::string id;
    std::vector<Equation<K>> equations;

    void add(std::string eq_id, std::size_t arity, Lin<K> lhs, Lin<K> rhs) {
        equations.push_back({std::move(eq_id), arity, std::move(lhs) - rhs});
    }
    void add_all(const IdentitySuite& other) {
        equations.insert(equations.end(), other.equations.begin(), other.equations.end());
    }
};

namespace detail {

inline void collect_names(const Expr& e, std::set<std::string>& mults, std::set<std::string>& ops) {
    if (!e) return;
    if (e->kind == Node::Mul) mults.insert(e->name);
    if (e->kind == Node::Op) ops.insert(e->name);
    collect_names(e->a, mults, ops);
    collect_names(e->b, mults, ops);
}

template <class K>
Vec<K> evaluate(const Bundle<K>& bundle, const Expr& e, const std::vector<std::size_t>& tuple) {
    switch (e->kind) {
        case Node::Var:
            return basis_vector<K>(bundle.dim, tuple[e->var]);
        case Node::Mul: {
            Vec<K> x = evaluate(bundle, e->a, tuple);
            Vec<K> y = evaluate(bundle, e->b, tuple);
            return bundle.mult(e->name)(x, y);
        }
        case Node::Op:
            return bundle.op(e->name).apply(evaluate(bundle, e->a, tuple));
    }
    return {};
}

// Odometer over {0..n-1}^arity in lexicographic order.
inline bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < n) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace detail

// Evaluate every identity on every basis tuple (multilinearity makes this
// complete). Equations are visited in suite order, tuples lexicographically.
template <class K>
CheckReport check_suite(const Bundle<K>& bundle, const IdentitySuite<K>& suite) {
    std::set<std::string> mults, ops;
    for (const auto& eq : suite.equations)
        for (const auto& [c, e] : eq.lhs.terms) detail::collect_names(e, mults, ops);
    for (const auto& m : mults)
        if (!bundle.has_mult(m)) throw UnknownName(m);
    for (const auto& p : ops)
        if (!bundle.has_op(p)) throw UnknownName(p);

    CheckReport rep(suite.id);
    std::size_t n = bundle.dim;
    if (n == 0) return rep;
    for (const auto& eq : suite.equations) {
        std::vector<std::size_t> t(eq.arity, 0);
        do {
            Vec<K> acc(n, K(0));
            for (const auto& [c, e] : eq.lhs.terms) {
                if (c.is_zero()) continue;
                Vec<K> v = detail::evaluate(bundle, e, t);
                for (std::size_t k = 0; k < n; ++k)
                    if (!v[k].is_zero()) acc[k] += c * v[k];
            }
            if (!is_zero(acc)) {
                rep.fail(eq.id, t, residual_of(acc));
                break;
            }
        } while (detail::next_tuple(t, n));
    }
    return rep;
}

}  // namespace sapp
