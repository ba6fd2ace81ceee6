#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>

#include "sapp/frobenius.hpp"

namespace sapp {

// Example catalog. Ids: ex_3_25 (the double), ex_3_25_base (A itself),
// ex_6_29, zero(n) and one_dim_zinbiel.

namespace detail {

template <class K>
Mult<K> ex_3_25_base_dot() {
    Mult<K> m(2);
    m(0, 0, 0) = K(1);
    m(0, 1, 1) = m(1, 0, 1) = K(1);
    return m;
}

// Basis e1, e2, e*1, e*2 as indices 0..3.
template <class K>
Mult<K> ex_3_25_double_dot() {
    Mult<K> m(4);
    m(0, 0, 0) = K(1);
    m(0, 1, 1) = m(1, 0, 1) = K(1);
    m(0, 2, 2) = m(2, 0, 2) = K(1);
    m(0, 3, 3) = m(3, 0, 3) = K(1);
    m(1, 3, 2) = m(3, 1, 2) = K(1);
    return m;
}

template <class K>
Tensor2<K> ex_3_25_r() {
    Tensor2<K> r(4, 4);
    r(2, 0) = r(3, 1) = K(1);
    return r;
}

// Delta_r(e*1) = e*1 (x) e*1, Delta_r(e*2) = e*1 (x) e*2 + e*2 (x) e*1.
template <class K>
Comult<K> ex_3_25_delta() {
    Comult<K> d(4);
    d[2](2, 2) = K(1);
    d[3](2, 3) = d[3](3, 2) = K(1);
    return d;
}

inline bool parse_zero_id(const std::string& id, std::size_t& n) {
    std::string body;
    if (id.rfind("zero(", 0) == 0 && id.size() > 6 && id.back() == ')')
        body = id.substr(5, id.size() - 6);
    else if (id.rfind("zero", 0) == 0 && id.size() > 4)
        body = id.substr(4);
    else
        return false;
    if (body.empty() || body.size() > 2) return false;
    for (char c : body)
        if (c < '0' || c > '9') return false;
    n = std::stoul(body);
    return n >= 1 && n <= 16;
}

}  // namespace detail

template <class K>
Bundle<K> catalog_example(const std::string& id) {
    if (id == "ex_3_25") {
        Bundle<K> b(4);
        b.set_mult(names::dot, detail::ex_3_25_double_dot<K>());
        b.set_op("P", projection<K>(2, 2, true));
        b.set_op("Q", projection<K>(2, 2, false));
        b.set_op("R", projection<K>(2, 2, true));
        b.set_form("B", pairing_form<K>(2));
        b.set_tensor("r", detail::ex_3_25_r<K>());
        b.set_comult("delta", detail::ex_3_25_delta<K>());
        return b;
    }
    if (id == "ex_3_25_base") {
        Bundle<K> b(2);
        b.set_mult(names::dot, detail::ex_3_25_base_dot<K>());
        b.set_op("R", Matrix<K>::identity(2));
        b.set_op("P", Matrix<K>::identity(2));
        return b;
    }
    if (id == "ex_6_29") {
        Bundle<K> b(4);
        Mult<K> tr(4), reference(4), tl(4);
        for (auto* m : {&tr, &reference}) {
            (*m)(0, 0, 0) = K(1);
            (*m)(0, 1, 1) = (*m)(1, 0, 1) = K(1);
            (*m)(0, 3, 3) = K(2);
            (*m)(0, 2, 2) = (*m)(1, 3, 2) = K(2);
        }
        // e*_i |> e_j as derived from the construction
        tr(3, 0, 3) = K(1);
        tr(2, 0, 2) = tr(3, 1, 2) = K(1);
        // reference entries: e*2 |> e1 = 2e*2, e*1 |> e1 = e*2 |> e2 = 2e*1
        reference(3, 0, 3) = K(2);
        reference(2, 0, 2) = reference(3, 1, 2) = K(2);
        // <| is commutative; listed entries are e_i <| e*_j
        tl(0, 3, 3) = tl(3, 0, 3) = K(-1);
        tl(0, 2, 2) = tl(2, 0, 2) = K(-1);
        tl(1, 3, 2) = tl(3, 1, 2) = K(-1);
        b.set_mult(names::tri_r, tr);
        b.set_mult("tri_r_reference", reference);
        b.set_mult(names::tri_l, tl);
        b.set_comult("vartheta", detail::ex_3_25_delta<K>());
        b.set_comult("theta", Comult<K>(4));
        b.set_op("R", projection<K>(2, 2, true));
        b.set_form("B", pairing_form<K>(2));
        b.set_tensor("r", detail::ex_3_25_r<K>());
        return b;
    }
    if (id == "one_dim_zinbiel") {
        Bundle<K> b(1);
        Mult<K> s(1);
        s(0, 0, 0) = K(1);
        b.set_mult(names::star, s);
        b.set_op("P", Matrix<K>::identity(1));
        b.set_op("Q", Matrix<K>::identity(1));
        return b;
    }
    std::size_t n = 0;
    if (detail::parse_zero_id(id, n)) {
        Bundle<K> b(n);
        for (const char* m : {names::dot, names::circ, names::tri_r, names::tri_l, names::star})
            b.set_mult(m, Mult<K>(n));
        b.set_op("P", LinearMap<K>(n, n));
        b.set_op("Q", LinearMap<K>(n, n));
        b.set_tensor("r", Tensor2<K>(n, n));
        return b;
    }
    throw UnknownExample(id);
}

inline std::vector<std::string> catalog_ids() {
    return {"ex_3_25", "ex_3_25_base", "ex_6_29", "one_dim_zinbiel", "zero(n)"};
}

// Enumeration values: every element of F_p, or the integers -2..2 in Q.
template <class K>
std::vector<K> field_values() {
    std::vector<K> v;
    if constexpr (std::is_same_v<K, Rational>) {
        for (long i = -2; i <= 2; ++i) v.push_back(K(i));
    } else {
        for (long i = 0; i < long(K::modulus()); ++i) v.push_back(K(i));
    }
    return v;
}

// Candidate number `c` in lexicographic order, row-major, last entry fastest.
template <class K>
Matrix<K> candidate_matrix(std::uint64_t c, std::size_t rows, std::size_t cols, const std::vector<K>& values) {
    Matrix<K> m(rows, cols);
    std::uint64_t base = values.size();
    for (std::size_t e = rows * cols; e-- > 0;) {
        m(e / cols, e % cols) = values[c % base];
        c /= base;
    }
    return m;
}

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && v > limit / base) return limit + 1;
        v *= base;
    }
    return v;
}

inline constexpr std::uint64_t search_limit = 100000000ULL;

// SAPP_THREADS overrides the worker count.
inline unsigned worker_count() {
    if (const char* e = std::getenv("SAPP_THREADS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1 && v <= 256) return unsigned(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : std::min(h, 16u);
}

// Evaluate f(i) for i in [0, count) across workers; results keep index order.
template <class R, class F>
std::vector<R> parallel_map(std::uint64_t count, F&& f) {
    std::vector<R> out(count);
    unsigned w = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(count, 1));
    if (w <= 1 || count < 64) {
        for (std::uint64_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < w; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t i = t; i < count; i += w) out[i] = f(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

enum class Target { aaybe, sapp_ybe };

inline const char* target_name(Target t) { return t == Target::aaybe ? "AAYBE" : "SAPP-YBE"; }
inline Setting setting_of(Target t) { return t == Target::aaybe ? Setting::comm : Setting::sapp; }

template <class K>
struct CandidateVerdict {
    bool ybe = false;
    bool invariant = false;
    std::optional<bool> oop;  // set when r + tau(r) is invariant
};

// YBE verdict and, under the invariance hypothesis, the O-operator verdict
// for T = r# of weight -1 on the dual representation algebra built from r + tau(r).
template <class K>
CandidateVerdict<K> judge_candidate(const Bundle<K>& a, const Tensor2<K>& r, Target target) {
    CandidateVerdict<K> v;
    Tensor2<K> s = r + tau(r);
    OOperator<K> op{sharp(r), K(-1)};
    if (target == Target::aaybe) {
        v.ybe = aaybe_check(a, r).pass;
        v.invariant = comm_invariance_check(a, s).pass;
        if (v.invariant) {
            // The operator equations only need invariance; lozenge_construction
            // additionally insists on the representation-algebra conditions.
            CommRep<K> rep = coadjoint_comm_rep(a);
            rep.dot_v = lozenge_mult(a, s);
            v.oop = check_comm_ooperator(rep, op).pass;
        }
    } else {
        v.ybe = sa_tensor(a, r).is_zero();
        v.invariant = sapp_invariance_check(a, s).pass;
        if (v.invariant) v.oop = check_sapp_ooperator(sapp_rep_algebra_from_s(a, s), op).pass;
    }
    return v;
}

template <class K>
struct SearchSolution {
    Tensor2<K> r;
    RClassification classification;
    std::optional<bool> oop;
};

template <class K>
struct SearchResult {
    Target target = Target::aaybe;
    std::size_t dim = 0;
    std::uint64_t candidates = 0;
    std::uint64_t invariant_candidates = 0;
    std::vector<SearchSolution<K>> solutions;
    std::vector<Tensor2<K>> equivalence_violations;
    CheckReport report{"EXHAUST_YBE"};
};

// Every r in values^{n x n}. Completeness: a candidate is emitted exactly when
// the YBE checker passes on it.
template <class K>
SearchResult<K> exhaust_ybe(const Bundle<K>& a, Target target, const std::vector<K>& values) {
    std::size_t n = a.dim;
    if (n > 3) throw SearchSpaceTooLarge("exhaust_ybe: dim " + std::to_string(n) + " exceeds 3");
    std::uint64_t count = checked_power(values.size(), n * n, search_limit);
    if (count > search_limit) throw SearchSpaceTooLarge("exhaust_ybe: more than 1e8 candidates");

    auto verdicts = parallel_map<CandidateVerdict<K>>(
        count, [&](std::uint64_t c) { return judge_candidate(a, candidate_matrix(c, n, n, values), target); });

    SearchResult<K> out;
    out.target = target;
    out.dim = n;
    out.candidates = count;
    for (std::uint64_t c = 0; c < count; ++c) {
        const auto& v = verdicts[c];
        if (v.invariant) ++out.invariant_candidates;
        Tensor2<K> r;
        if (v.ybe || (v.oop && *v.oop != v.ybe)) r = candidate_matrix(c, n, n, values);
        if (v.oop && *v.oop != v.ybe) {
            out.equivalence_violations.push_back(r);
            out.report.fail("ybe_oop_equivalence", {}, residual_of(r));
        }
        if (v.ybe) out.solutions.push_back({r, classify_r(a, r, setting_of(target)), v.oop});
    }
    return out;
}

template <class K>
SearchResult<K> exhaust_ybe(const Bundle<K>& a, Target target) {
    return exhaust_ybe(a, target, field_values<K>());
}

// Mutation fuzzing: single-entry perturbations drawn from a seeded mt19937_64.

template <class K>
struct Mutation {
    std::string kind;  // mult, op, form, tensor, comult
    std::string name;
    std::vector<std::size_t> index;
    K delta{0};
};

template <class K>
std::string describe(const Mutation<K>& m) {
    std::string s = m.kind + " " + m.name + " [";
    for (std::size_t i = 0; i < m.index.size(); ++i) s += (i ? "," : "") + std::to_string(m.index[i] + 1);
    return s + "] += " + m.delta.str();
}

template <class K>
Bundle<K> perturb(const Bundle<K>& b, const Mutation<K>& m) {
    Bundle<K> out = b;
    if (m.delta.is_zero()) return out;
    const auto& ix = m.index;
    if (m.kind == "mult") {
        auto it = out.mults.find(m.name);
        if (it == out.mults.end()) throw UnknownName(m.name);
        it->second(ix.at(0), ix.at(1), ix.at(2)) += m.delta;
    } else if (m.kind == "op" || m.kind == "form" || m.kind == "tensor") {
        Matrix<K>* target = nullptr;
        if (m.kind == "op" && out.ops.count(m.name)) target = &out.ops[m.name];
        if (m.kind == "form" && out.forms.count(m.name)) target = &out.forms[m.name];
        if (m.kind == "tensor" && out.tensors.count(m.name)) target = &out.tensors[m.name];
        if (!target) throw UnknownName(m.name);
        (*target)(ix.at(0), ix.at(1)) += m.delta;
    } else if (m.kind == "comult") {
        auto it = out.comults.find(m.name);
        if (it == out.comults.end()) throw UnknownName(m.name);
        it->second[ix.at(0)](ix.at(1), ix.at(2)) += m.delta;
    } else {
        throw UnknownName(m.kind);
    }
    return out;
}

template <class K>
std::vector<K> mutation_deltas() {
    if constexpr (std::is_same_v<K, Rational>)
        return {K(1), K(-1), K(2), K(1, 2)};
    else {
        std::vector<K> d;
        for (long i = 1; i < long(K::modulus()); ++i) d.push_back(K(i));
        return d;
    }
}

struct MutationScope {
    std::vector<std::string> mults, ops, forms, tensors, comults;
};

inline MutationScope mults_only(std::vector<std::string> names) { return {std::move(names), {}, {}, {}, {}}; }

template <class K>
std::vector<Mutation<K>> plan_mutations(const Bundle<K>& b, std::size_t count, std::uint64_t seed,
                                        const MutationScope& scope) {
    std::vector<std::pair<std::string, std::string>> targets;
    for (const auto& n : scope.mults) { b.mult(n); targets.push_back({"mult", n}); }
    for (const auto& n : scope.ops) { b.op(n); targets.push_back({"op", n}); }
    for (const auto& n : scope.forms) { b.form(n); targets.push_back({"form", n}); }
    for (const auto& n : scope.tensors) { b.tensor(n); targets.push_back({"tensor", n}); }
    for (const auto& n : scope.comults) { b.comult(n); targets.push_back({"comult", n}); }
    std::vector<Mutation<K>> out;
    if (targets.empty() || b.dim == 0) return out;
    std::mt19937_64 rng(seed);
    auto deltas = mutation_deltas<K>();
    std::size_t n = b.dim;
    for (std::size_t c = 0; c < count; ++c) {
        const auto& [kind, name] = targets[rng() % targets.size()];
        Mutation<K> m{kind, name, {}, K(0)};
        std::size_t arity = (kind == "mult" || kind == "comult") ? 3 : 2;
        for (std::size_t a = 0; a < arity; ++a) m.index.push_back(rng() % n);
        m.delta = deltas[rng() % deltas.size()];
        out.push_back(m);
    }
    return out;
}

template <class K>
std::vector<Bundle<K>> mutate(const Bundle<K>& b, std::size_t count, std::uint64_t seed, const MutationScope& scope) {
    std::vector<Bundle<K>> out;
    for (const auto& m : plan_mutations(b, count, seed, scope)) out.push_back(perturb(b, m));
    return out;
}

template <class K>
std::vector<Tensor2<K>> mutate(const Tensor2<K>& t, std::size_t count, std::uint64_t seed) {
    Bundle<K> b(t.rows());
    b.set_tensor("t", t);
    std::vector<Tensor2<K>> out;
    for (auto& m : mutate(b, count, seed, MutationScope{{}, {}, {}, {"t"}, {}})) out.push_back(m.tensor("t"));
    return out;
}

// The first `want` mutations (in seeded order) that make `check` fail.
template <class K, class Check>
std::vector<std::pair<Mutation<K>, CheckReport>> failing_mutations(const Bundle<K>& b, const MutationScope& scope,
                                                                   Check&& check, std::size_t want,
                                                                   std::uint64_t seed, std::size_t budget = 500) {
    std::vector<std::pair<Mutation<K>, CheckReport>> out;
    for (const auto& m : plan_mutations(b, budget, seed, scope)) {
        CheckReport rep = check(perturb(b, m));
        if (!rep.pass) out.push_back({m, rep});
        if (out.size() == want) break;
    }
    return out;
}

// Enumerators for the equivalence battery.

template <class K>
std::vector<LinearMap<K>> all_maps(std::size_t n, const std::vector<K>& values) {
    std::uint64_t count = checked_power(values.size(), n * n, search_limit);
    if (count > 1000000) throw SearchSpaceTooLarge("all_maps: too many maps");
    std::vector<LinearMap<K>> out;
    for (std::uint64_t c = 0; c < count; ++c) out.push_back(candidate_matrix(c, n, n, values));
    return out;
}

// Commutative associative multiplications, via the constants c(i,j,k) with i <= j.
template <class K>
std::vector<Mult<K>> comm_assoc_algebras(std::size_t n, const std::vector<K>& values) {
    std::size_t pairs = n * (n + 1) / 2;
    std::uint64_t count = checked_power(values.size(), pairs * n, search_limit);
    if (count > 1000000) throw SearchSpaceTooLarge("comm_assoc_algebras: too many tables");
    auto keep = parallel_map<char>(count, [&](std::uint64_t c) {
        Mult<K> m(n);
        auto digits = candidate_matrix(c, 1, pairs * n, values);
        std::size_t e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k, ++e) m(i, j, k) = m(j, i, k) = digits(0, e);
        Bundle<K> b(n);
        b.set_mult(names::dot, m);
        return char(check_suite(b, suites::comm_assoc<K>()).pass);
    });
    std::vector<Mult<K>> out;
    for (std::uint64_t c = 0; c < count; ++c) {
        if (!keep[c]) continue;
        Mult<K> m(n);
        auto digits = candidate_matrix(c, 1, pairs * n, values);
        std::size_t e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k, ++e) m(i, j, k) = m(j, i, k) = digits(0, e);
        out.push_back(m);
    }
    return out;
}

// Admissible averaging pairs (P, Q) on (A, dot), with P and Q drawn from `maps`.
template <class K>
std::vector<std::pair<LinearMap<K>, LinearMap<K>>> admissible_pairs(const Mult<K>& dot,
                                                                    const std::vector<LinearMap<K>>& p_maps,
                                                                    const std::vector<LinearMap<K>>& q_maps) {
    std::size_t n = dot.dim();
    std::vector<std::pair<LinearMap<K>, LinearMap<K>>> out;
    for (const auto& P : p_maps) {
        Bundle<K> b(n);
        b.set_mult(names::dot, dot);
        b.set_op("P", P);
        if (!check_suite(b, suites::averaging<K>(names::dot, "P")).pass) continue;
        for (const auto& Q : q_maps) {
            b.set_op("Q", Q);
            if (check_suite(b, suites::admissible_pair<K>("P", "Q")).pass) out.push_back({P, Q});
        }
    }
    return out;
}

// All tables for one multiplication `name` passing `suite`.
template <class K>
std::vector<Mult<K>> algebras_satisfying(std::size_t n, const std::vector<K>& values, const std::string& name,
                                         const IdentitySuite<K>& suite) {
    std::size_t len = n * n * n;
    std::uint64_t count = checked_power(values.size(), len, search_limit);
    if (count > 1000000) throw SearchSpaceTooLarge("algebras_satisfying: too many tables");
    auto build = [&](std::uint64_t c) {
        auto digits = candidate_matrix(c, 1, len, values);
        Mult<K> m(n);
        std::size_t e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k, ++e) m(i, j, k) = digits(0, e);
        return m;
    };
    auto keep = parallel_map<char>(count, [&](std::uint64_t c) {
        Bundle<K> b(n);
        b.set_mult(name, build(c));
        return char(check_suite(b, suite).pass);
    });
    std::vector<Mult<K>> out;
    for (std::uint64_t c = 0; c < count; ++c)
        if (keep[c]) out.push_back(build(c));
    return out;
}

// All SAPPs (|>, <|) with <| symmetric, over the given values.
template <class K>
std::vector<Bundle<K>> sapp_algebras(std::size_t n, const std::vector<K>& values) {
    std::size_t tr_len = n * n * n, tl_len = n * (n + 1) / 2 * n;
    std::uint64_t count = checked_power(values.size(), tr_len + tl_len, search_limit);
    if (count > 4000000) throw SearchSpaceTooLarge("sapp_algebras: too many tables");
    auto build = [&](std::uint64_t c) {
        auto digits = candidate_matrix(c, 1, tr_len + tl_len, values);
        Mult<K> tr(n), tl(n);
        std::size_t e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k, ++e) tr(i, j, k) = digits(0, e);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k, ++e) tl(i, j, k) = tl(j, i, k) = digits(0, e);
        Bundle<K> b(n);
        b.set_mult(names::tri_r, tr);
        b.set_mult(names::tri_l, tl);
        return b;
    };
    auto keep = parallel_map<char>(count, [&](std::uint64_t c) {
        return char(check_suite(build(c), suites::sapp<K>()).pass);
    });
    std::vector<Bundle<K>> out;
    for (std::uint64_t c = 0; c < count; ++c)
        if (keep[c]) out.push_back(build(c));
    return out;
}

// Stable 64-bit FNV-1a digest used to key reports and derived objects.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
    return s;
}

}  // namespace sapp
