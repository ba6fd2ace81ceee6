#include <gtest/gtest.h>

#include <random>

#include "sapp/constructions.hpp"
#include "sapp/io.hpp"
#include "sapp/oracle.hpp"

using namespace sapp;
using Q = Rational;

namespace {

template <class K>
K draw(std::mt19937_64& rng) {
    if constexpr (std::is_same_v<K, Rational>) {
        std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
        return K(num(rng), den(rng));
    } else {
        return K(long(rng() % K::modulus()));
    }
}

template <class K>
Matrix<K> random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = draw<K>(rng);
    return m;
}

template <class K>
Mult<K> random_mult(std::mt19937_64& rng, std::size_t n) {
    Mult<K> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(i, j, k) = draw<K>(rng);
    return m;
}

template <class K>
Bundle<K> random_bundle(std::mt19937_64& rng, std::size_t n) {
    Bundle<K> b(n);
    b.set_mult("m1", random_mult<K>(rng, n));
    b.set_mult("m2", random_mult<K>(rng, n));
    b.set_op("P", random_matrix<K>(rng, n));
    b.set_form("g", random_matrix<K>(rng, n));
    b.set_tensor("r", random_matrix<K>(rng, n));
    Comult<K> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = random_matrix<K>(rng, n);
    b.set_comult("delta", c);
    return b;
}

// All (dot, P, Q) over F2 in dim 2 that are admissible averaging commutative.
const std::vector<Bundle<F2>>& f2_admissible() {
    static const std::vector<Bundle<F2>> all = [] {
        std::vector<Bundle<F2>> out;
        auto v = field_values<F2>();
        auto maps = all_maps<F2>(2, v);
        for (const auto& dot : comm_assoc_algebras<F2>(2, v))
            for (const auto& [P, Qm] : admissible_pairs(dot, maps, maps)) {
                Bundle<F2> b(2);
                b.set_mult(names::dot, dot);
                b.set_op("P", P);
                b.set_op("Q", Qm);
                out.push_back(b);
            }
        return out;
    }();
    return all;
}

}  // namespace

TEST(Property, AveragingGivesPerm) {
    std::size_t tested = 0;
    auto v = field_values<F3>();
    auto maps = all_maps<F3>(2, v);
    std::mt19937_64 rng(101);
    auto algs = comm_assoc_algebras<F3>(2, v);
    for (int t = 0; t < 40; ++t) {
        Bundle<F3> b(2);
        b.set_mult(names::dot, algs[rng() % algs.size()]);
        for (const auto& P : maps) {
            b.set_op("P", P);
            if (!check_suite(b, suites::averaging<F3>(names::dot, "P")).pass) continue;
            ++tested;
            auto p = perm_from_averaging(b);
            EXPECT_TRUE(p.warnings.empty());
            ASSERT_TRUE(check_suite(p, suites::perm<F3>()).pass);
        }
    }
    EXPECT_GT(tested, 100u);
}

TEST(Property, AdmissiblePairGivesSappWithSplitProduct) {
    const auto& all = f2_admissible();
    ASSERT_GT(all.size(), 50u);
    for (const auto& a : all) {
        auto s = sapp_from_admissible(a);
        ASSERT_TRUE(check_suite(s, suites::sapp<F2>()).pass);
        const auto& dot = a.mult(names::dot);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                ASSERT_EQ(s.mult(names::tri_r).basis_product(i, j) + s.mult(names::tri_l).basis_product(i, j),
                          dot(a.op("P").column(i), basis_vector<F2>(2, j)));
    }
}

TEST(Property, SappCircIsPerm) {
    auto sapps = sapp_algebras<F2>(2, field_values<F2>());
    ASSERT_FALSE(sapps.empty());
    for (const auto& s : sapps) ASSERT_TRUE(check_suite(with_circ(s), suites::perm<F2>()).pass);
}

TEST(Property, CheckSuiteIsDeterministic) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Bundle<Q> b(3);
        b.set_mult(names::dot, random_mult<Q>(rng, 3));
        auto r1 = check_suite(b, suites::comm_assoc<Q>());
        auto r2 = check_suite(b, suites::comm_assoc<Q>());
        EXPECT_EQ(r1.pass, r2.pass);
        EXPECT_EQ(r1.first, r2.first);
        EXPECT_EQ(r1.failing, r2.failing);
        EXPECT_EQ(io::report_json(r1).dump(), io::report_json(r2).dump());
    }
}

TEST(Property, ParseOfSerializeIsIdentity) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 25; ++t) {
        auto q = random_bundle<Q>(rng, 1 + t % 3);
        EXPECT_TRUE(io::parse_bundle<Q>(io::serialize_bundle(q)) == q);
        auto f = random_bundle<F5>(rng, 1 + t % 4);
        EXPECT_TRUE(io::parse_bundle<F5>(io::serialize_bundle(f)) == f);
    }
}

TEST(Property, YbeMatchesOOperatorUnderInvariance) {
    std::mt19937_64 rng(23);
    std::size_t invariant = 0;
    const auto& all = f2_admissible();
    auto v = field_values<F2>();
    for (int t = 0; t < 60; ++t) {
        const auto& a = all[rng() % all.size()];
        for (std::uint64_t c = 0; c < 16; ++c) {
            auto verdict = judge_candidate(a, candidate_matrix(c, 2, 2, v), Target::aaybe);
            if (!verdict.oop) continue;
            ++invariant;
            ASSERT_EQ(*verdict.oop, verdict.ybe);
        }
    }
    EXPECT_GT(invariant, 100u);
    auto sapps = sapp_algebras<F2>(1, v);
    for (const auto& s : sapps)
        for (std::uint64_t c = 0; c < 2; ++c) {
            auto verdict = judge_candidate(s, candidate_matrix(c, 1, 1, v), Target::sapp_ybe);
            if (verdict.oop) EXPECT_EQ(*verdict.oop, verdict.ybe);
        }
}

TEST(Property, DualizationIsAnInvolution) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        auto m = random_mult<Q>(rng, 3);
        EXPECT_EQ(dual_multiplication(dualize_mult(m)), m);
        auto r = random_matrix<Q>(rng, 3);
        EXPECT_EQ(tau(tau(r)), r);
        EXPECT_EQ(unsharp(sharp(r)), r);
    }
}

TEST(Property, MutationsAreSingleEntryChanges) {
    std::mt19937_64 rng(37);
    auto b = random_bundle<Q>(rng, 3);
    for (const auto& m : plan_mutations(b, 60, 5, MutationScope{{"m1"}, {"P"}, {"g"}, {"r"}, {"delta"}})) {
        auto out = perturb(b, m);
        std::size_t changed = 0;
        auto left = io::bundle_json(b), right = io::bundle_json(out);
        for (const char* sec : {"mults", "ops", "forms", "tensors", "comults"})
            changed += left[sec] != right[sec];
        EXPECT_EQ(changed, 1u) << describe(m);
    }
}
