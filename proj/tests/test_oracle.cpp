#include <gtest/gtest.h>

#include <set>

#include "sapp/io.hpp"
#include "sapp/oracle.hpp"

using namespace sapp;
using Q = Rational;

namespace {

Bundle<F2> f2_base_pq_id() {
    auto b = catalog_example<F2>("ex_3_25_base");
    b.set_op("P", Matrix<F2>::identity(2));
    b.set_op("Q", Matrix<F2>::identity(2));
    return b;
}

Bundle<F3> f3_unit_line() {
    Bundle<F3> b(1);
    Mult<F3> m(1);
    m(0, 0, 0) = F3(1);
    b.set_mult(names::dot, m);
    b.set_op("P", Matrix<F3>::identity(1));
    b.set_op("Q", Matrix<F3>::identity(1));
    return b;
}

}  // namespace

TEST(Catalog, IdsResolve) {
    for (const auto& id : catalog_ids()) {
        std::string real = id == "zero(n)" ? "zero(2)" : id;
        EXPECT_NO_THROW(catalog_example<Q>(real)) << id;
    }
    EXPECT_EQ(catalog_example<Q>("zero(5)").dim, 5u);
    EXPECT_THROW(catalog_example<Q>("ex_9_99"), UnknownExample);
    EXPECT_THROW(catalog_example<Q>("zero(x)"), UnknownExample);
    EXPECT_THROW(catalog_example<Q>("zero(0)"), UnknownExample);
}

TEST(Catalog, FiniteFieldReductions) {
    auto a = catalog_example<F5>("ex_3_25");
    EXPECT_TRUE(check_suite(a, suites::comm_assoc<F5>()).pass);
    EXPECT_TRUE(check_suite(a, suites::admissible_averaging_comm<F5>()).pass);
}

TEST(Search, CandidateOrderIsLexicographic) {
    auto v = field_values<F3>();
    auto first = candidate_matrix<F3>(0, 2, 2, v);
    EXPECT_TRUE(first.is_zero());
    auto one = candidate_matrix<F3>(1, 2, 2, v);
    EXPECT_EQ(one(1, 1), F3(1));
    auto three = candidate_matrix<F3>(3, 2, 2, v);
    EXPECT_EQ(three(1, 0), F3(1));
    EXPECT_EQ(three(1, 1), F3(0));
    auto last = candidate_matrix<F3>(80, 2, 2, v);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(last(i, j), F3(2));
    EXPECT_EQ(field_values<Q>().size(), 5u);
    EXPECT_EQ(field_values<Q>().front(), Q(-2));
}

TEST(Search, FrozenCountsF2Base) {
    auto res = exhaust_ybe(f2_base_pq_id(), Target::aaybe);
    EXPECT_EQ(res.candidates, 16u);
    EXPECT_EQ(res.solutions.size(), 4u);
    EXPECT_TRUE(res.equivalence_violations.empty());
    EXPECT_TRUE(res.report.pass);
    for (const auto& s : res.solutions) EXPECT_TRUE(aaybe_check(f2_base_pq_id(), s.r).pass);
}

TEST(Search, FrozenCountsF3UnitLine) {
    auto res = exhaust_ybe(f3_unit_line(), Target::aaybe);
    EXPECT_EQ(res.candidates, 3u);
    ASSERT_EQ(res.solutions.size(), 1u);
    EXPECT_TRUE(res.solutions[0].r.is_zero());
    EXPECT_EQ(res.solutions[0].classification.verdict, "triangular");
}

TEST(Search, ZeroAlgebraEverythingSolves) {
    auto z = catalog_example<F3>("zero(1)");
    z.set_op("P", Matrix<F3>::identity(1));
    z.set_op("Q", Matrix<F3>::identity(1));
    auto res = exhaust_ybe(z, Target::aaybe);
    EXPECT_EQ(res.solutions.size(), 3u);
    auto s = exhaust_ybe(catalog_example<F2>("zero(2)"), Target::sapp_ybe);
    EXPECT_EQ(s.solutions.size(), 16u);
}

TEST(Search, CompletenessAgainstDirectCheck) {
    auto b = f2_base_pq_id();
    auto res = exhaust_ybe(b, Target::aaybe);
    std::set<std::string> found;
    for (const auto& s : res.solutions) found.insert(io::tensor_entries_json(s.r).dump());
    auto v = field_values<F2>();
    for (std::uint64_t c = 0; c < 16; ++c) {
        auto r = candidate_matrix(c, 2, 2, v);
        EXPECT_EQ(aaybe_check(b, r).pass, found.count(io::tensor_entries_json(r).dump()) == 1) << c;
    }
}

TEST(Search, TooLargeThrows) {
    EXPECT_THROW(exhaust_ybe(catalog_example<F2>("zero(4)"), Target::aaybe), SearchSpaceTooLarge);
    EXPECT_THROW(all_maps<Q>(3, field_values<Q>()), SearchSpaceTooLarge);
}

TEST(Mutation, SeededAndDeterministic) {
    auto ex = catalog_example<Q>("ex_3_25");
    auto scope = mults_only({names::dot});
    auto a = plan_mutations(ex, 20, 42, scope), b = plan_mutations(ex, 20, 42, scope);
    ASSERT_EQ(a.size(), 20u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(describe(a[i]), describe(b[i]));
        EXPECT_EQ(a[i].kind, "mult");
        EXPECT_EQ(a[i].name, names::dot);
        EXPECT_FALSE(a[i].delta.is_zero());
    }
    auto c = plan_mutations(ex, 20, 43, scope);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || describe(a[i]) != describe(c[i]);
    EXPECT_TRUE(differs);
}

TEST(Mutation, ScopeIsHonored) {
    auto ex = catalog_example<Q>("ex_6_29");
    for (const auto& m : plan_mutations(ex, 50, 3, MutationScope{{}, {}, {}, {"r"}, {"theta"}})) {
        EXPECT_TRUE(m.kind == "tensor" || m.kind == "comult");
        auto out = perturb(ex, m);
        EXPECT_EQ(out.mults, ex.mults);
        EXPECT_FALSE(out == ex);
    }
    EXPECT_THROW(plan_mutations(ex, 1, 1, mults_only({"nope"})), UnknownName);
    EXPECT_TRUE(plan_mutations(ex, 5, 1, MutationScope{}).empty());
}

TEST(Mutation, ZeroDeltaIsIdentity) {
    auto ex = catalog_example<Q>("ex_3_25");
    Mutation<Q> m{"mult", names::dot, {0, 0, 0}, Q(0)};
    EXPECT_TRUE(perturb(ex, m) == ex);
    EXPECT_EQ(describe(Mutation<Q>{"op", "P", {1, 2}, Q(1, 2)}), "op P [2,3] += 1/2");
}

TEST(Mutation, FailingMutationsBreakCommutativity) {
    auto ex = catalog_example<Q>("ex_3_25");
    auto check = [](const Bundle<Q>& b) { return check_suite(b, suites::comm_assoc<Q>()); };
    auto fails = failing_mutations(ex, mults_only({names::dot}), check, 3, 1);
    ASSERT_EQ(fails.size(), 3u);
    for (const auto& [m, rep] : fails) {
        EXPECT_FALSE(rep.pass);
        EXPECT_TRUE(rep.first.has_value());
    }
    auto tens = mutate(ex.tensor("r"), 4, 9);
    EXPECT_EQ(tens.size(), 4u);
    for (const auto& t : tens) EXPECT_FALSE(t == ex.tensor("r"));
}

TEST(Enumerators, CommutativeAlgebraCounts) {
    // brute-force counts of commutative associative tables on a 2-dim space
    EXPECT_EQ(comm_assoc_algebras<F2>(2, field_values<F2>()).size(), 22u);
    EXPECT_EQ(comm_assoc_algebras<F3>(2, field_values<F3>()).size(), 105u);
    EXPECT_EQ(comm_assoc_algebras<F3>(1, field_values<F3>()).size(), 3u);
}

TEST(Enumerators, AdmissiblePairsIncludeIdentity) {
    auto maps = all_maps<F2>(2, field_values<F2>());
    EXPECT_EQ(maps.size(), 16u);
    auto dot = catalog_example<F2>("ex_3_25_base").mult(names::dot);
    auto pairs = admissible_pairs(dot, maps, maps);
    bool has_id = false;
    for (const auto& [P, Qm] : pairs) has_id = has_id || (P == Matrix<F2>::identity(2) && Qm == P);
    EXPECT_TRUE(has_id);
    for (const auto& [P, Qm] : pairs) {
        Bundle<F2> b(2);
        b.set_mult(names::dot, dot);
        b.set_op("P", P);
        b.set_op("Q", Qm);
        EXPECT_TRUE(check_suite(b, suites::admissible_averaging_comm<F2>()).pass);
    }
}

TEST(Parallel, ResultsKeepIndexOrder) {
    auto out = parallel_map<std::uint64_t>(1000, [](std::uint64_t i) { return i * i; });
    ASSERT_EQ(out.size(), 1000u);
    for (std::uint64_t i = 0; i < 1000; ++i) EXPECT_EQ(out[i], i * i);
    EXPECT_TRUE(parallel_map<int>(0, [](std::uint64_t) { return 1; }).empty());
}

TEST(Digest, Fnv1aKnownValues) {
    EXPECT_EQ(hex64(fnv1a("")), "cbf29ce484222325");
    EXPECT_EQ(hex64(fnv1a("a")), "af63dc4c8601ec8c");
    EXPECT_EQ(hex64(0), "0000000000000000");
}
