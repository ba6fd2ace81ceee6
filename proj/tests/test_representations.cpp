#include <gtest/gtest.h>

#include "sapp/oracle.hpp"

using namespace sapp;
using Q = Rational;

TEST(CommRep, AdjointAndCoadjoint) {
    auto a = catalog_example<Q>("ex_3_25");
    EXPECT_TRUE(check_comm_rep(adjoint_comm_rep(a)).pass);
    EXPECT_TRUE(check_comm_rep(coadjoint_comm_rep(a)).pass);
    auto sd = semidirect_comm(coadjoint_comm_rep(a));
    EXPECT_EQ(sd.dim, 8u);
    EXPECT_TRUE(check_suite(sd, suites::comm_assoc<Q>()).pass);
    EXPECT_TRUE(check_suite(sd, suites::admissible_averaging_comm<Q>()).pass);
}

TEST(CommRep, CoadjointSwapsOperators) {
    auto a = catalog_example<Q>("ex_3_25");
    auto c = coadjoint_comm_rep(a);
    EXPECT_EQ(c.alpha, a.op("Q").transpose());
    EXPECT_EQ(c.beta, a.op("P").transpose());
}

TEST(CommRep, BrokenActionFails) {
    auto a = catalog_example<Q>("ex_3_25_base");
    a.set_op("Q", Matrix<Q>::identity(2));
    auto rep = adjoint_comm_rep(a);
    rep.mu[0](0, 0) += Q(1);
    EXPECT_FALSE(check_comm_rep(rep).pass);
}

TEST(CommRep, FactorizableTensorIsOOperatorOfWeightMinusOne) {
    auto a = catalog_example<Q>("ex_3_25");
    const auto& r = a.tensor("r");
    auto v = judge_candidate(a, r, Target::aaybe);
    EXPECT_TRUE(v.ybe);
    EXPECT_TRUE(v.invariant);
    ASSERT_TRUE(v.oop.has_value());
    EXPECT_TRUE(*v.oop);
    // dropping the lozenge product breaks the weight -1 equation
    CommRep<Q> rep = coadjoint_comm_rep(a);
    EXPECT_FALSE(check_comm_ooperator(rep, OOperator<Q>{sharp(r), Q(-1)}).pass);
}

TEST(CommRep, LozengeConstructionPreconditions) {
    auto a = catalog_example<Q>("ex_3_25");
    Tensor2<Q> s(4, 4);
    s(0, 1) = Q(1);
    EXPECT_THROW(lozenge_construction(a, s), PreconditionFailed);  // not symmetric
    const auto& r = a.tensor("r");
    auto rep = lozenge_construction(a, Tensor2<Q>(r + tau(r)));
    EXPECT_TRUE(rep.dot_v.has_value());
    // e.e = e with P = id, Q = 0: s = e (x) e is invariant but (P (x) id - id (x) Q) s = s
    Bundle<Q> line(1);
    Mult<Q> m(1);
    m(0, 0, 0) = Q(1);
    line.set_mult(names::dot, m);
    line.set_op("P", Matrix<Q>::identity(1));
    line.set_op("Q", LinearMap<Q>(1, 1));
    EXPECT_THROW(lozenge_construction(line, Matrix<Q>::identity(1)), PreconditionFailed);
}

TEST(CommRep, SkewSolutionFromIdentityOperator) {
    Bundle<Q> z(2);
    Mult<Q> st(2);
    st(0, 0, 1) = Q(1);
    z.set_mult(names::star, st);
    z.set_op("P", Matrix<Q>::identity(2));
    z.set_op("Q", Matrix<Q>::identity(2));
    auto com = subadjacent_comm(z);
    CommRep<Q> rep{com, 2, detail::lefts(st), z.op("P"), z.op("Q"), std::nullopt};
    EXPECT_TRUE(check_comm_rep(rep).pass);
    OOperator<Q> id{Matrix<Q>::identity(2), Q(0)};
    ASSERT_TRUE(check_comm_ooperator(rep, id).pass);
    auto sk = skew_solution_from_comm_ooperator(rep, id);
    EXPECT_TRUE(Tensor2<Q>(sk.r + tau(sk.r)).is_zero());
    EXPECT_EQ(classify_r(sk.bundle, sk.r, Setting::comm).verdict, "triangular");
}

TEST(SappRep, AdjointCoadjointAndPermLaws) {
    auto ex = catalog_example<Q>("ex_6_29");
    EXPECT_TRUE(check_sapp_rep(adjoint_sapp_rep(ex)).pass);
    EXPECT_TRUE(check_sapp_rep(coadjoint_sapp_rep(ex)).pass);
    EXPECT_TRUE(check_suite(semidirect_sapp(coadjoint_sapp_rep(ex)), suites::sapp<Q>()).pass);
    auto o = circ_of_sapp(ex);
    auto L = detail::lefts(o), Ll = detail::lefts(ex.mult(names::tri_l));
    EXPECT_TRUE(check_perm_rep(o, L, detail::sum_maps(L, Ll), 4).pass);
    EXPECT_TRUE(check_perm_rep(o, detail::transposed(L), detail::negated(detail::transposed(Ll)), 4).pass);
}

TEST(SappRep, FactorizableTensorIsOOperator) {
    auto ex = catalog_example<Q>("ex_6_29");
    auto v = judge_candidate(ex, ex.tensor("r"), Target::sapp_ybe);
    EXPECT_TRUE(v.ybe);
    ASSERT_TRUE(v.oop.has_value());
    EXPECT_TRUE(*v.oop);
}

TEST(SappRep, PreSappIdentityOperator) {
    Bundle<Q> z(2);
    Mult<Q> st(2);
    st(0, 0, 1) = Q(1);
    z.set_mult(names::star, st);
    z.set_op("P", Matrix<Q>::identity(2));
    z.set_op("Q", Matrix<Q>::identity(2));
    auto pre = presapp_from_zinbiel(z);
    auto rep = presapp_rep(pre);
    EXPECT_TRUE(check_sapp_rep(rep).pass);
    OOperator<Q> id{Matrix<Q>::identity(2), Q(0)};
    ASSERT_TRUE(check_sapp_ooperator(rep, id).pass);
    auto sk = skew_solution_from_sapp_ooperator(rep, id);
    EXPECT_EQ(classify_r(sk.bundle, sk.r, Setting::sapp).verdict, "triangular");
}

TEST(SappRep, ZeroOperatorIsAlwaysOOperator) {
    auto ex = catalog_example<Q>("ex_6_29");
    OOperator<Q> zero{LinearMap<Q>(4, 4), Q(0)};
    EXPECT_TRUE(check_sapp_ooperator(adjoint_sapp_rep(ex), zero).pass);
    EXPECT_TRUE(check_comm_ooperator(adjoint_comm_rep(catalog_example<Q>("ex_3_25")), zero).pass);
}
