#include <gtest/gtest.h>

#include "sapp/constructions.hpp"
#include "sapp/oracle.hpp"
#include "sapp/registry.hpp"

using namespace sapp;
using Q = Rational;

namespace {

Bundle<Q> zinbiel_e1e1_e2() {
    Bundle<Q> z(2);
    Mult<Q> st(2);
    st(0, 0, 1) = Q(1);
    z.set_mult(names::star, st);
    z.set_op("P", Matrix<Q>::identity(2));
    z.set_op("Q", Matrix<Q>::identity(2));
    return z;
}

}  // namespace

TEST(Suites, ExampleDoubleIsCommutativeAveraging) {
    auto a = catalog_example<Q>("ex_3_25");
    EXPECT_TRUE(check_suite(a, suites::comm_assoc<Q>()).pass);
    EXPECT_TRUE(check_suite(a, suites::averaging<Q>(names::dot, "P")).pass);
    EXPECT_TRUE(check_suite(a, suites::admissible_pair<Q>("P", "Q")).pass);
    EXPECT_TRUE(check_suite(a, suites::admissible_averaging_comm<Q>()).pass);
    EXPECT_TRUE(check_suite(a, suites::rota_baxter<Q>(names::dot, "R", Q(-1))).pass);
    EXPECT_TRUE(check_suite(a, suites::commute<Q>("P", "R")).pass);
}

TEST(Suites, MutatedCommutativityReportsFirstTuple) {
    auto a = catalog_example<Q>("ex_3_25_base");
    Bundle<Q> b = a;
    Mult<Q> m = a.mult(names::dot);
    m(1, 0, 1) = Q(2);  // e2 e1 = 2 e2, e1 e2 = e2
    b.set_mult(names::dot, m);
    auto rep = check_suite(b, suites::comm_assoc<Q>());
    ASSERT_FALSE(rep.pass);
    ASSERT_TRUE(rep.first.has_value());
    EXPECT_EQ(rep.first->tuple, (std::vector<std::size_t>{0, 1}));
    ASSERT_EQ(rep.first->residual.size(), 1u);
    EXPECT_EQ(rep.first->residual[0].index, (std::vector<std::size_t>{1}));
    // deterministic
    auto again = check_suite(b, suites::comm_assoc<Q>());
    EXPECT_EQ(*again.first, *rep.first);
    EXPECT_EQ(again.failing, rep.failing);
}

TEST(Suites, MissingNameThrows) {
    Bundle<Q> b(2);
    EXPECT_THROW(check_suite(b, suites::comm_assoc<Q>()), UnknownName);
    b.set_mult(names::dot, Mult<Q>(2));
    EXPECT_THROW(check_suite(b, suites::averaging<Q>(names::dot, "P")), UnknownName);
}

TEST(Suites, ZeroAlgebraSatisfiesEverything) {
    auto z = catalog_example<Q>("zero(3)");
    z.set_op("R", LinearMap<Q>(3, 3));
    for (const auto& id : suite_ids()) {
        Bundle<Q> b = z;
        if (id == "PRE_PERM") {
            b.set_mult(names::succ, Mult<Q>(3));
            b.set_mult(names::prec, Mult<Q>(3));
        }
        if (id == "PRE_SAPP")
            for (const char* m : {names::frown, names::smile, names::diamond}) b.set_mult(m, Mult<Q>(3));
        EXPECT_TRUE(check_suite(b, suite_by_id<Q>(id)).pass) << id;
    }
}

TEST(Constructions, AveragingGivesPerm) {
    auto a = catalog_example<Q>("ex_3_25");
    auto p = perm_from_averaging(a);
    EXPECT_TRUE(p.warnings.empty());
    EXPECT_TRUE(check_suite(p, suites::perm<Q>()).pass);
}

TEST(Constructions, SappFromAdmissibleSumsToAveragedProduct) {
    auto a = catalog_example<Q>("ex_3_25");
    auto s = sapp_from_admissible(a);
    EXPECT_TRUE(s.warnings.empty());
    EXPECT_TRUE(check_suite(s, suites::sapp<Q>()).pass);
    const auto& dot = a.mult(names::dot);
    const auto& P = a.op("P");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto sum = s.mult(names::tri_r).basis_product(i, j) + s.mult(names::tri_l).basis_product(i, j);
            EXPECT_EQ(sum, dot(P.column(i), basis_vector<Q>(4, j)));
        }
}

TEST(Constructions, SappHasPermCirc) {
    auto s = with_circ(catalog_example<Q>("ex_6_29"));
    EXPECT_TRUE(check_suite(s, suites::perm<Q>()).pass);
}

TEST(Constructions, ViolatedPreconditionWarns) {
    auto a = catalog_example<Q>("ex_3_25_base");
    Matrix<Q> P = Matrix<Q>::identity(2);
    P(0, 0) = Q(2);  // P(e2)P(e1) = 2e2 but P(P(e2)e1) = e2
    a.set_op("P", P);
    ASSERT_FALSE(check_suite(a, suites::averaging<Q>(names::dot, "P")).pass);
    auto p = perm_from_averaging(a);
    ASSERT_EQ(p.warnings.size(), 1u);
    EXPECT_NE(p.warnings[0].find("AVERAGING"), std::string::npos);
}

TEST(Constructions, OneDimensionalStarIsNotZinbiel) {
    // e * e = e forces e = 2e under the Zinbiel law.
    auto z = catalog_example<Q>("one_dim_zinbiel");
    auto rep = check_suite(z, suites::zinbiel<Q>());
    EXPECT_FALSE(rep.pass);
    EXPECT_FALSE(subadjacent_comm(z).warnings.empty());
    auto z3 = catalog_example<F3>("one_dim_zinbiel");
    EXPECT_FALSE(check_suite(z3, suites::zinbiel<F3>()).pass);
}

TEST(Constructions, ZinbielChain) {
    auto z = zinbiel_e1e1_e2();
    ASSERT_TRUE(check_suite(z, suites::zinbiel<Q>()).pass);
    ASSERT_TRUE(check_suite(z, suites::admissible_zinbiel<Q>("P", "Q")).pass);
    auto c = subadjacent_comm(z);
    EXPECT_TRUE(c.warnings.empty());
    EXPECT_TRUE(check_suite(c, suites::comm_assoc<Q>()).pass);
    EXPECT_EQ(c.mult(names::dot)(0, 0, 1), Q(2));
    auto pre = presapp_from_zinbiel(z);
    EXPECT_TRUE(check_suite(pre, suites::pre_sapp<Q>()).pass);
    auto sub = subadjacent_sapp(pre);
    EXPECT_TRUE(check_suite(sub, suites::sapp<Q>()).pass);
    auto pp = pre_perm_of_pre_sapp(pre);
    EXPECT_TRUE(check_suite(pp, suites::pre_perm<Q>()).pass);
}

TEST(Constructions, DirectSumKeepsSuites) {
    auto a = catalog_example<Q>("ex_3_25");
    auto d = direct_sum(a, a);
    EXPECT_EQ(d.dim, 8u);
    EXPECT_TRUE(check_suite(d, suites::comm_assoc<Q>()).pass);
    EXPECT_TRUE(check_suite(d, suites::averaging<Q>(names::dot, "P")).pass);
}

TEST(Registry, ParsesArguments) {
    auto s = parse_suite_spec("ROTA_BAXTER:dot,R,-1");
    EXPECT_EQ(s.id, "ROTA_BAXTER");
    EXPECT_EQ(s.args, (std::vector<std::string>{"dot", "R", "-1"}));
    EXPECT_EQ(suite_by_id<Q>("ROTA_BAXTER:dot,R,-1").id, "ROTA_BAXTER");
    EXPECT_THROW(suite_by_id<Q>("NOPE"), UnknownName);
    EXPECT_THROW(suite_by_id<Q>("SAPP:x"), ParseError);
    EXPECT_THROW(suite_by_id<Q>("COMMUTE:P,"), ParseError);
    EXPECT_EQ(suite_ids().size(), 13u);
}

TEST(Registry, WeightArgumentMatters) {
    auto a = catalog_example<Q>("ex_3_25");
    EXPECT_TRUE(check_suite(a, suite_by_id<Q>("ROTA_BAXTER:dot,R,-1")).pass);
    EXPECT_FALSE(check_suite(a, suite_by_id<Q>("ROTA_BAXTER:dot,R,0")).pass);
}
