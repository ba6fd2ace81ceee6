#include <gtest/gtest.h>

#include "sapp/oracle.hpp"

using namespace sapp;
using Q = Rational;

namespace {

// e1 e1 = e2 with R(e1) = e2: Rota-Baxter of weight 0.
Bundle<Q> nilpotent_with_R() {
    Bundle<Q> a(2);
    Mult<Q> m(2);
    m(0, 0, 1) = Q(1);
    a.set_mult(names::dot, m);
    Matrix<Q> R(2, 2);
    R(1, 0) = Q(1);
    a.set_op("R", R);
    return a;
}

}  // namespace

TEST(Frobenius, ExampleDoubleIsSymmetricAveragingRbFrobenius) {
    auto a = catalog_example<Q>("ex_3_25");
    const auto& B = a.form("B");
    EXPECT_TRUE(check_frobenius_comm(a, B).pass);
    EXPECT_TRUE(check_symmetric_averaging_rb_frobenius(a, "P", "R", B, Q(-1)).pass);
    EXPECT_FALSE(check_symmetric_averaging_rb_frobenius(a, "P", "R", B, Q(0)).pass);
    EXPECT_EQ(r_from_R(a.op("R"), B), a.tensor("r"));
    EXPECT_EQ(R_from_r(a.tensor("r"), B), a.op("R"));
}

TEST(Frobenius, RbFrobeniusDoubleOfBase) {
    auto base = catalog_example<Q>("ex_3_25_base");
    auto d = rb_frobenius_double(base, "R", Q(-1));
    auto ex = catalog_example<Q>("ex_3_25");
    EXPECT_EQ(d.mult(names::dot), ex.mult(names::dot));
    EXPECT_EQ(d.op("R"), ex.op("R"));  // id (+) -(id - id)* = proj_A
    EXPECT_EQ(d.form("B"), ex.form("B"));
}

TEST(Frobenius, QuadraticRbSapp) {
    auto a = catalog_example<Q>("ex_3_25");
    auto s = quadratic_rb_sapp_from_comm(a, a.form("B"));
    EXPECT_TRUE(check_quadratic_sapp(s, a.form("B")).pass);
    EXPECT_TRUE(check_quadratic_rb_sapp(s, "R", a.form("B"), Q(-1)).pass);
    EXPECT_EQ(s.mult(names::tri_r), catalog_example<Q>("ex_6_29").mult(names::tri_r));
}

TEST(Frobenius, RbBridgeAgreesOnExample) {
    auto a = catalog_example<Q>("ex_3_25");
    auto br = rb_bridge_comm(a, a.form("B"), a.tensor("r"));
    EXPECT_TRUE(br.report.pass);
    EXPECT_TRUE(br.operator_side.pass);
    EXPECT_TRUE(br.tensor_side.pass);
    auto s = quadratic_rb_sapp_from_comm(a, a.form("B"));
    auto bs = rb_bridge_sapp(s, a.form("B"), a.tensor("r"));
    EXPECT_TRUE(bs.report.pass);
    EXPECT_TRUE(bs.operator_side.pass);
    EXPECT_TRUE(weight_lambda_symmetry_link(a.form("B"), a.tensor("r"), Q(-1)).pass);
}

TEST(Frobenius, WeightZeroGivesTriangular) {
    auto base = nilpotent_with_R();
    ASSERT_TRUE(check_suite(base, suites::rota_baxter<Q>(names::dot, "R", Q(0))).pass);
    auto d = rb_frobenius_double(base, "R", Q(0));
    d.set_op("P", projection<Q>(2, 2, true));
    auto t = triangular_from_weight0_comm(d, d.form("B"));
    EXPECT_TRUE(t.report.pass);
    EXPECT_EQ(t.classification.verdict, "triangular");
    auto s = quadratic_rb_sapp_from_comm(d, d.form("B"));
    auto ts = triangular_from_weight0_sapp(s, d.form("B"));
    EXPECT_TRUE(ts.report.pass);
}

TEST(Frobenius, CommDoubleCanonicalRFactorizable) {
    auto a = catalog_example<Q>("ex_3_25");
    auto dbl = comm_double(a, dual_multiplication(a.comult("delta")));
    EXPECT_TRUE(dbl.report.pass);
    EXPECT_TRUE(check_comm_double(dbl).pass);
    EXPECT_EQ(dbl.total.dim, 8u);
    auto [r, cls] = canonical_r_on_double(dbl, Setting::comm);
    EXPECT_EQ(r, canonical_r<Q>(4));
    EXPECT_EQ(cls.verdict, "factorizable");
}

TEST(Frobenius, SappManinDouble) {
    auto ex = catalog_example<Q>("ex_6_29");
    Bundle<Q> plain(4), dual(4);
    plain.set_mult(names::tri_r, ex.mult(names::tri_r));
    plain.set_mult(names::tri_l, ex.mult(names::tri_l));
    dual.set_mult(names::tri_r, dual_multiplication(ex.comult("vartheta")));
    dual.set_mult(names::tri_l, dual_multiplication(ex.comult("theta")));
    auto md = sapp_manin_double(plain, dual);
    EXPECT_TRUE(check_sapp_manin_double(md).pass);
    EXPECT_EQ(canonical_r_on_double(md, Setting::sapp).second.verdict, "factorizable");
}

TEST(Frobenius, CorrespondenceRoundTrip) {
    auto a = catalog_example<Q>("ex_3_25");
    auto to = to_rb(a, a.tensor("r"), Setting::comm);
    EXPECT_TRUE(to.report.pass);
    EXPECT_EQ(to.R, a.op("R"));
    EXPECT_EQ(to.B, a.form("B"));
    auto back = to_bialgebra(a, to.R, to.B, Setting::comm);
    EXPECT_TRUE(back.report.pass);
    EXPECT_EQ(back.r, a.tensor("r"));
    EXPECT_TRUE(correspondence_round_trip(a, to.R, to.B, Setting::comm).pass);
    auto s = quadratic_rb_sapp_from_comm(a, a.form("B"));
    EXPECT_TRUE(correspondence_round_trip(s, a.op("R"), a.form("B"), Setting::sapp).pass);
}

TEST(Frobenius, NonFactorizableThrows) {
    auto a = catalog_example<Q>("ex_3_25");
    Tensor2<Q> zero(4, 4);
    EXPECT_THROW(to_rb(a, zero, Setting::comm), NotFactorizable);
    EXPECT_THROW(factorization_map(a, zero, Setting::comm), NotFactorizable);
}

TEST(Frobenius, FactorizationDecomposes) {
    auto a = catalog_example<Q>("ex_3_25");
    const auto& r = a.tensor("r");
    auto f = factorization_map(a, r, Setting::comm);
    EXPECT_TRUE(f.report.pass);
    EXPECT_TRUE(is_invertible(f.psi));
    EXPECT_TRUE(kernel(f.S).empty());
    for (std::size_t x = 0; x < 4; ++x) {
        auto ex = basis_vector<Q>(4, x);
        auto [x1, x2] = f.decompose(ex);
        EXPECT_EQ(x1 - x2, ex);
    }
    auto s = quadratic_rb_sapp_from_comm(a, a.form("B"));
    EXPECT_TRUE(factorization_map(s, r, Setting::sapp).report.pass);
}
