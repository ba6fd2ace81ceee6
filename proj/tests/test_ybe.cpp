#include <gtest/gtest.h>

#include "sapp/oracle.hpp"

using namespace sapp;
using Q = Rational;

namespace {

Bundle<Q> unit_line() {
    Bundle<Q> b(1);
    Mult<Q> m(1);
    m(0, 0, 0) = Q(1);
    b.set_mult(names::dot, m);
    b.set_op("P", Matrix<Q>::identity(1));
    b.set_op("Q", Matrix<Q>::identity(1));
    return b;
}

}  // namespace

TEST(Aybe, IdempotentLineHasNonzeroTensor) {
    // e.e = e, r = e (x) e: the three terms each give e (x) e (x) e
    Tensor2<Q> r(1, 1);
    r(0, 0) = Q(1);
    auto t = aybe_tensor(unit_line(), r);
    EXPECT_EQ(t(0, 0, 0), Q(1));
    EXPECT_EQ(classify_r(unit_line(), r, Setting::comm).verdict, "none");
}

TEST(Aybe, ZeroTensorIsTriangular) {
    auto a = catalog_example<Q>("ex_3_25");
    Tensor2<Q> r(4, 4);
    EXPECT_TRUE(aybe_tensor(a, r).is_zero());
    EXPECT_EQ(classify_r(a, r, Setting::comm).verdict, "triangular");
    EXPECT_EQ(classify_r(catalog_example<Q>("ex_6_29"), r, Setting::sapp).verdict, "triangular");
}

TEST(Aybe, ExampleTensorIsFactorizable) {
    auto a = catalog_example<Q>("ex_3_25");
    const auto& r = a.tensor("r");
    EXPECT_TRUE(aaybe_check(a, r).pass);
    EXPECT_TRUE(comm_invariance_check(a, Tensor2<Q>(r + tau(r))).pass);
    auto c = classify_r(a, r, Setting::comm);
    EXPECT_EQ(c.verdict, "factorizable");
    EXPECT_FALSE(c.is_skew);
    EXPECT_TRUE(c.sharp_sym_bijective);
    EXPECT_EQ(delta_r(a, r), a.comult("delta"));
    EXPECT_TRUE(check_r_bialgebra_conditions_comm(a, r).pass);
}

TEST(Aybe, SingularSymmetricPartIsQuasiTriangular) {
    auto z = catalog_example<Q>("zero(2)");
    Tensor2<Q> r(2, 2);
    r(0, 0) = Q(1);
    EXPECT_EQ(classify_r(z, r, Setting::comm).verdict, "quasi-triangular");
}

TEST(Aybe, OperatorConditionsMatter) {
    auto a = catalog_example<Q>("ex_3_25");
    a.set_op("P", Matrix<Q>::identity(4));
    auto rep = aaybe_check(a, a.tensor("r"));
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(classify_r(a, a.tensor("r"), Setting::comm).verdict, "none");
}

TEST(SappYbe, TransferredExample) {
    auto a = catalog_example<Q>("ex_3_25");
    const auto& r = a.tensor("r");
    auto t = transfer_quasitriangular(a, r);
    EXPECT_TRUE(t.report.pass);
    EXPECT_TRUE(sa_tensor(t.sapp, r).is_zero());
    EXPECT_TRUE(sapp_invariance_check(t.sapp, Tensor2<Q>(r + tau(r))).pass);
    auto cm = sapp_comults_from_r(t.sapp, r);
    EXPECT_EQ(cm.vartheta, t.vartheta);
    EXPECT_EQ(cm.theta, t.theta);
    EXPECT_TRUE(check_r_bialgebra_conditions_sapp(t.sapp, r).pass);
    EXPECT_TRUE(sharp_homomorphism_check(t.sapp, r).pass);
    EXPECT_EQ(classify_r(t.sapp, r, Setting::sapp).verdict, "factorizable");
}

TEST(SappYbe, DualMultiplicationsMatchComults) {
    auto ex = catalog_example<Q>("ex_6_29");
    auto dm = dual_mults_from_r(ex, ex.tensor("r"));
    EXPECT_EQ(dm.tri_r, dual_multiplication(ex.comult("vartheta")));
    EXPECT_TRUE(dm.tri_l.is_zero());
}

TEST(SappYbe, NonSolutionOnZeroCircIsNone) {
    // |> = 0, <| with e1 <| e1 = e1 is not a SAPP, but SA(r) is still defined.
    Bundle<Q> b(1);
    Mult<Q> tl(1);
    tl(0, 0, 0) = Q(1);
    b.set_mult(names::tri_r, Mult<Q>(1));
    b.set_mult(names::tri_l, tl);
    Tensor2<Q> r(1, 1);
    r(0, 0) = Q(1);
    EXPECT_FALSE(sa_tensor(b, r).is_zero());
    EXPECT_EQ(classify_r(b, r, Setting::sapp).verdict, "none");
}

TEST(SappYbe, TransferOverFiniteFields) {
    auto a = catalog_example<F3>("ex_3_25");
    auto t = transfer_quasitriangular(a, a.tensor("r"));
    EXPECT_TRUE(t.report.pass);
    EXPECT_EQ(t.sapp.mult(names::tri_l), catalog_example<F3>("ex_6_29").mult(names::tri_l));
}
