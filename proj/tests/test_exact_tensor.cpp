#include <gtest/gtest.h>

#include <random>

#include "sapp/bundle.hpp"
#include "sapp/tensor.hpp"

using namespace sapp;
using Q = Rational;

namespace {

template <class K>
Matrix<K> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = K(d(rng));
    return m;
}

}  // namespace

TEST(Rational, ParseNormalizes) {
    EXPECT_EQ(Q::parse("2/4").str(), "1/2");
    EXPECT_EQ(Q::parse("-6/3").str(), "-2");
    EXPECT_EQ(Q::parse("+5").str(), "5");
    EXPECT_EQ(Q::parse("0/7").str(), "0");
    EXPECT_EQ(Q(3, -6), Q::parse("-1/2"));
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1 /2"})
        EXPECT_THROW(Q::parse(bad), ParseError) << bad;
}

TEST(Rational, ExactArithmetic) {
    Q a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Q(1, 2));
    EXPECT_EQ(a - b, Q(1, 6));
    EXPECT_EQ(a * b, Q(1, 18));
    EXPECT_EQ(a / b, Q(2));
    EXPECT_THROW(a / Q(0), std::domain_error);
    // large values stay exact
    Q big = Q::parse("123456789012345678901234567890/7");
    EXPECT_EQ((big * Q(7)).str(), "123456789012345678901234567890");
}

TEST(Fp, FieldAxioms) {
    for (long x = 1; x < 5; ++x) EXPECT_EQ(F5(x) * F5(x).inverse(), F5(1));
    EXPECT_EQ(F3(-1), F3(2));
    EXPECT_EQ(F2(1) + F2(1), F2(0));
    EXPECT_EQ(-F5(2), F5(3));
    EXPECT_THROW(F3(1) / F3(0), std::domain_error);
}

TEST(Fp, ParseReducesRationals) {
    EXPECT_EQ(F3::parse("1/2"), F3(2));
    EXPECT_EQ(F5::parse("-1"), F5(4));
    EXPECT_EQ(F2::parse("3"), F2(1));
    EXPECT_THROW(F3::parse("1/3"), ParseError);
    EXPECT_STREQ(F2::field_name(), "f2");
    EXPECT_STREQ(Q::field_name(), "q");
}

TEST(Matrix, InverseRoundTrip) {
    std::mt19937_64 rng(11);
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        auto m = random_matrix<Q>(rng, 4, 4);
        if (!is_invertible(m)) continue;
        ++tested;
        EXPECT_EQ(m * inverse(m), Matrix<Q>::identity(4));
        EXPECT_EQ(inverse(m) * m, Matrix<Q>::identity(4));
    }
    EXPECT_GT(tested, 100);
}

TEST(Matrix, SingularInverseThrows) {
    Matrix<Q> m(2, 2);
    m(0, 0) = Q(1);
    m(0, 1) = Q(2);
    m(1, 0) = Q(2);
    m(1, 1) = Q(4);
    EXPECT_FALSE(is_invertible(m));
    EXPECT_THROW(inverse(m), SingularForm);
    EXPECT_THROW(inverse(Matrix<Q>(2, 3)), DimensionMismatch);
}

TEST(Matrix, RankNullity) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto m = random_matrix<F3>(rng, 3, 5, 0, 2);
        auto ker = kernel(m);
        EXPECT_EQ(rank(m) + ker.size(), 5u);
        for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
    }
}

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(Matrix<Q>(2, 3) * Matrix<Q>(2, 3), DimensionMismatch);
    EXPECT_THROW(Matrix<Q>(2, 2) + Matrix<Q>(3, 3), DimensionMismatch);
    EXPECT_THROW(Matrix<Q>(2, 2).apply(Vec<Q>(3)), DimensionMismatch);
}

TEST(Tensor, TauAndSharpAreInvolutions) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto r = random_matrix<Q>(rng, 3, 3);
        EXPECT_EQ(tau(tau(r)), r);
        EXPECT_EQ(unsharp(sharp(r)), r);
        EXPECT_TRUE(is_symmetric(Tensor2<Q>(r + tau(r))));
    }
}

TEST(Tensor, SharpPairsFirstLeg) {
    // r = e1 (x) e2 : r#(e*1) = e2, r#(e*2) = 0
    Tensor2<Q> r = outer(basis_vector<Q>(2, 0), basis_vector<Q>(2, 1));
    EXPECT_EQ(sharp(r).apply(basis_vector<Q>(2, 0)), basis_vector<Q>(2, 1));
    EXPECT_TRUE(is_zero(sharp(r).apply(basis_vector<Q>(2, 1))));
}

TEST(Tensor, MapTensorOnPureTensors) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto f = random_matrix<Q>(rng, 3, 3), g = random_matrix<Q>(rng, 3, 3);
        auto x = random_matrix<Q>(rng, 3, 1).column(0), y = random_matrix<Q>(rng, 3, 1).column(0);
        EXPECT_EQ(apply_map_tensor(f, g, outer(x, y)), outer(f.apply(x), g.apply(y)));
    }
}

TEST(Tensor, ThreeLegMapMatchesPureTensor) {
    std::mt19937_64 rng(9);
    auto f = random_matrix<F5>(rng, 2, 2, 0, 4), g = random_matrix<F5>(rng, 2, 2, 0, 4),
         h = random_matrix<F5>(rng, 2, 2, 0, 4);
    auto x = random_matrix<F5>(rng, 2, 1, 0, 4).column(0), y = random_matrix<F5>(rng, 2, 1, 0, 4).column(0),
         z = random_matrix<F5>(rng, 2, 1, 0, 4).column(0);
    auto lhs = apply_map_tensor(f, g, h, outer(outer(x, y), z));
    EXPECT_EQ(lhs, outer(outer(f.apply(x), g.apply(y)), h.apply(z)));
}

TEST(Tensor, AdjointWrtForm) {
    std::mt19937_64 rng(21);
    int tested = 0;
    for (int t = 0; t < 100; ++t) {
        auto b = random_matrix<Q>(rng, 3, 3);
        if (!is_invertible(b)) continue;
        ++tested;
        auto p = random_matrix<Q>(rng, 3, 3);
        auto ph = adjoint_wrt_form(p, b);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                auto x = basis_vector<Q>(3, i), y = basis_vector<Q>(3, j);
                EXPECT_EQ(form_value(b, ph.apply(x), y), form_value(b, x, p.apply(y)));
            }
    }
    EXPECT_GT(tested, 50);
}

TEST(Tensor, PairingFormAdjointOfProjection) {
    auto b = pairing_form<Q>(2);
    EXPECT_EQ(adjoint_wrt_form(projection<Q>(2, 2, true), b), projection<Q>(2, 2, false));
    EXPECT_EQ(adjoint_wrt_form(Matrix<Q>::identity(4), b), Matrix<Q>::identity(4));
    EXPECT_EQ(natural(b) * phi_from_form(b).transpose(), Matrix<Q>::identity(4));
}
