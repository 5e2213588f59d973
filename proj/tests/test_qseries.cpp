#include <gtest/gtest.h>

#include <random>

#include "dynkin/qseries.hpp"

using namespace dynkin;

namespace {

RatFun rf(const char* s) { return RatFun::parse(s); }

QSeries<QCoeff> random_series(const TorusPtr& t, std::mt19937& rng, bool unit) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), k(-2, 2);
    QSeries<QCoeff> s = unit ? QSeries<QCoeff>::one(t) : QSeries<QCoeff>(t);
    for (int i = 0; i < 5; ++i) {
        DimVec a{e(rng), e(rng)};
        if (unit && is_zero(a)) continue;
        s.add_term(a, QCoeff(c(rng)) * QCoeff::v_pow(k(rng)));
    }
    return s;
}

}  // namespace

TEST(Dilog, FirstCoefficients) {
    EXPECT_EQ(dilog_coeff<RatFun>(0), RatFun(1L));
    EXPECT_EQ(dilog_coeff<RatFun>(1), rf("v/(v^2-1)"));
    EXPECT_EQ(dilog_coeff<RatFun>(2), rf("v^2/((v^2-1)*(v^4-1))"));
}

TEST(Dilog, QCoeffMatchesRatFun) {
    for (int j = 0; j <= 6; ++j) EXPECT_EQ(dilog_coeff<QCoeff>(j).to_ratfun(), dilog_coeff<RatFun>(j)) << j;
}

// E(v^2 x) = (1 + v x) E(x)
TEST(Dilog, FunctionalEquation) {
    const int D = 7;
    for (int j = 1; j <= D; ++j) {
        const RatFun lhs = dilog_coeff<RatFun>(j) * RatFun::v_pow(2 * j);
        const RatFun rhs = dilog_coeff<RatFun>(j) + RatFun::v() * dilog_coeff<RatFun>(j - 1);
        EXPECT_EQ(lhs, rhs) << j;
    }
}

TEST(QTorus, A2Form) {
    auto t = QTorus::of_quiver(build_quiver("A2", "1>2"), 4);
    EXPECT_EQ(t->omega({1, 0}, {0, 1}), -1);
    EXPECT_EQ(t->omega({0, 1}, {1, 0}), 1);
    EXPECT_EQ(monomial_mul(*t, {0, 1}, {1, 0}), std::make_pair(1L, DimVec{1, 1}));
    EXPECT_EQ(monomial_mul(*t, {1, 0}, {0, 1}), std::make_pair(-1L, DimVec{1, 1}));
    EXPECT_EQ(t->omega({2, 1}, {2, 1}), 0);
}

TEST(QTorus, CustomValidation) {
    EXPECT_THROW(QTorus::custom({{0, 1}, {1, 0}}, 3), std::invalid_argument);
    EXPECT_THROW(QTorus::custom({{0, 1}}, 3), std::invalid_argument);
    EXPECT_NO_THROW(QTorus::custom({{0, 2}, {-2, 0}}, 3));
}

TEST(QSeries, TruncationAndExponents) {
    auto t = QTorus::custom({{0, 1}, {-1, 0}}, 4);
    const auto e = qexp<QCoeff>(t, {1, 1});
    EXPECT_EQ(e.size(), 3u);
    EXPECT_EQ(e.coeff({2, 2}), dilog_coeff<QCoeff>(2));
    EXPECT_TRUE(e.coeff({1, 0}).is_zero());
    QSeries<QCoeff> s(t);
    s.add_term({3, 2}, QCoeff(1L));
    EXPECT_EQ(s.size(), 0u);
    EXPECT_THROW(s.add_term({-1, 0}, QCoeff(1L)), std::invalid_argument);
    EXPECT_THROW(qexp<QCoeff>(t, {0, 0}), std::invalid_argument);
    EXPECT_EQ(e.truncated(2).size(), 2u);
}

TEST(QSeries, RingAxiomsRandom) {
    auto t = QTorus::custom({{0, 1}, {-1, 0}}, 4);
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_series(t, rng, false), b = random_series(t, rng, false), c = random_series(t, rng, false);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, QSeries<QCoeff>(t));
    }
}

TEST(QSeries, Inverse) {
    auto t = QTorus::custom({{0, 1}, {-1, 0}}, 5);
    const auto one = QSeries<QCoeff>::one(t);
    const auto e = qexp<QCoeff>(t, {1, 0});
    EXPECT_EQ(e * e.inverse(), one);
    EXPECT_EQ(e.inverse() * e, one);
    std::mt19937 rng(3);
    for (int k = 0; k < 10; ++k) {
        const auto s = random_series(t, rng, true);
        EXPECT_EQ(s * s.inverse(), one);
    }
    EXPECT_THROW(QSeries<QCoeff>(t).inverse(), std::domain_error);
}

TEST(QSeries, NonCommutative) {
    auto t = QTorus::custom({{0, 1}, {-1, 0}}, 2);
    const auto x = QSeries<QCoeff>::monomial(t, {1, 0}, QCoeff(1L));
    const auto y = QSeries<QCoeff>::monomial(t, {0, 1}, QCoeff(1L));
    EXPECT_EQ(x * y, QSeries<QCoeff>::monomial(t, {0, 0}, QCoeff::v_pow(2)) * (y * x));
}

TEST(QSeries, MismatchedTori) {
    auto t1 = QTorus::custom({{0, 1}, {-1, 0}}, 3);
    auto t2 = QTorus::custom({{0, -1}, {1, 0}}, 3);
    EXPECT_THROW(qexp<QCoeff>(t1, {1, 0}) * qexp<QCoeff>(t2, {1, 0}), std::invalid_argument);
    auto t3 = QTorus::custom({{0, 1}, {-1, 0}}, 3);
    EXPECT_NO_THROW(qexp<QCoeff>(t1, {1, 0}) * qexp<QCoeff>(t3, {1, 0}));
}

TEST(QSeries, QCoeffAgreesWithRatFun) {
    auto t = QTorus::of_quiver(build_quiver("A2", "1>2"), 5);
    const auto a = qexp<QCoeff>(t, {0, 1}) * qexp<QCoeff>(t, {1, 1}) * qexp<QCoeff>(t, {1, 0});
    const auto b = qexp<RatFun>(t, {0, 1}) * qexp<RatFun>(t, {1, 1}) * qexp<RatFun>(t, {1, 0});
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [e, c] : a.terms()) EXPECT_EQ(c.to_ratfun(), b.coeff(e)) << dim_str(e);
}
