#include <gtest/gtest.h>

#include <random>

#include "dynkin/exact/gf4.hpp"
#include "dynkin/exact/matrix.hpp"
#include "dynkin/exact/mpoly.hpp"
#include "dynkin/exact/qcoeff.hpp"
#include "dynkin/exact/ratfun.hpp"
#include "dynkin/exact/smith.hpp"

using namespace dynkin;

namespace {

RatFun rf(const char* s) { return RatFun::parse(s); }

RatFun random_ratfun(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
    auto poly = [&] {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return QPoly(c);
    };
    QPoly d = poly();
    while (d.is_zero()) d = poly();
    return RatFun(poly(), d);
}

}  // namespace

TEST(Rat, ParseAndCanonicalize) {
    EXPECT_EQ(parse_rat("6/4"), make_rat(3, 2));
    EXPECT_EQ(parse_rat("-7"), Rat(-7));
    EXPECT_THROW(parse_rat("1/0"), std::domain_error);
    EXPECT_THROW(parse_rat("x"), std::invalid_argument);
}

TEST(RatFun, InverseTimesSelfIsOne) {
    const RatFun a = rf("v^2-1");
    EXPECT_EQ(a.inv() * a, RatFun(1));
    EXPECT_THROW(RatFun().inv(), std::domain_error);
}

TEST(RatFun, EvalAt) {
    EXPECT_EQ(rf("v/(v^2-1)").eval_at(Rat(2)), make_rat(2, 3));
    EXPECT_THROW(rf("v/(v^2-1)").eval_at(Rat(1)), std::domain_error);
}

TEST(RatFun, A2CoefficientIdentity) {
    EXPECT_EQ(rf("v^3/(v^2-1)^2"), rf("v/(v^2-1) + v/(v^2-1)^2"));
}

TEST(RatFun, PrintParseRoundTrip) {
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        const RatFun a = random_ratfun(rng);
        EXPECT_EQ(RatFun::parse(a.str()), a) << a.str();
    }
    EXPECT_EQ(rf("v^3/(v^2-1)^2").str(), "v^3/(v^4-2*v^2+1)");
    EXPECT_EQ(rf("v^-2"), RatFun::v_pow(-2));
    EXPECT_EQ(rf("1/2*v").eval_at(Rat(4)), Rat(2));
    EXPECT_THROW(rf("v^"), std::invalid_argument);
    EXPECT_THROW(rf("1/(v-v)"), std::invalid_argument);
}

TEST(RatFun, FieldAxiomsRandom) {
    std::mt19937 rng(11);
    for (int k = 0; k < 1000; ++k) {
        const RatFun a = random_ratfun(rng), b = random_ratfun(rng);
        if (b.is_zero()) continue;
        ASSERT_EQ((a * b) * b.inv(), a);
    }
}

TEST(QCoeff, MatchesRatFun) {
    const QCoeff c1 = QCoeff::v_pow(1) * QCoeff::inv_v_pow_minus_one(2);
    EXPECT_EQ(c1.to_ratfun(), rf("v/(v^2-1)"));
    const QCoeff sum = c1 + c1 * c1 * QCoeff::v_pow(-1);
    EXPECT_EQ(sum.to_ratfun(), rf("v/(v^2-1) + v/(v^2-1)^2"));
    EXPECT_EQ(sum.to_ratfun(), rf("v^3/(v^2-1)^2"));
    EXPECT_EQ(sum.eval_at(Rat(2)), make_rat(8, 9));
    EXPECT_TRUE((c1 - c1).is_zero());
}

TEST(QCoeff, CanonicalAfterCancellation) {
    // (v^2-1)/(v^2-1) reduces to 1
    const QCoeff a = QCoeff::inv_v_pow_minus_one(2) * (QCoeff::v_pow(2) - QCoeff(1));
    EXPECT_EQ(a, QCoeff(1));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(1, 6), sh(-3, 3), c(-3, 3);
    for (int k = 0; k < 300; ++k) {
        QCoeff x = QCoeff(c(rng)) * QCoeff::v_pow(sh(rng)) * QCoeff::inv_v_pow_minus_one(pick(rng));
        QCoeff y = QCoeff(c(rng)) * QCoeff::v_pow(sh(rng)) * QCoeff::inv_v_pow_minus_one(pick(rng));
        ASSERT_EQ((x + y).to_ratfun(), x.to_ratfun() + y.to_ratfun());
        ASSERT_EQ((x * y).to_ratfun(), x.to_ratfun() * y.to_ratfun());
        ASSERT_EQ(((x + y) - y), x);
    }
}

TEST(Cyclotomic, SmallCases) {
    EXPECT_EQ(cyclotomic(1), ZPoly(std::vector<Int>{-1, 1}));
    EXPECT_EQ(cyclotomic(4), ZPoly(std::vector<Int>{1, 0, 1}));
    EXPECT_EQ(cyclotomic(6), ZPoly(std::vector<Int>{1, -1, 1}));
    EXPECT_EQ(cyclotomic(12).degree(), 4);
}

TEST(GenericRank, Examples) {
    ParamMatrix a(1, 1, 1);
    a.set_affine(0, 0, Rat(0), {Rat(1)});
    EXPECT_EQ(generic_rank(a), 1u);
    ParamMatrix b(2, 2, 2);
    b.set_affine(0, 0, Rat(0), {Rat(1), Rat(0)});
    b.set_affine(0, 1, Rat(0), {Rat(0), Rat(1)});
    b.set_affine(1, 0, Rat(0), {Rat(1), Rat(0)});
    b.set_affine(1, 1, Rat(0), {Rat(0), Rat(1)});
    EXPECT_EQ(generic_rank(b), 1u);
    EXPECT_EQ(symbolic_rank(b), 1u);
    EXPECT_EQ(generic_rank(ParamMatrix(3, 2, 2)), 0u);
    EXPECT_EQ(generic_rank(ParamMatrix(0, 4, 0)), 0u);
}

TEST(GenericRank, AgreesWithSpecializations) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-2, 2), dims(1, 4), np(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = static_cast<std::size_t>(dims(rng)), cc = static_cast<std::size_t>(dims(rng));
        const auto h = static_cast<std::size_t>(np(rng));
        ParamMatrix m(r, cc, h);
        // rank-deficient by construction half of the time
        const bool dup = trial % 2 == 0 && r > 1;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cc; ++j) {
                if (dup && i == r - 1) {
                    m.at(i, j) = m.at(0, j);
                    continue;
                }
                std::vector<Rat> coef(h);
                for (auto& x : coef) x = c(rng);
                m.set_affine(i, j, Rat(c(rng)), coef);
            }
        const std::size_t g = symbolic_rank(m);
        EXPECT_EQ(generic_rank(m), g);
        for (int p = 0; p < 5; ++p) {
            std::vector<Rat> pt(h);
            for (auto& x : pt) x = make_rat(c(rng) * 7 + 3, 5);
            EXPECT_LE(rank(m.specialize(pt)), g);
        }
    }
}

TEST(MPoly, ExactDivision) {
    const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    const MPoly p = (x + y) * (x - y);
    EXPECT_EQ(exact_div(p, x + y), x - y);
    EXPECT_THROW(exact_div(x, y), std::domain_error);
}

TEST(Smith, Examples) {
    auto m = [](std::vector<long> v, std::size_t r, std::size_t c) {
        std::vector<Int> d(v.begin(), v.end());
        return IntMatrix(r, c, d);
    };
    EXPECT_EQ(smith_normal_form(m({2, 0, 0, 3}, 2, 2)).invariant_factors, (std::vector<Int>{1, 6}));
    EXPECT_EQ(smith_normal_form(m({1, 0, 0, 1}, 2, 2)).invariant_factors, (std::vector<Int>{1, 1}));
    EXPECT_EQ(smith_normal_form(m({0}, 1, 1)).invariant_factors, (std::vector<Int>{0}));
    const auto s = smith_normal_form(m({2, 4, 4, -6, 6, 12, 10, -4, -16}, 3, 3));
    EXPECT_EQ(s.invariant_factors, (std::vector<Int>{2, 6, 12}));
}

TEST(Smith, RandomDivisibilityChain) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-5, 5), d(1, 5);
    for (int t = 0; t < 50; ++t) {
        const auto r = static_cast<std::size_t>(d(rng)), cc = static_cast<std::size_t>(d(rng));
        IntMatrix a(r, cc);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cc; ++j) a(i, j) = c(rng);
        const auto s = smith_normal_form(a);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            const Int& x = s.invariant_factors[i];
            const Int& y = s.invariant_factors[i + 1];
            if (x == 0) EXPECT_EQ(y, 0);
            else EXPECT_EQ(y % x, 0);
        }
    }
}

TEST(GF4, FieldProperties) {
    for (auto x : GF4::elements()) {
        EXPECT_EQ(x * x * x * x, x);
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inverse(), GF4(1));
            EXPECT_EQ(x * x * x, GF4(1));
        }
        EXPECT_EQ(x + x, GF4(0));
    }
    const GF4 w = GF4::w();
    EXPECT_NE(w, GF4(1));
    EXPECT_NE(w * w, GF4(1));
    EXPECT_EQ(w * w, w + GF4(1));
    for (auto a : GF4::elements())
        for (auto b : GF4::elements())
            for (auto c : GF4::elements()) EXPECT_EQ(a * (b + c), a * b + a * c);
}

TEST(Matrix, NullspaceAndSolve) {
    Matrix<Rat> m(2, 3, {Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6)});
    EXPECT_EQ(rank(m), 1u);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size(), 2u);
    for (const auto& x : ns) EXPECT_EQ(x[0] + 2 * x[1] + 3 * x[2], Rat(0));
    Matrix<Rat> basis(3, 1, {Rat(1), Rat(1), Rat(0)});
    Matrix<Rat> target(3, 1, {Rat(2), Rat(2), Rat(0)});
    EXPECT_EQ(solve_in_span(basis, target)(0, 0), Rat(2));
    Matrix<Rat> bad(3, 1, {Rat(1), Rat(0), Rat(0)});
    EXPECT_THROW(solve_in_span(basis, bad), std::runtime_error);
}
