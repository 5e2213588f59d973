#include <gtest/gtest.h>

#include <algorithm>

#include "dynkin/dt.hpp"

using namespace dynkin;

TEST(DT, A1IsOneDilog) {
    DerivedCategory dc(build_quiver("A1", ""));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 5);
    EXPECT_EQ(dt.invariant(), qexp<QCoeff>(dt.torus(), {1}));
}

TEST(DT, A2ShortAndLongPaths) {
    DerivedCategory dc(build_quiver("A2", "1>2"));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 6);
    PathQuery pq(dt.graph(), dt.source(), dt.target());
    const auto paths = pq.enumerate(PathQuery::Mode::All);
    ASSERT_EQ(paths.size(), 2u);
    std::size_t lengths = paths[0].labels.size() + paths[1].labels.size();
    EXPECT_EQ(lengths, 5u);
    const auto a = dt.product(paths[0]), b = dt.product(paths[1]);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.coeff({1, 1}).to_ratfun(), RatFun::parse("v^3/(v^2-1)^2"));
    EXPECT_EQ(a.coeff({1, 0}).to_ratfun(), RatFun::parse("v/(v^2-1)"));
    EXPECT_EQ(a.coeff({0, 1}).to_ratfun(), RatFun::parse("v/(v^2-1)"));
}

TEST(DT, ForwardThenBackIsIdentity) {
    DerivedCategory dc(build_quiver("A3", "1>2,3>2"));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 5);
    for (const auto& s : hc.initial_heart().simples())
        EXPECT_EQ(dt.product({{s, 1}, {s, -1}}), Series::one(dt.torus()));
    EXPECT_EQ(dt.between(dt.source(), dt.source()), Series::one(dt.torus()));
    EXPECT_THROW(dt.between(dt.target(), dt.source()), std::invalid_argument);
    EXPECT_THROW(dt.factor(dc.simple(1, 1), 1), std::invalid_argument);
}

TEST(DT, PathIndependenceA2A3) {
    for (const char* type : {"A2", "A3"}) {
        DerivedCategory dc(build_quiver(type, ""));
        HeartCalculus hc(dc);
        DTEngine dt(hc, 5);
        const auto rep = verify_path_independence(dt, {PathPolicy::Kind::All, 20, 3, 6});
        EXPECT_TRUE(rep.equal) << type << ": " << rep.offending;
        EXPECT_EQ(rep.signed_paths, 20u);
        EXPECT_EQ(*rep.common, dt.invariant());
    }
}

TEST(DT, PathIndependenceD4Sampled) {
    DerivedCategory dc(build_quiver("D4", ""));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 4);
    const auto rep = verify_path_independence(dt, {PathPolicy::Kind::LongestPlusSample, 10, 5, 4});
    EXPECT_TRUE(rep.equal) << rep.offending;
    EXPECT_GT(rep.directed, 0u);
}

TEST(DT, PentagonAndSquare) {
    EXPECT_TRUE(pentagon_check(8));
    EXPECT_TRUE(pentagon_check(1));
    EXPECT_FALSE(pentagon_check(2, true));
    EXPECT_TRUE(square_check(6));
    const auto [l, r] = pentagon_sides(2, true);
    EXPECT_NE(l.coeff({1, 1}), r.coeff({1, 1}));
}

TEST(DT, InvariantIsOrderedProductOverIndecomposables) {
    for (const char* type : {"A2", "A3", "D4"}) {
        DerivedCategory dc(build_quiver(type, ""));
        HeartCalculus hc(dc);
        const auto rep = ls_identity_check(hc, 4);
        EXPECT_TRUE(rep.equal) << type;
        EXPECT_TRUE(rep.ties_commute) << type;
    }
}

TEST(DT, InvariantMatchesLsProduct) {
    DerivedCategory dc(build_quiver("A3", ""));
    HeartCalculus hc(dc);
    DTEngine dt(hc, 4);
    const auto& zq = dc.zq();
    std::vector<IndecObject> ind;
    for (int r = 0; r < dc.reps().root_count(); ++r) ind.push_back({r, 0});
    std::sort(ind.begin(), ind.end(), [&](const auto& a, const auto& b) { return zq.pf(a) > zq.pf(b); });
    Series p = Series::one(dt.torus());
    for (const auto& x : ind) p = p * qexp<QCoeff>(dt.torus(), dc.root(x));
    EXPECT_EQ(p, dt.invariant());
}

TEST(WallCrossing, A2A3) {
    const Quiver a2 = build_quiver("A2", "1>2");
    const auto r2 = wall_crossing_check(a2, 2, 5);
    EXPECT_TRUE(r2.ok()) << r2.detail;
    EXPECT_GT(r2.pairs, 0u);
    const Quiver a3 = build_quiver("A3", "1>2,3>2");
    const auto r3 = wall_crossing_check(a3, 2, 4);
    EXPECT_TRUE(r3.ok()) << r3.detail;
    EXPECT_THROW(wall_crossing_check(a2, 1, 3), std::invalid_argument);
}
