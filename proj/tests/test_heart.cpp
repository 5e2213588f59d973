#include <gtest/gtest.h>

#include <set>

#include "dynkin/exchange_graph.hpp"

using namespace dynkin;

namespace {

struct A2 : ::testing::Test {
    DerivedCategory dc{build_quiver("A2")};
    HeartCalculus hc{dc};
    IndecObject s1 = dc.simple(1), s2 = dc.simple(2), p1 = dc.module({1, 1});
};

}  // namespace

TEST_F(A2, InitialHeart) {
    const Heart h = hc.initial_heart();
    EXPECT_EQ(h.simples(), (std::vector<IndecObject>{s1, s2}));
    EXPECT_FALSE(hc.violation(h).has_value());
    DerivedCategory d4(build_quiver("D4"));
    HeartCalculus h4(d4);
    const Heart g = h4.initial_heart();
    EXPECT_EQ(g.size(), 4u);
    for (const auto& s : g.simples()) {
        EXPECT_EQ(s.shift, 0);
        EXPECT_EQ(total(d4.root(s)), 1);
    }
}

TEST_F(A2, AisleMembership) {
    const Heart h = hc.initial_heart();
    for (const auto& x : dc.all_objects(0, 0)) {
        EXPECT_TRUE(hc.in_aisle(h, x));
        EXPECT_FALSE(hc.in_aisle(h, x.shifted(-1)));
        EXPECT_TRUE(hc.in_coaisle(h, x.shifted(-1)));
    }
    EXPECT_TRUE(hc.in_aisle(Heart({p1, s2.shifted(1)}), s2.shifted(1)));
}

TEST_F(A2, Order) {
    const Heart h = hc.initial_heart();
    const Heart m({p1, s2.shifted(1)});
    EXPECT_TRUE(hc.leq(h, h.shifted(1)));
    EXPECT_FALSE(hc.leq(h.shifted(1), h));
    EXPECT_TRUE(hc.leq(h, m));
    EXPECT_TRUE(hc.leq(m, h.shifted(1)));
}

TEST_F(A2, Tilts) {
    const Heart h = hc.initial_heart();
    EXPECT_EQ(hc.forward_tilt(h, s2), Heart({p1, s2.shifted(1)}));
    EXPECT_EQ(hc.forward_tilt(h, s1), Heart({s1.shifted(1), s2}));
    EXPECT_EQ(hc.backward_tilt(h.shifted(1), s1.shifted(1)), Heart({s1, p1.shifted(1)}));
    EXPECT_THROW(hc.forward_tilt(h, p1), std::invalid_argument);
}

TEST_F(A2, Standardize) {
    const Heart ns({s2, s1.shifted(1)});
    EXPECT_TRUE(hc.is_leftmost(ns, s2));
    EXPECT_FALSE(hc.is_leftmost(ns, s1.shifted(1)));
    const auto st = hc.standardize(ns);
    EXPECT_EQ(st.steps, (std::vector<IndecObject>{s2}));
    EXPECT_TRUE(hc.is_standard(st.result));
    const auto id = hc.standardize(hc.initial_heart());
    EXPECT_TRUE(id.steps.empty());
    EXPECT_EQ(id.result, hc.initial_heart());
}

TEST(Heart, IntervalInvariantsAndRoundTrips) {
    for (const char* t : {"A3", "D4"}) {
        DerivedCategory dc(build_quiver(t));
        HeartCalculus hc(dc);
        const auto g = enumerate_interval(hc, hc.initial_heart(), 1);
        const std::size_t ind = static_cast<std::size_t>(dc.reps().root_count());
        for (const auto& h : g.vertices()) {
            EXPECT_FALSE(hc.violation(h).has_value()) << t;
            for (const auto& s : h.simples()) {
                EXPECT_EQ(hc.backward_tilt(hc.forward_tilt(h, s), s.shifted(1)), h);
                EXPECT_EQ(hc.forward_tilt(hc.backward_tilt(h, s), s.shifted(-1)), h);
            }
            const auto st = hc.standardize(h);
            EXPECT_TRUE(hc.is_standard(st.result));
            EXPECT_LE(st.steps.size(), ind);
        }
    }
}

TEST(Heart, TiltLinesAreInjective) {
    DerivedCategory dc(build_quiver("A3"));
    HeartCalculus hc(dc);
    for (const auto& s0 : hc.initial_heart().simples()) {
        std::set<Heart> line;
        Heart h = hc.initial_heart();
        IndecObject s = s0;
        for (int k = 0; k <= 6; ++k) {
            EXPECT_TRUE(line.insert(h).second);
            h = hc.forward_tilt(h, s);
            s = s.shifted(1);
        }
    }
}
