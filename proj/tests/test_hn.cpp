#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dynkin/hn.hpp"

using namespace dynkin;

namespace {

struct A2 : ::testing::Test {
    DerivedCategory dc{build_quiver("A2")};
    HeartCalculus hc{dc};
    const RepTheory& rt = dc.reps();
    IndecObject s1 = dc.simple(1), s2 = dc.simple(2), p1 = dc.module({1, 1});
    HNStratum st(std::vector<IndecObject> v) { return HNStratum{std::move(v)}; }
    bool both(const HNStratum& s) {
        const bool a = validate_stratum_by_path(hc, s);
        EXPECT_EQ(a, validate_stratum_by_filtration(rt, s));
        return a;
    }
};

}  // namespace

// labels are in tilt order, T_1 first
TEST_F(A2, Strata) {
    EXPECT_TRUE(both(st({s1, s2})));
    EXPECT_TRUE(both(st({s2, p1, s1})));
    EXPECT_FALSE(both(st({s2, s1})));
    EXPECT_FALSE(both(st({s1})));
    EXPECT_FALSE(both(st({s1, s1, s2})));
}

TEST_F(A2, OnlyTwoOrderingsSurvive) {
    int valid = 0;
    for (std::vector<IndecObject> v : {std::vector<IndecObject>{s1, s2}, std::vector<IndecObject>{s1, s2, p1}}) {
        std::sort(v.begin(), v.end());
        do valid += both(st(v));
        while (std::next_permutation(v.begin(), v.end()));
    }
    EXPECT_EQ(valid, 2);
}

TEST_F(A2, Filtration) {
    const auto f = hn_filtration(rt, st({s1, s2}), rt.indec(p1.root));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(*f, (std::vector<int>{1, 2}));  // P_1 -> S_1 on top, kernel S_2
    EXPECT_FALSE(hn_filtration(rt, st({s2, s1}), rt.indec(p1.root)).has_value());
}

TEST_F(A2, TorsionPairs) {
    const HNStratum s = st({s2, p1, s1});
    auto tp = torsion_pair_from_prefix(rt, s, 1);
    EXPECT_EQ(tp.torsion_free, (std::vector<int>{s2.root}));
    EXPECT_EQ(std::set<int>(tp.torsion.begin(), tp.torsion.end()), (std::set<int>{p1.root, s1.root}));
    tp = torsion_pair_from_prefix(rt, s, 0);
    EXPECT_TRUE(tp.torsion_free.empty());
    EXPECT_EQ(tp.torsion.size(), 3u);
    tp = torsion_pair_from_prefix(rt, s, 3);
    EXPECT_EQ(tp.torsion_free.size(), 3u);
    EXPECT_TRUE(tp.torsion.empty());
    EXPECT_THROW(torsion_pair_from_prefix(rt, s, 4), std::invalid_argument);
}

TEST(HN, A1) {
    DerivedCategory dc(build_quiver("A1"));
    HeartCalculus hc(dc);
    const HNStratum s{{dc.simple(1)}};
    EXPECT_TRUE(validate_stratum_by_path(hc, s));
    EXPECT_TRUE(validate_stratum_by_filtration(dc.reps(), s));
}

TEST(HN, PathsAreStrataWithConsistentTorsionPairs) {
    for (const char* t : {"A3", "D4"}) {
        DerivedCategory dc(build_quiver(t));
        HeartCalculus hc(dc);
        const auto g = enumerate_interval(hc, hc.initial_heart(), 1);
        PathQuery pq(g, g.id(g.base()), g.id(g.base().shifted(1)));
        for (const auto& p : pq.enumerate(PathQuery::Mode::All, 200)) {
            const HNStratum s = stratum_of_path(p);
            EXPECT_TRUE(validate_stratum_by_filtration(dc.reps(), s)) << t;
            for (std::size_t j = 0; j <= s.size(); ++j) {
                const auto tp = torsion_pair_from_prefix(dc.reps(), s, j);
                // the torsion class is the aisle part of the heart after j tilts
                std::set<int> aisle;
                for (const auto& x : dc.all_objects(0, 0))
                    if (hc.in_aisle(g.vertices()[static_cast<std::size_t>(p.vertices[j])], x)) aisle.insert(x.root);
                EXPECT_EQ(std::set<int>(tp.torsion.begin(), tp.torsion.end()), aisle) << t;
            }
        }
    }
}

TEST(HN, ExhaustiveAgreementA3) {
    DerivedCategory dc(build_quiver("A3"));
    HeartCalculus hc(dc);
    std::vector<int> roots(static_cast<std::size_t>(dc.reps().root_count()));
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = static_cast<int>(i);
    int valid = 0, total = 0;
    for (unsigned mask = 1; mask < (1u << roots.size()); ++mask) {
        std::vector<IndecObject> v;
        for (int r : roots)
            if (mask >> r & 1u) v.push_back({r, 0});
        do {
            const HNStratum s{v};
            const bool a = validate_stratum_by_path(hc, s);
            EXPECT_EQ(a, validate_stratum_by_filtration(dc.reps(), s));
            valid += a;
            ++total;
        } while (std::next_permutation(v.begin(), v.end()));
    }
    EXPECT_EQ(total, 1956);
    EXPECT_EQ(valid, 9);
}
