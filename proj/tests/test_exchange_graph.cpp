#include <gtest/gtest.h>

#include <set>

#include "dynkin/exchange_graph.hpp"
#include "dynkin/io.hpp"

using namespace dynkin;

namespace {

struct Ctx {
    DerivedCategory dc;
    HeartCalculus hc;
    ExchangeGraph g;
    explicit Ctx(const std::string& t, const std::string& o = "")
        : dc(build_quiver(t, o)), hc(dc), g(enumerate_interval(hc, hc.initial_heart(), 1)) {}
    PathQuery paths() const { return PathQuery(g, g.id(g.base()), g.id(g.base().shifted(1))); }
};

// Torsion classes of mod kQ as sets of indecomposables: left perps of right perps.
std::set<std::set<int>> torsion_classes(const RepTheory& rt) {
    const int n = rt.root_count();
    std::set<std::set<int>> out;
    for (unsigned s = 0; s < (1u << n); ++s) {
        std::set<int> f, t;
        for (int y = 0; y < n; ++y) {
            bool orth = true;
            for (int x = 0; x < n; ++x)
                if ((s >> x & 1u) && rt.hom(x, y)) orth = false;
            if (orth) f.insert(y);
        }
        for (int x = 0; x < n; ++x) {
            bool orth = true;
            for (int y : f)
                if (rt.hom(x, y)) orth = false;
            if (orth) t.insert(x);
        }
        out.insert(t);
    }
    return out;
}

}  // namespace

TEST(Interval, Counts) {
    EXPECT_EQ(Ctx("A1").g.vertices().size(), 2u);
    EXPECT_EQ(Ctx("A1").g.edges().size(), 1u);
    const Ctx a2("A2");
    EXPECT_EQ(a2.g.vertices().size(), 5u);
    EXPECT_EQ(a2.g.edges().size(), 5u);
    EXPECT_EQ(Ctx("A3").g.vertices().size(), 14u);
    EXPECT_EQ(Ctx("A3").g.edges().size(), 21u);
    EXPECT_EQ(Ctx("D4").g.vertices().size(), 50u);
    EXPECT_EQ(Ctx("D4").g.edges().size(), 100u);
}

TEST(Interval, HeartsAreTorsionClasses) {
    for (const char* t : {"A2", "A3", "D4"}) {
        const Ctx c(t);
        std::set<std::set<int>> from_hearts;
        for (const auto& h : c.g.vertices()) {
            std::set<int> tc;
            for (const auto& x : c.dc.all_objects(0, 0))
                if (c.hc.in_aisle(h, x)) tc.insert(x.root);
            from_hearts.insert(tc);
        }
        EXPECT_EQ(from_hearts.size(), c.g.vertices().size()) << t;
        EXPECT_EQ(from_hearts, torsion_classes(c.dc.reps())) << t;
    }
}

TEST(Interval, EdgesAreTilts) {
    const Ctx c("A3");
    for (const auto& e : c.g.edges())
        EXPECT_EQ(c.hc.forward_tilt(c.g.vertices()[static_cast<std::size_t>(e.from)], e.label),
                  c.g.vertices()[static_cast<std::size_t>(e.to)]);
}

TEST(Paths, A2) {
    const Ctx c("A2");
    auto pq = c.paths();
    EXPECT_EQ(pq.total(), 2);
    EXPECT_EQ(pq.enumerate(PathQuery::Mode::All).size(), 2u);
    const auto s = pq.enumerate(PathQuery::Mode::Shortest);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(std::set<IndecObject>(s[0].labels.begin(), s[0].labels.end()),
              (std::set<IndecObject>{c.dc.simple(1), c.dc.simple(2)}));
    const auto l = pq.enumerate(PathQuery::Mode::Longest);
    ASSERT_EQ(l.size(), 1u);
    EXPECT_EQ(l[0].labels, (std::vector<IndecObject>{c.dc.simple(2), c.dc.module({1, 1}), c.dc.simple(1)}));
}

TEST(Paths, DistanceDiameter) {
    EXPECT_EQ(Ctx("A1").paths().distance_diameter(), std::make_pair(1, 1));
    EXPECT_EQ(Ctx("A2").paths().distance_diameter(), std::make_pair(2, 3));
    EXPECT_EQ(Ctx("A3").paths().distance_diameter(), std::make_pair(3, 6));
    EXPECT_EQ(Ctx("D4").paths().distance_diameter(), std::make_pair(4, 12));
    EXPECT_EQ(Ctx("D4", "2>1,3>1,4>1").paths().distance_diameter(), std::make_pair(4, 12));
}

TEST(Paths, SamplingIsSeededAndValid) {
    const Ctx c("D4");
    auto pq = c.paths();
    gmp_randclass a(gmp_randinit_default), b(gmp_randinit_default);
    a.seed(9ul);
    b.seed(9ul);
    for (int k = 0; k < 20; ++k) {
        const auto p = pq.sample(a);
        EXPECT_EQ(p, pq.sample(b));
        EXPECT_EQ(p.vertices.back(), c.g.id(c.g.base().shifted(1)));
        for (std::size_t i = 0; i < p.labels.size(); ++i)
            EXPECT_TRUE(c.g.edge_between(p.vertices[i], p.vertices[i + 1]).has_value());
    }
}

TEST(Faces, CountsAndHomology) {
    const std::vector<std::tuple<std::string, std::size_t, std::size_t>> want{
        {"A1", 0, 0}, {"A2", 0, 1}, {"A3", 3, 6}, {"D4", 30, 36}};
    for (const auto& [t, sq, pent] : want) {
        const Ctx c(t);
        const auto f = find_faces(c.hc, c.g);
        std::size_t s = 0;
        for (const auto& x : f) s += x.kind == FaceKind::Square;
        EXPECT_EQ(s, sq) << t;
        EXPECT_EQ(f.size() - s, pent) << t;
        EXPECT_TRUE(h1_of_complex(c.g, f).trivial()) << t;
        // A2: a disc; A3: the boundary of the associahedron
        const long chi = static_cast<long>(c.g.vertices().size()) - static_cast<long>(c.g.edges().size()) + static_cast<long>(f.size());
        if (t == "A2") { EXPECT_EQ(chi, 1); }
        if (t == "A3") { EXPECT_EQ(chi, 2); }
    }
}

TEST(Faces, WithoutFacesTheCycleSurvives) {
    const Ctx c("A2");
    const auto h = h1_of_complex(c.g, {});
    EXPECT_EQ(h.betti, 1);
}

TEST(CY, Quotients) {
    for (const auto& [t, N, v, lines] : std::vector<std::tuple<std::string, int, std::size_t, std::size_t>>{
             {"A1", 3, 2, 1}, {"A2", 2, 1, 2}, {"A2", 3, 5, 5}, {"A2", 4, 12, 8}, {"A3", 3, 14, 21}}) {
        DerivedCategory dc(build_quiver(t));
        HeartCalculus hc(dc);
        const auto q = cy_quotient(hc, N);
        EXPECT_EQ(q.interval.vertices().size(), v) << t << " " << N;
        EXPECT_EQ(q.lines.size(), lines) << t << " " << N;
        for (std::size_t i = 0; i < q.lines.size(); ++i) {
            EXPECT_EQ(static_cast<int>(q.lines[i].size()), N - 1);
            EXPECT_EQ(q.closing_edges[i].from, q.lines[i].back());
            EXPECT_EQ(q.closing_edges[i].to, q.lines[i].front());
        }
    }
    DerivedCategory dc(build_quiver("A2"));
    HeartCalculus hc(dc);
    EXPECT_THROW(cy_quotient(hc, 1), std::invalid_argument);
}

TEST(Export, JsonRoundTripAndDot) {
    Ctx c("D4");
    c.g.set_faces(find_faces(c.hc, c.g));
    const auto j = io::to_json(c.dc, c.g);
    const auto back = io::graph_from_json(c.hc, io::parse_json(j.dump(), "graph"));
    EXPECT_EQ(back, c.g);
    EXPECT_EQ(back.faces(), c.g.faces());
    PathQuery pq(back, back.id(back.base()), back.id(back.base().shifted(1)));
    EXPECT_EQ(pq.distance_diameter().second, 12);

    const Ctx a2("A2");
    const std::string dot = io::to_dot(a2.dc, a2.g);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p)
        (dot.rfind("->", p) != std::string::npos && dot.rfind("->", p) > dot.rfind('\n', p) ? edges : nodes)++;
    EXPECT_EQ(nodes, 5u);
    EXPECT_EQ(edges, 5u);
}

TEST(Export, RejectsTamperedGraphs) {
    const Ctx c("A2");
    auto j = io::to_json(c.dc, c.g);
    j["edges"][0]["to"] = j["edges"][0]["from"];
    EXPECT_THROW(io::graph_from_json(c.hc, j), std::invalid_argument);
    auto k = io::to_json(c.dc, c.g);
    k["schema"] = "eg/0";
    EXPECT_THROW(io::graph_from_json(c.hc, k), std::invalid_argument);
    EXPECT_THROW(io::parse_json("{", "x"), std::invalid_argument);
}
