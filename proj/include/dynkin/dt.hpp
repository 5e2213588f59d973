#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exchange_graph.hpp"
#include "dynkin/qseries.hpp"

namespace dynkin {

using Series = QSeries<QCoeff>;

struct SignedStep {
    IndecObject label;
    int sign = 1;  // +1 forward tilt, -1 the same edge walked backwards
};

inline std::vector<SignedStep> signed_steps(const DirectedPath& p) {
    std::vector<SignedStep> s;
    for (const auto& l : p.labels) s.push_back({l, 1});
    return s;
}

/// DT products on the interval H_Q .. H_Q[1] of one quiver.
class DTEngine {
public:
    DTEngine(const HeartCalculus& hc, int degree)
        : hc_(hc),
          torus_(QTorus::of_quiver(hc.category().quiver(), degree)),
          graph_(enumerate_interval(hc, hc.initial_heart(), 1)) {}

    const HeartCalculus& calculus() const { return hc_; }
    const ExchangeGraph& graph() const { return graph_; }
    const TorusPtr& torus() const { return torus_; }
    int degree() const { return torus_->degree; }
    int source() const { return graph_.id(graph_.base()); }
    int target() const { return graph_.id(graph_.base().shifted(1)); }

    /// E(y^[X])^{sign} for a module X.
    const Series& factor(const IndecObject& x, int sign) const {
        if (x.shift != 0) throw std::invalid_argument("dt: label " + hc_.category().name(x) + " is not a module");
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(x.root, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Series e = qexp<QCoeff>(torus_, hc_.category().root(x));
        if (sign < 0) e = e.inverse();
        return cache_.emplace(key, std::move(e)).first->second;
    }

    /// Product with the last step's factor leftmost.
    Series product(const std::vector<SignedStep>& steps) const {
        Series r = Series::one(torus_);
        for (const auto& s : steps) r = factor(s.label, s.sign) * r;
        return r;
    }
    Series product(const DirectedPath& p) const { return product(signed_steps(p)); }

    /// Along the first path in DFS order over sorted edges.
    Series between(int from, int to) const {
        PathQuery pq(graph_, from, to);
        auto paths = pq.enumerate(PathQuery::Mode::All, 1);
        if (paths.empty()) throw std::invalid_argument("dt_between: no directed path between the hearts");
        return product(paths.front());
    }
    Series invariant() const { return between(source(), target()); }

    /// Random walk on the underlying undirected graph, then a uniformly
    /// sampled directed path to the target.
    std::vector<SignedStep> sample_signed(gmp_randclass& rng, std::mt19937_64& walk_rng, int max_detour) const {
        std::vector<SignedStep> steps;
        int v = source();
        std::uniform_int_distribution<int> len(0, max_detour);
        const int l = len(walk_rng);
        for (int k = 0; k < l; ++k) {
            const auto& out = graph_.out_edges(v);
            const auto& in = graph_.in_edges(v);
            std::uniform_int_distribution<std::size_t> pick(0, out.size() + in.size() - 1);
            const std::size_t c = pick(walk_rng);
            if (c < out.size()) {
                const Edge& e = graph_.edges()[static_cast<std::size_t>(out[c])];
                steps.push_back({e.label, 1});
                v = e.to;
            } else {
                const Edge& e = graph_.edges()[static_cast<std::size_t>(in[c - out.size()])];
                steps.push_back({e.label, -1});
                v = e.from;
            }
        }
        PathQuery pq(graph_, v, target());
        for (const auto& lab : pq.sample(rng).labels) steps.push_back({lab, 1});
        return steps;
    }

private:
    const HeartCalculus& hc_;
    TorusPtr torus_;
    ExchangeGraph graph_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, Series> cache_;
};

struct PathIndependenceReport {
    std::size_t directed = 0;
    std::size_t signed_paths = 0;
    bool equal = true;
    std::optional<Series> common;
    std::string offending;
};

inline std::string steps_str(const DerivedCategory& dc, const std::vector<SignedStep>& s) {
    std::string out;
    for (const auto& x : s) {
        if (!out.empty()) out += " ";
        out += (x.sign < 0 ? "-" : "") + dc.name(x.label);
    }
    return out;
}

struct PathPolicy {
    enum class Kind { All, LongestPlusSample } kind = Kind::All;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    int max_detour = 8;
};

inline PathIndependenceReport verify_path_independence(const DTEngine& dt, const PathPolicy& policy) {
    PathIndependenceReport rep;
    const auto& dc = dt.calculus().category();
    std::vector<SignedStep> first_path;
    auto check = [&](const std::vector<SignedStep>& steps) {
        Series s = dt.product(steps);
        if (!rep.common) {
            rep.common = std::move(s);
            first_path = steps;
        } else if (s != *rep.common && rep.equal) {
            rep.equal = false;
            rep.offending = steps_str(dc, first_path) + " vs " + steps_str(dc, steps);
        }
    };
    PathQuery pq(dt.graph(), dt.source(), dt.target());
    const auto mode = policy.kind == PathPolicy::Kind::All ? PathQuery::Mode::All : PathQuery::Mode::Longest;
    for (const auto& p : pq.enumerate(mode)) {
        check(signed_steps(p));
        ++rep.directed;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(policy.seed));
    std::mt19937_64 walk(policy.seed);
    for (std::size_t k = 0; k < policy.samples; ++k) {
        check(dt.sample_signed(rng, walk, policy.max_detour));
        ++rep.signed_paths;
    }
    return rep;
}

/// E(X)E(Y) = E(Y)E(y^{(1,1)})E(X) on the torus with XY = q YX; `flipped`
/// keeps the identity but uses XY = q^{-1} YX, where it must fail.
inline std::pair<Series, Series> pentagon_sides(int degree, bool flipped = false) {
    const int s = flipped ? -1 : 1;
    auto t = QTorus::custom({{0, s}, {-s, 0}}, degree);
    auto ex = qexp<QCoeff>(t, DimVec{1, 0}), ey = qexp<QCoeff>(t, DimVec{0, 1});
    return {ex * ey, ey * qexp<QCoeff>(t, DimVec{1, 1}) * ex};
}
inline bool pentagon_check(int degree, bool flipped = false) {
    auto [l, r] = pentagon_sides(degree, flipped);
    return l == r;
}

/// Commuting variables: E(X)E(Y) = E(Y)E(X).
inline bool square_check(int degree) {
    auto t = QTorus::custom({{0, 0}, {0, 0}}, degree);
    auto ex = qexp<QCoeff>(t, DimVec{1, 0}), ey = qexp<QCoeff>(t, DimVec{0, 1});
    return ex * ey == ey * ex;
}

struct LsReport {
    bool equal = false;
    bool ties_commute = true;
};

/// prod over Ind H_Q by decreasing position equals prod over Sim H_Q by increasing position.
inline LsReport ls_identity_check(const HeartCalculus& hc, int degree) {
    const auto& dc = hc.category();
    const auto& zq = dc.zq();
    auto t = QTorus::of_quiver(dc.quiver(), degree);
    std::vector<IndecObject> ind;
    for (int r = 0; r < dc.reps().root_count(); ++r) ind.push_back({r, 0});
    auto by_pf = [&](const IndecObject& a, const IndecObject& b) {
        const int pa = zq.pf(a), pb = zq.pf(b);
        return pa != pb ? pa < pb : a.root < b.root;
    };
    LsReport rep;
    auto ties = [&](const std::vector<IndecObject>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (zq.pf(v[i]) == zq.pf(v[j]) && t->omega(dc.root(v[i]), dc.root(v[j])) != 0) rep.ties_commute = false;
    };
    std::sort(ind.begin(), ind.end(), by_pf);
    std::vector<IndecObject> sim = hc.initial_heart().simples();
    std::sort(sim.begin(), sim.end(), by_pf);
    ties(ind);
    ties(sim);
    Series lhs = Series::one(t), rhs = Series::one(t);
    for (auto it = ind.rbegin(); it != ind.rend(); ++it) lhs = lhs * qexp<QCoeff>(t, dc.root(*it));
    for (const auto& s : sim) rhs = rhs * qexp<QCoeff>(t, dc.root(s));
    rep.equal = lhs == rhs;
    return rep;
}

struct WallCrossingReport {
    std::size_t region_hearts = 0;
    std::size_t pairs = 0;
    bool hearts_match = true;
    bool forms_match = true;
    bool series_match = true;
    std::string detail;
    bool ok() const { return hearts_match && forms_match && series_match; }
};

/// Q' = Q reversed at the sink i. On the shared region EG(Q; H_{Q'}, H_Q[1])
/// the DT products computed in D(Q) and in D(Q') agree once Q'-classes are
/// moved to Q-coordinates by the reflection s_i.
inline WallCrossingReport wall_crossing_check(const Quiver& q, int sink, int degree) {
    if (!q.is_sink(sink)) throw std::invalid_argument("wall crossing: vertex " + std::to_string(sink) + " is not a sink");
    const Quiver qp = q.reversed_at(sink);
    DerivedCategory dq(q), dp(qp);
    HeartCalculus hq(dq), hp(dp);
    const int n = q.rank();

    // Q'-coordinates to Q-coordinates: a -> s_i(a) with the Cartan form.
    auto reflect = [&](const DimVec& a) {
        DimVec r = a;
        const DimVec ei = simple_root(n, sink);
        const long c = euler_form(q, a, ei) + euler_form(q, ei, a);
        r[static_cast<std::size_t>(sink - 1)] -= static_cast<int>(c);
        return r;
    };
    // object of D(Q) -> object of D(Q'): module M != S_i goes to the module
    // of class s_i(dim M), S_i[k] goes to S'_i[k-1]
    const int si = dq.reps().simple_index(sink);
    auto map_obj = [&](const IndecObject& x) -> IndecObject {
        if (x.root == si) return dp.simple(sink, x.shift - 1);
        return dp.module(reflect(dq.root(x)), x.shift);
    };
    auto map_heart = [&](const Heart& h) {
        std::vector<IndecObject> s;
        for (const auto& x : h.simples()) s.push_back(map_obj(x));
        return Heart(std::move(s));
    };

    WallCrossingReport rep;
    const Heart base_q = hq.forward_tilt(hq.initial_heart(), dq.simple(sink));
    const Heart top_q = hq.initial_heart().shifted(1);
    const Heart top_p = hp.backward_tilt(hp.initial_heart().shifted(1), dp.simple(sink, 1));
    if (!(map_heart(base_q) == hp.initial_heart()) || !(map_heart(top_q) == top_p)) {
        rep.hearts_match = false;
        rep.detail = "region endpoints do not correspond";
        return rep;
    }
    const auto gq = enumerate_interval(hq, base_q, 1);
    const auto gp = enumerate_interval(hp, hp.initial_heart(), 1);
    std::vector<int> region_q, region_p;
    for (std::size_t v = 0; v < gq.vertices().size(); ++v)
        if (hq.leq(gq.vertices()[v], top_q)) region_q.push_back(static_cast<int>(v));
    for (int v : region_q) {
        auto m = gp.find(map_heart(gq.vertices()[static_cast<std::size_t>(v)]));
        if (!m || !hp.leq(gp.vertices()[static_cast<std::size_t>(*m)], top_p)) {
            rep.hearts_match = false;
            rep.detail = "heart without a counterpart in D(Q')";
            return rep;
        }
        region_p.push_back(*m);
    }
    std::size_t count_p = 0;
    for (std::size_t v = 0; v < gp.vertices().size(); ++v)
        if (hp.leq(gp.vertices()[v], top_p)) ++count_p;
    if (count_p != region_q.size()) {
        rep.hearts_match = false;
        rep.detail = "region sizes differ";
        return rep;
    }
    rep.region_hearts = region_q.size();

    auto tq = QTorus::of_quiver(q, degree);
    auto tp = QTorus::of_quiver(qp, degree);
    auto prod = [](const ExchangeGraph& g, const TorusPtr& t, const DerivedCategory& dc, int a, int b) {
        PathQuery pq(g, a, b);
        auto paths = pq.enumerate(PathQuery::Mode::All, 1);
        Series r = Series::one(t);
        for (const auto& l : paths.front().labels) {
            if (l.shift != 0) throw std::logic_error("wall crossing: label leaves the module category");
            r = qexp<QCoeff>(t, dc.root(l)) * r;
        }
        return r;
    };
    for (std::size_t a = 0; a < region_q.size(); ++a)
        for (std::size_t b = 0; b < region_q.size(); ++b) {
            PathQuery reach(gq, region_q[a], region_q[b]);
            if (reach.total() == 0) continue;
            ++rep.pairs;
            const Series sq = prod(gq, tq, dq, region_q[a], region_q[b]);
            const Series sp = prod(gp, tp, dp, region_p[a], region_p[b]);
            // move the Q' series to Q-coordinates, keeping monomials that are
            // inside the truncation on both sides
            std::map<DimVec, QCoeff> moved;
            for (const auto& [e, c] : sp.terms()) {
                const DimVec f = reflect(e);
                if (!is_nonnegative(f)) {
                    rep.series_match = false;
                    rep.detail = "Q' monomial outside the nonnegative cone of Q";
                    return rep;
                }
                if (total(f) <= degree) moved[f] = c;
            }
            for (const auto& [e1, c1] : sp.terms())
                for (const auto& [e2, c2] : sp.terms())
                    if (tp->omega(e1, e2) != tq->omega(reflect(e1), reflect(e2))) rep.forms_match = false;
            std::map<DimVec, QCoeff> kept;
            for (const auto& [e, c] : sq.terms())
                if (total(reflect(e)) <= degree) kept[e] = c;
            if (kept != moved) {
                rep.series_match = false;
                rep.detail = "series differ on pair " + std::to_string(a) + "," + std::to_string(b);
                return rep;
            }
        }
    return rep;
}

}  // namespace dynkin
