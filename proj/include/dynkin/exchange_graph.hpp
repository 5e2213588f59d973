#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynkin/exact/smith.hpp"
#include "dynkin/heart.hpp"

namespace dynkin {

struct Edge {
    int from = 0;
    int to = 0;
    IndecObject label;
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class FaceKind { Square, Pentagon };

/// A 2-cell: two directed paths from `source` to `sink`, as edge indices.
struct Face {
    FaceKind kind = FaceKind::Square;
    std::vector<int> left;
    std::vector<int> right;
    friend bool operator==(const Face&, const Face&) = default;
};

struct DirectedPath {
    std::vector<int> vertices;
    std::vector<IndecObject> labels;
    std::size_t length() const { return labels.size(); }
    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

class ExchangeGraph {
public:
    ExchangeGraph() = default;
    ExchangeGraph(std::vector<Heart> vertices, std::vector<Edge> edges, Heart base, int k)
        : v_(std::move(vertices)), e_(std::move(edges)), base_(std::move(base)), k_(k) {
        index();
    }

    const std::vector<Heart>& vertices() const { return v_; }
    const std::vector<Edge>& edges() const { return e_; }
    const std::vector<Face>& faces() const { return f_; }
    void set_faces(std::vector<Face> f) { f_ = std::move(f); }
    const Heart& base() const { return base_; }
    int k() const { return k_; }

    std::optional<int> find(const Heart& h) const {
        auto it = id_.find(h);
        if (it == id_.end()) return std::nullopt;
        return it->second;
    }
    int id(const Heart& h) const {
        auto i = find(h);
        if (!i) throw std::invalid_argument("heart not in the exchange graph");
        return *i;
    }
    const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& in_edges(int v) const { return in_.at(static_cast<std::size_t>(v)); }
    std::optional<int> edge_between(int a, int b) const {
        for (int e : out_edges(a))
            if (e_[static_cast<std::size_t>(e)].to == b) return e;
        return std::nullopt;
    }

    friend bool operator==(const ExchangeGraph& a, const ExchangeGraph& b) {
        return a.v_ == b.v_ && a.e_ == b.e_ && a.f_ == b.f_ && a.base_ == b.base_ && a.k_ == b.k_;
    }

private:
    void index() {
        id_.clear();
        out_.assign(v_.size(), {});
        in_.assign(v_.size(), {});
        for (std::size_t i = 0; i < v_.size(); ++i) id_[v_[i]] = static_cast<int>(i);
        for (std::size_t e = 0; e < e_.size(); ++e) {
            out_[static_cast<std::size_t>(e_[e].from)].push_back(static_cast<int>(e));
            in_[static_cast<std::size_t>(e_[e].to)].push_back(static_cast<int>(e));
        }
    }

    std::vector<Heart> v_;
    std::vector<Edge> e_;
    std::vector<Face> f_;
    Heart base_;
    int k_ = 0;
    std::map<Heart, int> id_;
    std::vector<std::vector<int>> out_, in_;
};

/// Hearts H' with base <= H' <= base[k], found by forward tilts from base.
/// Vertices are sorted canonically, so the result is independent of the
/// exploration order.
inline ExchangeGraph enumerate_interval(const HeartCalculus& hc, const Heart& base, int k) {
    if (k < 0) throw std::invalid_argument("enumerate_interval: k must be nonnegative");
    const Heart top = base.shifted(k);
    std::set<Heart> seen{base};
    std::deque<Heart> todo{base};
    std::vector<std::tuple<Heart, Heart, IndecObject>> raw;
    while (!todo.empty()) {
        Heart h = todo.front();
        todo.pop_front();
        for (const auto& s : h.simples()) {
            Heart t = hc.forward_tilt(h, s);
            if (!hc.leq(t, top)) continue;
            raw.emplace_back(h, t, s);
            if (seen.insert(t).second) todo.push_back(t);
        }
    }
    std::vector<Heart> verts(seen.begin(), seen.end());
    std::map<Heart, int> id;
    for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [a, b, s] : raw) edges.push_back({id[a], id[b], s});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
    });
    for (const auto& h : verts)
        for (const auto& s : h.simples())
            if (s.shift < base.min_shift() || s.shift > base.max_shift() + k)
                throw std::logic_error("enumerate_interval: heart with a simple outside the shift window");
    return ExchangeGraph(std::move(verts), std::move(edges), base, k);
}

/// Path queries on the (acyclic) exchange graph between two vertices.
class PathQuery {
public:
    PathQuery(const ExchangeGraph& g, int from, int to) : g_(g), from_(from), to_(to) {
        const auto n = g.vertices().size();
        count_.assign(n, mpz_class(-1));
        longest_.assign(n, -2);
        shortest_.assign(n, -2);
    }

    /// Number of directed paths v -> to.
    const mpz_class& count(int v) {
        auto& c = count_[static_cast<std::size_t>(v)];
        if (c >= 0) return c;
        mpz_class s = v == to_ ? 1 : 0;
        if (v != to_)
            for (int e : g_.out_edges(v)) s += count(g_.edges()[static_cast<std::size_t>(e)].to);
        c = s;
        return c;
    }
    mpz_class total() { return count(from_); }

    /// Longest / shortest path length v -> to (-1 if unreachable).
    int longest(int v) { return extreme(v, longest_, true); }
    int shortest(int v) { return extreme(v, shortest_, false); }

    std::pair<int, int> distance_diameter() {
        if (count(from_) == 0) throw std::invalid_argument("no directed path between the given hearts");
        return {shortest(from_), longest(from_)};
    }

    enum class Mode { All, Shortest, Longest };

    /// Enumerates paths (optionally only extremal ones), stopping after `limit`.
    std::vector<DirectedPath> enumerate(Mode mode, std::size_t limit = SIZE_MAX) {
        std::vector<DirectedPath> out;
        if (count(from_) == 0) return out;
        DirectedPath cur;
        cur.vertices.push_back(from_);
        walk(from_, mode, cur, out, limit);
        return out;
    }

    /// Visits every path v -> to as a sequence of edge indices, with shared
    /// prefixes handed to `enter`/`leave` so products can be reused.
    void for_each_prefix(const std::function<void(int edge)>& enter, const std::function<void()>& leave,
                         const std::function<void()>& at_end, Mode mode = Mode::All) {
        prefix_walk(from_, mode, enter, leave, at_end);
    }

    /// Uniform sample among all paths, weighted by suffix counts.
    DirectedPath sample(gmp_randclass& rng) {
        if (count(from_) == 0) throw std::invalid_argument("no directed path to sample");
        DirectedPath p;
        int v = from_;
        p.vertices.push_back(v);
        while (v != to_) {
            mpz_class r = rng.get_z_range(count(v));
            for (int e : g_.out_edges(v)) {
                const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
                const mpz_class& c = count(ed.to);
                if (r < c) {
                    v = ed.to;
                    p.vertices.push_back(v);
                    p.labels.push_back(ed.label);
                    break;
                }
                r -= c;
            }
        }
        return p;
    }

private:
    int extreme(int v, std::vector<int>& memo, bool longest_mode) {
        int& m = memo[static_cast<std::size_t>(v)];
        if (m != -2) return m;
        if (v == to_) return m = 0;
        int best = -1;
        for (int e : g_.out_edges(v)) {
            const int s = extreme(g_.edges()[static_cast<std::size_t>(e)].to, memo, longest_mode);
            if (s < 0) continue;
            if (best < 0 || (longest_mode ? s + 1 > best : s + 1 < best)) best = s + 1;
        }
        return m = best;
    }

    bool keep(int v, int next, Mode mode) {
        if (count(next) == 0) return false;
        if (mode == Mode::Longest) return longest(next) + 1 == longest(v);
        if (mode == Mode::Shortest) return shortest(next) + 1 == shortest(v);
        return true;
    }

    void walk(int v, Mode mode, DirectedPath& cur, std::vector<DirectedPath>& out, std::size_t limit) {
        if (out.size() >= limit) return;
        if (v == to_) {
            out.push_back(cur);
            return;
        }
        for (int e : g_.out_edges(v)) {
            const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
            if (!keep(v, ed.to, mode)) continue;
            cur.vertices.push_back(ed.to);
            cur.labels.push_back(ed.label);
            walk(ed.to, mode, cur, out, limit);
            cur.vertices.pop_back();
            cur.labels.pop_back();
        }
    }

    void prefix_walk(int v, Mode mode, const std::function<void(int)>& enter, const std::function<void()>& leave,
                     const std::function<void()>& at_end) {
        if (v == to_) {
            at_end();
            return;
        }
        for (int e : g_.out_edges(v)) {
            const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
            if (!keep(v, ed.to, mode)) continue;
            enter(e);
            prefix_walk(ed.to, mode, enter, leave, at_end);
            leave();
        }
    }

    const ExchangeGraph& g_;
    int from_, to_;
    std::vector<mpz_class> count_;
    std::vector<int> longest_, shortest_;
};

/// Squares and pentagons at every vertex, for every pair of simples whose
/// tilts close up inside the graph.
inline std::vector<Face> find_faces(const HeartCalculus& hc, const ExchangeGraph& g) {
    const auto& dc = hc.category();
    std::vector<Face> faces;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    auto edge = [&](const Heart& a, const Heart& b) -> std::optional<int> {
        auto ia = g.find(a), ib = g.find(b);
        if (!ia || !ib) return std::nullopt;
        return g.edge_between(*ia, *ib);
    };
    auto add = [&](FaceKind kind, std::vector<std::optional<int>> l, std::vector<std::optional<int>> r) {
        for (auto& x : l)
            if (!x) return;
        for (auto& x : r)
            if (!x) return;
        Face f{kind, {}, {}};
        for (auto& x : l) f.left.push_back(*x);
        for (auto& x : r) f.right.push_back(*x);
        if (seen.insert({f.left, f.right}).second) faces.push_back(std::move(f));
    };
    for (const auto& h : g.vertices()) {
        const auto& s = h.simples();
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = 0; b < s.size(); ++b) {
                if (a == b) continue;
                const IndecObject si = s[a], sj = s[b];
                // Hom^1(S_i, S_j) = 0 is the standing assumption
                if (dc.hom(si, sj.shifted(1)) != 0) continue;
                const bool square = dc.hom(sj, si.shifted(1)) == 0;
                if (square && a > b) continue;
                if (!g.find(hc.forward_tilt(h, si)) || !g.find(hc.forward_tilt(h, sj))) continue;
                const Heart hi = hc.forward_tilt(h, si);
                const Heart hj = hc.forward_tilt(h, sj);
                if (!hj.contains(si)) throw std::logic_error("faces: S_i not simple after tilting S_j");
                const Heart hij = hc.forward_tilt(hj, si);
                if (square) {
                    if (!hi.contains(sj)) throw std::logic_error("faces: square does not close");
                    if (!(hc.forward_tilt(hi, sj) == hij)) throw std::logic_error("faces: square does not close");
                    add(FaceKind::Square, {edge(h, hi), edge(hi, hij)}, {edge(h, hj), edge(hj, hij)});
                } else {
                    // T_j: the simple of h_i replacing S_j, its class is [S_j] + c[S_i]
                    std::optional<IndecObject> tj;
                    const DimVec ci = dc.kclass(si), cj = dc.kclass(sj);
                    for (const auto& x : hi.simples()) {
                        if (h.contains(x) || x == si.shifted(1)) continue;
                        const DimVec d = dc.kclass(x) - cj;
                        for (int c : {-1, 1})
                            if (d == c * ci) tj = x;
                    }
                    if (!tj) throw std::logic_error("faces: pentagon without T_j");
                    const Heart hstar = hc.forward_tilt(hi, *tj);
                    if (!hstar.contains(sj) || !(hc.forward_tilt(hstar, sj) == hij))
                        throw std::logic_error("faces: pentagon does not close");
                    add(FaceKind::Pentagon, {edge(h, hi), edge(hi, hstar), edge(hstar, hij)},
                        {edge(h, hj), edge(hj, hij)});
                }
            }
    }
    return faces;
}

struct HomologyReport {
    int betti = 0;                 // free rank of H_1
    std::vector<Int> torsion;      // invariant factors > 1
    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// H_1 of the 2-complex (vertices, edges, faces) via Smith normal forms.
inline HomologyReport h1_of_complex(const ExchangeGraph& g, const std::vector<Face>& faces) {
    const std::size_t V = g.vertices().size(), E = g.edges().size(), F = faces.size();
    IntMatrix d1(V, E), d2(E, F);
    for (std::size_t e = 0; e < E; ++e) {
        d1(static_cast<std::size_t>(g.edges()[e].to), e) += 1;
        d1(static_cast<std::size_t>(g.edges()[e].from), e) -= 1;
    }
    for (std::size_t f = 0; f < F; ++f) {
        for (int e : faces[f].left) d2(static_cast<std::size_t>(e), f) += 1;
        for (int e : faces[f].right) d2(static_cast<std::size_t>(e), f) -= 1;
    }
    if (!(d1 * d2).is_zero()) throw std::logic_error("h1: boundary of boundary is not zero");
    const std::size_t r1 = E && V ? smith_normal_form(d1).rank : 0;
    HomologyReport rep;
    std::size_t r2 = 0;
    if (E && F) {
        const auto s2 = smith_normal_form(d2);
        r2 = s2.rank;
        for (const auto& d : s2.invariant_factors)
            if (d > 1) rep.torsion.push_back(d);
    }
    rep.betti = static_cast<int>(E - r1 - r2);
    return rep;
}

/// Quotient of the interval base[1] .. base[N-1] in which every maximal
/// segment of a tilt line (N - 1 hearts) is closed into a cycle by one edge.
struct CYQuotient {
    ExchangeGraph interval;
    std::vector<std::vector<int>> lines;  // vertex sequences of the segments
    std::vector<Edge> closing_edges;      // last -> first, labelled by the last simple
};

inline CYQuotient cy_quotient(const HeartCalculus& hc, int N) {
    if (N < 2) throw std::invalid_argument("cy_quotient: N must be at least 2");
    const Heart base = hc.initial_heart().shifted(1);
    CYQuotient q{enumerate_interval(hc, base, N - 2), {}, {}};
    const auto& g = q.interval;
    std::set<std::pair<int, IndecObject>> starts;
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        for (const auto& s0 : g.vertices()[v].simples()) {
            Heart h = g.vertices()[v];
            IndecObject s = s0;
            for (;;) {
                const Heart b = hc.backward_tilt(h, s);
                if (!g.find(b)) break;
                h = b;
                s = s.shifted(-1);
            }
            if (!starts.insert({g.id(h), s}).second) continue;
            std::vector<int> seq{g.id(h)};
            for (;;) {
                const Heart f = hc.forward_tilt(h, s);
                if (!g.find(f)) break;
                h = f;
                s = s.shifted(1);
                seq.push_back(g.id(h));
                if (static_cast<int>(seq.size()) > N - 1)
                    throw std::logic_error("cy_quotient: tilt line segment longer than N - 1");
            }
            q.closing_edges.push_back({seq.back(), seq.front(), s});
            q.lines.push_back(std::move(seq));
        }
    return q;
}

}  // namespace dynkin
