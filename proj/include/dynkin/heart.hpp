#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/derived.hpp"
#include "dynkin/exact/matrix.hpp"
#include "dynkin/exact/number.hpp"

namespace dynkin {

/// A finite heart, given by its simples in canonical (shift, root) order.
class Heart {
public:
    Heart() = default;
    explicit Heart(std::vector<IndecObject> simples) : s_(std::move(simples)) {
        std::sort(s_.begin(), s_.end());
        if (std::adjacent_find(s_.begin(), s_.end()) != s_.end()) throw std::invalid_argument("Heart: repeated simple");
    }

    const std::vector<IndecObject>& simples() const& { return s_; }
    std::vector<IndecObject> simples() && { return std::move(s_); }
    std::size_t size() const { return s_.size(); }
    bool contains(const IndecObject& x) const { return std::binary_search(s_.begin(), s_.end(), x); }

    int min_shift() const { return s_.front().shift; }
    int max_shift() const { return s_.back().shift; }

    Heart shifted(int k) const {
        std::vector<IndecObject> t;
        for (const auto& x : s_) t.push_back(x.shifted(k));
        return Heart(std::move(t));
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& x : s_) {
            h = (h ^ static_cast<std::size_t>(x.root)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(x.shift + 1000)) * 1099511628211ull;
        }
        return h;
    }

    friend bool operator==(const Heart& a, const Heart& b) { return a.s_ == b.s_; }
    friend bool operator<(const Heart& a, const Heart& b) { return a.s_ < b.s_; }

private:
    std::vector<IndecObject> s_;
};

struct HeartHash {
    std::size_t operator()(const Heart& h) const { return h.hash(); }
};

/// Heart-level operations over one derived category.
class HeartCalculus {
public:
    explicit HeartCalculus(const DerivedCategory& dc) : dc_(dc) {}

    const DerivedCategory& category() const { return dc_; }

    Heart initial_heart() const {
        std::vector<IndecObject> s;
        for (int i = 1; i <= dc_.rank(); ++i) s.push_back(dc_.simple(i));
        return Heart(std::move(s));
    }

    /// X in P_H: Hom(X, S[k]) = 0 for every simple S and k <= -1.
    bool in_aisle(const Heart& h, const IndecObject& x) const {
        for (const auto& s : h.simples())
            for (int k : {x.shift - s.shift, x.shift - s.shift + 1})
                if (k <= -1 && dc_.hom(x, s.shifted(k)) != 0) return false;
        return true;
    }

    /// X in P_H^perp: Hom(S[k], X) = 0 for every simple S and k >= 0.
    bool in_coaisle(const Heart& h, const IndecObject& x) const {
        for (const auto& s : h.simples())
            for (int k : {x.shift - s.shift, x.shift - s.shift - 1})
                if (k >= 0 && dc_.hom(s.shifted(k), x) != 0) return false;
        return true;
    }

    /// H1 <= H2 iff P_1 contains P_2.
    bool leq(const Heart& h1, const Heart& h2) const {
        return std::all_of(h2.simples().begin(), h2.simples().end(), [&](const IndecObject& s) { return in_aisle(h1, s); });
    }

    /// Invariants of a simple set; returns an explanation on failure.
    std::optional<std::string> violation(const Heart& h) const {
        const auto& s = h.simples();
        const int n = dc_.rank();
        if (static_cast<int>(s.size()) != n) return "heart must have " + std::to_string(n) + " simples";
        Matrix<Rat> k(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < s.size(); ++i) {
            const DimVec c = dc_.kclass(s[i]);
            for (std::size_t j = 0; j < c.size(); ++j) k(i, j) = c[j];
        }
        if (det(k) * det(k) != 1) return "K-classes of the simples are not a Z-basis";
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (i == j) continue;
                for (int kk : {s[i].shift - s[j].shift, s[i].shift - s[j].shift + 1})
                    if (kk <= 0 && dc_.hom(s[i], s[j].shifted(kk)) != 0)
                        return "Hom^{<=0}(" + dc_.name(s[i]) + ", " + dc_.name(s[j]) + ") != 0";
                if (i < j && dc_.hom_total(s[i], s[j]) + dc_.hom_total(s[j], s[i]) > 1)
                    return "graded Hom between " + dc_.name(s[i]) + " and " + dc_.name(s[j]) + " exceeds 1";
            }
        return std::nullopt;
    }

    void validate(const Heart& h, const char* where) const {
        if (auto v = violation(h)) throw std::logic_error(std::string(where) + ": invalid heart: " + *v);
    }

    /// Simple forward tilt at s.
    Heart forward_tilt(const Heart& h, const IndecObject& s) const {
        if (!h.contains(s)) throw std::invalid_argument("forward_tilt: " + dc_.name(s) + " is not simple in the heart");
        std::vector<IndecObject> out;
        const auto& rt = dc_.reps();
        for (const auto& x : h.simples()) {
            if (x == s) {
                out.push_back(s.shifted(1));
                continue;
            }
            const int e = dc_.hom(x, s.shifted(1));
            if (e == 0) {
                out.push_back(x);
                continue;
            }
            if (e != 1) throw std::logic_error("forward_tilt: Hom(X, S[1]) has dimension > 1");
            const int a = x.shift, b = s.shift;
            if (b == a) {
                // S -> E -> X -> S[1] inside the shifted module category
                out.push_back({rt.root_index(rt.extension_middle(s.root, x.root)), a});
            } else if (b == a - 1) {
                switch (rt.map_kind(x.root, s.root)) {
                    case RepTheory::MapKind::Mono:
                        out.push_back({rt.root_index(rt.root(s.root) - rt.root(x.root)), a - 1});
                        break;
                    case RepTheory::MapKind::Epi:
                        out.push_back({rt.root_index(rt.root(x.root) - rt.root(s.root)), a});
                        break;
                    default:
                        throw std::logic_error("forward_tilt: map " + dc_.name(x) + " -> " + dc_.name(s.shifted(1)) +
                                               " is neither mono nor epi");
                }
            } else {
                throw std::logic_error("forward_tilt: shift gap outside the hereditary window");
            }
        }
        Heart r(std::move(out));
        validate(r, "forward_tilt");
        return r;
    }

    /// Simple backward tilt at s.
    Heart backward_tilt(const Heart& h, const IndecObject& s) const {
        if (!h.contains(s)) throw std::invalid_argument("backward_tilt: " + dc_.name(s) + " is not simple in the heart");
        std::vector<IndecObject> out;
        const auto& rt = dc_.reps();
        for (const auto& x : h.simples()) {
            if (x == s) {
                out.push_back(s.shifted(-1));
                continue;
            }
            const int e = dc_.hom(s, x.shifted(1));
            if (e == 0) {
                out.push_back(x);
                continue;
            }
            if (e != 1) throw std::logic_error("backward_tilt: Hom(S, X[1]) has dimension > 1");
            const int a = x.shift, b = s.shift;
            if (b == a) {
                // X -> E -> S inside the shifted module category
                out.push_back({rt.root_index(rt.extension_middle(x.root, s.root)), a});
            } else if (b == a + 1) {
                switch (rt.map_kind(s.root, x.root)) {
                    case RepTheory::MapKind::Mono:
                        out.push_back({rt.root_index(rt.root(x.root) - rt.root(s.root)), a});
                        break;
                    case RepTheory::MapKind::Epi:
                        out.push_back({rt.root_index(rt.root(s.root) - rt.root(x.root)), a + 1});
                        break;
                    default:
                        throw std::logic_error("backward_tilt: map " + dc_.name(s.shifted(-1)) + " -> " + dc_.name(x) +
                                               " is neither mono nor epi");
                }
            } else {
                throw std::logic_error("backward_tilt: shift gap outside the hereditary window");
            }
        }
        Heart r(std::move(out));
        validate(r, "backward_tilt");
        return r;
    }

    /// (k_min, k_max): X has nonzero H-homology exactly in degrees k_min..k_max
    /// at the ends, with X[a] concentrated in degree a for the standard heart.
    std::pair<int, int> homology_range(const IndecObject& x, const Heart& h) const {
        const int lo = h.min_shift(), hi = h.max_shift();
        int kmin = x.shift - lo + 1;
        while (!in_aisle(h, x.shifted(-kmin))) --kmin;
        int kmax = x.shift - hi - 1;
        while (!in_coaisle(h, x.shifted(-kmax - 1))) ++kmax;
        if (kmax < kmin) throw std::logic_error("homology_range: empty range");
        return {kmin, kmax};
    }
    int width(const IndecObject& x, const Heart& h) const {
        auto [a, b] = homology_range(x, h);
        return b - a;
    }

    /// Every indecomposable lies in P or in P^perp. Objects with shift at
    /// least max_shift are in P and those below min_shift in P^perp, so the
    /// shifts [min - 1, max + 1] decide.
    bool is_standard(const Heart& h) const {
        for (const auto& x : dc_.all_objects(h.min_shift() - 1, h.max_shift() + 1))
            if (!in_aisle(h, x) && !in_coaisle(h, x)) return false;
        return true;
    }

    /// No other indecomposable of P_H precedes s in ZQ. Predecessors of s
    /// with shift below min_shift lie in P^perp, hence the window.
    bool is_leftmost(const Heart& h, const IndecObject& s) const {
        if (!h.contains(s)) return false;
        const auto& zq = dc_.zq();
        for (const auto& x : dc_.all_objects(h.min_shift() - 1, s.shift + 1)) {
            if (x == s || !in_aisle(h, x)) continue;
            if (zq.precedes(x, s)) return false;
        }
        return true;
    }

    /// Indecomposables of P_H with shift in [lo, hi].
    std::vector<IndecObject> aisle_window(const Heart& h, int lo, int hi) const {
        std::vector<IndecObject> out;
        for (const auto& x : dc_.all_objects(lo, hi))
            if (in_aisle(h, x)) out.push_back(x);
        return out;
    }

    struct Standardization {
        std::vector<IndecObject> steps;
        Heart result;
    };

    /// Repeated L-tilting until standard; each step checks that the aisle
    /// loses exactly the tilted simple.
    Standardization standardize(const Heart& h, std::size_t max_steps = 10000) const {
        Standardization st{{}, h};
        while (!is_standard(st.result)) {
            if (st.steps.size() >= max_steps) throw std::runtime_error("standardize: step bound exceeded");
            std::optional<IndecObject> pick;
            for (const auto& s : st.result.simples())
                if (is_leftmost(st.result, s)) {
                    pick = s;
                    break;
                }
            if (!pick) throw std::logic_error("standardize: heart without a leftmost simple");
            const Heart next = forward_tilt(st.result, *pick);
            const int lo = std::min(st.result.min_shift(), next.min_shift()) - 1;
            const int hi = std::max(st.result.max_shift(), next.max_shift()) + 1;
            auto before = aisle_window(st.result, lo, hi);
            before.erase(std::remove(before.begin(), before.end(), *pick), before.end());
            if (aisle_window(next, lo, hi) != before)
                throw std::logic_error("standardize: L-tilt at " + dc_.name(*pick) + " changed the aisle beyond the tilted simple");
            st.steps.push_back(*pick);
            st.result = next;
        }
        return st;
    }

private:
    static Rat det(Matrix<Rat> m) {
        const std::size_t n = m.rows();
        Rat d(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m(p, c) == 0) ++p;
            if (p == n) return Rat(0);
            if (p != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            for (std::size_t r = c + 1; r < n; ++r) {
                if (m(r, c) == 0) continue;
                const Rat f = m(r, c) / m(c, c);
                for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return d;
    }

    const DerivedCategory& dc_;
};

}  // namespace dynkin
