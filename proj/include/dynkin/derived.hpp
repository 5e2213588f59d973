#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/quiver.hpp"
#include "dynkin/rep.hpp"

namespace dynkin {

/// An indecomposable object M[shift] of the derived category, M given by its
/// root index. Ordered by (shift, root).
struct IndecObject {
    int root = 0;
    int shift = 0;

    IndecObject shifted(int k) const { return {root, shift + k}; }
    friend bool operator==(const IndecObject&, const IndecObject&) = default;
    friend bool operator<(const IndecObject& a, const IndecObject& b) {
        return a.shift != b.shift ? a.shift < b.shift : a.root < b.root;
    }
};

/// Vertex (m, i) of ZQ.
struct ZQVertex {
    int m = 0;
    int i = 1;
    friend bool operator==(const ZQVertex&, const ZQVertex&) = default;
    friend bool operator<(const ZQVertex& a, const ZQVertex& b) { return a.m != b.m ? a.m < b.m : a.i < b.i; }
};

/// Coordinatization of Ind D(Q) by the translation quiver ZQ: arrows
/// (m,i) -> (m,j) and (m-1,j) -> (m,i) for each arrow i -> j of Q, with
/// tau(m,i) = (m-1,i). The projective P_i sits at (rho(i), i) where
/// rho(i) = rho(j) + 1 along arrows and rho(1) = 0. Grown lazily.
class ZQModel {
public:
    explicit ZQModel(const RepTheory& rt) : rt_(rt), n_(rt.rank()) {
        const Quiver& q = rt.quiver();
        rho_.assign(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<bool> set(static_cast<std::size_t>(n_) + 1, false);
        set[1] = true;
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& [i, j] : q.arrows()) {
                if (set[static_cast<std::size_t>(i)] && !set[static_cast<std::size_t>(j)]) {
                    rho_[static_cast<std::size_t>(j)] = rho_[static_cast<std::size_t>(i)] - 1;
                    set[static_cast<std::size_t>(j)] = changed = true;
                } else if (set[static_cast<std::size_t>(j)] && !set[static_cast<std::size_t>(i)]) {
                    rho_[static_cast<std::size_t>(i)] = rho_[static_cast<std::size_t>(j)] + 1;
                    set[static_cast<std::size_t>(i)] = changed = true;
                }
            }
        }
        for (int i = 1; i <= n_; ++i) {
            out_[i];
            in_[i];
        }
        for (const auto& [i, j] : q.arrows()) {
            out_[i].push_back(j);
            in_[j].push_back(i);
        }
        std::lock_guard<std::mutex> lock(mu_);
        int lo = rho_[1], hi = rho_[1];
        for (int i = 1; i <= n_; ++i) {
            lo = std::min(lo, rho_[static_cast<std::size_t>(i)]);
            hi = std::max(hi, rho_[static_cast<std::size_t>(i)]);
        }
        pf_fwd_ = lo - 1;
        pf_bwd_ = hi + 1;
        extend_forward(hi);
        extend_backward(lo);
        grow_locked(-1, 2);
    }

    int rank() const { return n_; }
    int rho(int i) const { return rho_.at(static_cast<std::size_t>(i)); }
    static int pf(const ZQVertex& v, int rho_i) { return 2 * v.m - rho_i; }
    int pf(const ZQVertex& v) const { return pf(v, rho(v.i)); }

    /// Position function: pf(tau X) = pf(X) - 2, +1 along arrows, pf(P_1) = 0.
    int pf(const IndecObject& x) const { return pf(coord(x)); }

    ZQVertex coord(const IndecObject& x) const {
        std::lock_guard<std::mutex> lock(mu_);
        grow_locked(x.shift, x.shift);
        auto it = coord_.find(x);
        if (it == coord_.end())
            throw std::logic_error("ZQ: object " + dim_str(rt_.root(x.root)) + "[" + std::to_string(x.shift) + "] not found");
        return it->second;
    }

    IndecObject object_at(const ZQVertex& v) const {
        std::lock_guard<std::mutex> lock(mu_);
        for (int guard = 0;; ++guard) {
            auto it = obj_.find(v);
            if (it != obj_.end()) return it->second;
            if (guard > 64) throw std::logic_error("ZQ: vertex out of reach");
            const int p = pf(v);
            if (p > pf_fwd_) extend_forward(p);
            if (p < pf_bwd_) extend_backward(p);
        }
    }

    DimVec kclass(const ZQVertex& v) const {
        const IndecObject x = object_at(v);
        DimVec k = rt_.root(x.root);
        return (x.shift % 2 == 0) ? k : -k;
    }

    IndecObject tau(const IndecObject& x) const {
        auto v = coord(x);
        return object_at({v.m - 1, v.i});
    }
    IndecObject tau_inv(const IndecObject& x) const {
        auto v = coord(x);
        return object_at({v.m + 1, v.i});
    }

    std::vector<ZQVertex> successors(const ZQVertex& v) const {
        std::vector<ZQVertex> s;
        for (int j : out_.at(v.i)) s.push_back({v.m, j});
        for (int j : in_.at(v.i)) s.push_back({v.m + 1, j});
        return s;
    }
    std::vector<ZQVertex> predecessors(const ZQVertex& v) const {
        std::vector<ZQVertex> s;
        for (int j : in_.at(v.i)) s.push_back({v.m, j});
        for (int j : out_.at(v.i)) s.push_back({v.m - 1, j});
        return s;
    }

    /// Ps(X) (forward) or Ps^{-1}(X) (backward): the objects joined to X by a
    /// sectional path, one per tau-orbit.
    std::vector<IndecObject> sectional(const IndecObject& x, bool forward) const {
        const auto verts = sectional_vertices(coord(x), forward);
        std::vector<IndecObject> out;
        for (const auto& v : verts) out.push_back(object_at(v));
        return out;
    }

    std::vector<ZQVertex> sectional_vertices(const ZQVertex& start, bool forward) const {
        std::map<int, ZQVertex> per_orbit;
        per_orbit[start.i] = start;
        // state: (previous, current)
        std::vector<std::pair<ZQVertex, ZQVertex>> stack;
        for (const auto& w : forward ? successors(start) : predecessors(start)) stack.push_back({start, w});
        while (!stack.empty()) {
            auto [prev, cur] = stack.back();
            stack.pop_back();
            auto [it, fresh] = per_orbit.emplace(cur.i, cur);
            if (!fresh) {
                if (!(it->second == cur)) throw std::logic_error("ZQ: sectional paths hit an orbit twice");
                continue;
            }
            for (const auto& w : forward ? successors(cur) : predecessors(cur)) {
                // sectional: tau(next) != prev (forward), next != tau(prev) (backward)
                if (forward && ZQVertex{w.m - 1, w.i} == prev) continue;
                if (!forward && w == ZQVertex{prev.m - 1, prev.i}) continue;
                stack.push_back({cur, w});
            }
        }
        if (static_cast<int>(per_orbit.size()) != n_) throw std::logic_error("ZQ: sectional set is not a section");
        std::vector<ZQVertex> out;
        for (const auto& [i, v] : per_orbit) out.push_back(v);
        return out;
    }

    /// Whether there is a path X -> ... -> Y in ZQ (X = Y allowed).
    bool precedes(const IndecObject& x, const IndecObject& y) const {
        const ZQVertex vx = coord(x);
        for (const auto& s : sectional_vertices(coord(y), false))
            if (s.i == vx.i) return vx.m <= s.m;
        return false;
    }

    /// Ensures all objects with shift in [lo, hi] are coordinatized.
    void grow(int lo, int hi) const {
        std::lock_guard<std::mutex> lock(mu_);
        grow_locked(lo, hi);
    }

private:
    // Caller holds mu_.
    void grow_locked(int lo, int hi) const {
        const int h = coxeter_number(rt_.quiver());
        while (!covers_forward(hi)) extend_forward(pf_fwd_ + h);
        while (!covers_backward(lo)) extend_backward(pf_bwd_ - h);
    }
    bool covers_forward(int s) const {
        for (int i = 1; i <= n_; ++i)
            if (last_fwd_shift_[i] <= s) return false;
        return true;
    }
    bool covers_backward(int s) const {
        for (int i = 1; i <= n_; ++i)
            if (last_bwd_shift_[i] >= s) return false;
        return true;
    }

    DimVec projective_dim(int i) const {
        DimVec d(static_cast<std::size_t>(n_), 0);
        std::deque<int> todo{i};
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop_front();
            d[static_cast<std::size_t>(v - 1)] = 1;
            for (int w : out_.at(v)) todo.push_back(w);
        }
        return d;
    }

    void record(const ZQVertex& v, const DimVec& k, int shift) const {
        DimVec a = k;
        if (shift % 2 != 0) a = -a;
        const auto idx = rt_.find_root(a);
        if (!idx) throw std::logic_error("ZQ: knitted class " + dim_str(k) + " is not a (signed) root");
        const IndecObject x{*idx, shift};
        obj_[v] = x;
        coord_[x] = v;
        kls_[v] = k;
    }

    void extend_forward(int pf_target) const {
        for (int p = pf_fwd_ + 1; p <= pf_target; ++p) {
            for (int i = 1; i <= n_; ++i) {
                const int r = rho_[static_cast<std::size_t>(i)];
                if (((p + r) % 2 + 2) % 2 != 0) continue;
                const int m = (p + r) / 2;
                if (m < r) continue;
                if (m == r) {
                    record({m, i}, projective_dim(i), 0);
                    last_fwd_shift_[i] = 0;
                    continue;
                }
                DimVec k = -kls_.at({m - 1, i});
                for (int j : out_.at(i)) k = k + kls_.at({m - 1, j});
                for (int j : in_.at(i)) k = k + kls_.at({m, j});
                const int prev_shift = obj_.at({m - 1, i}).shift;
                const bool flip = (total(k) > 0) != (total(kls_.at({m - 1, i})) > 0);
                const int s = prev_shift + (flip ? 1 : 0);
                record({m, i}, k, s);
                last_fwd_shift_[i] = s;
            }
        }
        pf_fwd_ = std::max(pf_fwd_, pf_target);
    }

    void extend_backward(int pf_target) const {
        for (int p = pf_bwd_ - 1; p >= pf_target; --p) {
            for (int i = 1; i <= n_; ++i) {
                const int r = rho_[static_cast<std::size_t>(i)];
                if (((p + r) % 2 + 2) % 2 != 0) continue;
                const int m = (p + r) / 2;
                if (m > r) continue;
                if (m == r) {
                    if (!obj_.count({m, i})) record({m, i}, projective_dim(i), 0);
                    last_bwd_shift_[i] = 0;
                    continue;
                }
                DimVec k = -kls_.at({m + 1, i});
                for (int j : out_.at(i)) k = k + kls_.at({m, j});
                for (int j : in_.at(i)) k = k + kls_.at({m + 1, j});
                const int next_shift = obj_.at({m + 1, i}).shift;
                const bool flip = (total(k) > 0) != (total(kls_.at({m + 1, i})) > 0);
                const int s = next_shift - (flip ? 1 : 0);
                record({m, i}, k, s);
                last_bwd_shift_[i] = s;
            }
        }
        pf_bwd_ = std::min(pf_bwd_, pf_target);
    }

    const RepTheory& rt_;
    int n_;
    std::vector<int> rho_;
    std::map<int, std::vector<int>> out_, in_;
    mutable std::mutex mu_;
    mutable std::map<ZQVertex, IndecObject> obj_;
    mutable std::map<IndecObject, ZQVertex> coord_;
    mutable std::map<ZQVertex, DimVec> kls_;
    mutable std::map<int, int> last_fwd_shift_, last_bwd_shift_;
    mutable int pf_fwd_ = 0, pf_bwd_ = 0;
};

/// The derived category D(Q) of a Dynkin quiver, through its indecomposables.
class DerivedCategory {
public:
    explicit DerivedCategory(Quiver q) : rt_(std::move(q)), zq_(rt_) {}
    DerivedCategory(const DerivedCategory&) = delete;
    DerivedCategory& operator=(const DerivedCategory&) = delete;

    const RepTheory& reps() const { return rt_; }
    const ZQModel& zq() const { return zq_; }
    const Quiver& quiver() const { return rt_.quiver(); }
    int rank() const { return rt_.rank(); }
    int coxeter() const { return coxeter_number(rt_.quiver()); }

    IndecObject module(const DimVec& root, int shift = 0) const { return {rt_.root_index(root), shift}; }
    IndecObject simple(int vertex, int shift = 0) const { return {rt_.simple_index(vertex), shift}; }
    const DimVec& root(const IndecObject& x) const { return rt_.root(x.root); }
    DimVec kclass(const IndecObject& x) const { return x.shift % 2 == 0 ? root(x) : -root(x); }

    /// dim Hom(M[a], N[b]) in a hereditary category.
    int hom(const IndecObject& x, const IndecObject& y) const {
        const int d = y.shift - x.shift;
        if (d == 0) return rt_.hom(x.root, y.root);
        if (d == 1) return rt_.ext1(x.root, y.root);
        return 0;
    }

    /// sum_k dim Hom(X, Y[k]).
    int hom_total(const IndecObject& x, const IndecObject& y) const {
        return hom(x, y.shifted(x.shift - y.shift)) + hom(x, y.shifted(x.shift - y.shift + 1));
    }

    std::vector<IndecObject> all_objects(int shift_lo, int shift_hi) const {
        std::vector<IndecObject> out;
        for (int s = shift_lo; s <= shift_hi; ++s)
            for (int r = 0; r < rt_.root_count(); ++r) out.push_back({r, s});
        return out;
    }

    std::string name(const IndecObject& x) const { return dim_str(root(x)) + "@" + std::to_string(x.shift); }

private:
    RepTheory rt_;
    ZQModel zq_;
};

}  // namespace dynkin
