#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/exchange_graph.hpp"

namespace dynkin {

/// HN-stratum <T_l, ..., T_1>. `labels` is in tilt order: labels[0] = T_1 is
/// tilted first and has the lowest phase.
struct HNStratum {
    std::vector<IndecObject> labels;

    std::size_t size() const { return labels.size(); }
    const IndecObject& T(std::size_t k) const { return labels.at(k - 1); }  // 1-based
    friend bool operator==(const HNStratum&, const HNStratum&) = default;
};

/// Walk from H_Q tilting T_1, ..., T_l; valid iff every T_k is simple when
/// reached and the walk ends at H_Q[1].
inline bool validate_stratum_by_path(const HeartCalculus& hc, const HNStratum& s) {
    Heart h = hc.initial_heart();
    const Heart target = h.shifted(1);
    for (const auto& t : s.labels) {
        if (t.shift != 0 || !h.contains(t)) return false;
        h = hc.forward_tilt(h, t);
    }
    return h == target;
}

/// Indices (1-based, top quotient first) of the HN filtration of `m`, or
/// nothing if `m` does not filter along the stratum.
inline std::optional<std::vector<int>> hn_filtration(const RepTheory& rt, const HNStratum& s, Rep m) {
    std::vector<int> idx;
    int last = 0;
    while (!is_zero(m.dim)) {
        int j = 0;
        for (std::size_t k = 1; k <= s.size(); ++k)
            if (rt.hom_dim(m, rt.indec(s.T(k).root)) > 0) {
                j = static_cast<int>(k);
                break;
            }
        if (j == 0 || j <= last) return std::nullopt;
        RepTheory::AddQuotient q;
        try {
            q = rt.max_add_quotient(m, rt.indec(s.T(static_cast<std::size_t>(j)).root));
        } catch (const std::logic_error&) {
            return std::nullopt;  // quotient not in <T_j>
        }
        if (q.multiplicity == 0) throw std::logic_error("hn_filtration: empty quotient");
        idx.push_back(j);
        last = j;
        m = std::move(q.kernel);
    }
    return idx;
}

/// Hom ordering plus greedy filtration of every indecomposable module.
inline bool validate_stratum_by_filtration(const RepTheory& rt, const HNStratum& s) {
    std::set<int> seen;
    for (const auto& t : s.labels) {
        if (t.shift != 0 || t.root < 0 || t.root >= rt.root_count()) return false;
        if (!seen.insert(t.root).second) return false;
    }
    for (std::size_t i = 1; i <= s.size(); ++i)
        for (std::size_t j = 1; j < i; ++j)
            if (rt.hom(s.T(i).root, s.T(j).root) != 0) return false;
    for (int r = 0; r < rt.root_count(); ++r)
        if (!hn_filtration(rt, s, rt.indec(r))) return false;
    return true;
}

struct TorsionPair {
    std::vector<int> torsion_free;  // F_j, root indices
    std::vector<int> torsion;       // T_j
};

/// (F_j, T_j) = (<T_1..T_j>, <T_{j+1}..T_l>) restricted to Ind H_Q, with the
/// torsion pair axioms checked.
inline TorsionPair torsion_pair_from_prefix(const RepTheory& rt, const HNStratum& s, std::size_t j) {
    if (j > s.size()) throw std::invalid_argument("torsion_pair_from_prefix: j out of range");
    // extension closure by indecomposable middle terms
    auto closure = [&](std::size_t from, std::size_t to) {
        std::set<int> c;
        for (std::size_t k = from; k <= to; ++k) c.insert(s.T(k).root);
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<int> cur(c.begin(), c.end());
            for (int a : cur)
                for (int b : cur) {
                    if (rt.ext1(b, a) != 1) continue;
                    auto r = rt.find_root(rt.root(a) + rt.root(b));
                    if (r && c.insert(*r).second) grew = true;
                }
        }
        return c;
    };
    const std::set<int> f = closure(1, j), t = closure(j + 1, s.size());
    TorsionPair tp;
    for (int r = 0; r < rt.root_count(); ++r) {
        auto fil = hn_filtration(rt, s, rt.indec(r));
        if (!fil) throw std::logic_error("torsion_pair_from_prefix: invalid stratum");
        const bool all_f = std::all_of(fil->begin(), fil->end(), [&](int k) { return k <= static_cast<int>(j); });
        const bool all_t = std::all_of(fil->begin(), fil->end(), [&](int k) { return k > static_cast<int>(j); });
        if (all_f) tp.torsion_free.push_back(r);
        if (all_t) tp.torsion.push_back(r);
        if (all_f != (f.count(r) > 0) || all_t != (t.count(r) > 0))
            throw std::logic_error("torsion_pair_from_prefix: closure disagrees with filtrations");
    }
    for (int a : tp.torsion)
        for (int b : tp.torsion_free)
            if (rt.hom(a, b) != 0) throw std::logic_error("torsion_pair_from_prefix: Hom(T, F) != 0");
    return tp;
}

inline HNStratum stratum_of_path(const DirectedPath& p) { return HNStratum{p.labels}; }

}  // namespace dynkin
