#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exact/number.hpp"
#include "dynkin/hn.hpp"

namespace dynkin {

struct Charge {
    Rat re, im;
    friend bool operator==(const Charge&, const Charge&) = default;
};

/// Lies in the half-open upper half-plane (phase in [0, 1)).
inline bool in_upper_half_plane(const Charge& z) { return z.im > 0 || (z.im == 0 && z.re > 0); }

enum class PhaseOrder { Less, Equal, Greater };

inline PhaseOrder phase_cmp(const Charge& a, const Charge& b) {
    if (!in_upper_half_plane(a) || !in_upper_half_plane(b))
        throw std::invalid_argument("phase_cmp: charge outside the upper half-plane");
    const Rat c = a.re * b.im - a.im * b.re;
    if (c > 0) return PhaseOrder::Less;
    if (c < 0) return PhaseOrder::Greater;
    return PhaseOrder::Equal;
}

/// Z(S_1), ..., Z(S_n).
struct StabilityFunction {
    std::vector<Charge> z;

    StabilityFunction() = default;
    explicit StabilityFunction(std::vector<Charge> zs) : z(std::move(zs)) {
        for (std::size_t i = 0; i < z.size(); ++i)
            if (!in_upper_half_plane(z[i]))
                throw std::invalid_argument("charge of S" + std::to_string(i + 1) + " outside the upper half-plane");
    }
    Charge operator()(const DimVec& d) const {
        if (d.size() != z.size()) throw std::invalid_argument("stability function: dimension vector length");
        Charge c{Rat(0), Rat(0)};
        for (std::size_t i = 0; i < d.size(); ++i) {
            c.re += d[i] * z[i].re;
            c.im += d[i] * z[i].im;
        }
        return c;
    }
    StabilityFunction scaled(const Rat& c) const {
        if (c <= 0) throw std::invalid_argument("scale must be positive");
        StabilityFunction s = *this;
        for (auto& x : s.z) {
            x.re *= c;
            x.im *= c;
        }
        return s;
    }
};

/// Stability on Ind H_Q, with the subobject relation between indecomposables
/// computed once.
class StabilityChecker {
public:
    explicit StabilityChecker(const HeartCalculus& hc) : hc_(hc), rt_(hc.category().reps()) {
        const int n = rt_.root_count();
        sub_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
                if (l != m) sub_[idx(l)][idx(m)] = rt_.exists_mono(l, m) ? 1 : 0;
    }

    const RepTheory& reps() const { return rt_; }
    bool is_subobject(int l, int m) const { return sub_[idx(l)][idx(m)] != 0; }

    bool is_semistable(int m, const StabilityFunction& z) const { return check(m, z, false); }
    bool is_stable(int m, const StabilityFunction& z) const { return check(m, z, true); }

    bool is_totally_stable(const StabilityFunction& z) const {
        for (int m = 0; m < rt_.root_count(); ++m)
            if (!is_stable(m, z)) return false;
        return true;
    }
    std::vector<int> unstable(const StabilityFunction& z) const {
        std::vector<int> out;
        for (int m = 0; m < rt_.root_count(); ++m)
            if (!is_stable(m, z)) out.push_back(m);
        return out;
    }

    /// Stable indecomposables by increasing phase (tilt order); throws if two
    /// of them share a phase.
    HNStratum induced_stratum(const StabilityFunction& z) const {
        std::vector<int> st;
        for (int m = 0; m < rt_.root_count(); ++m)
            if (is_stable(m, z)) st.push_back(m);
        std::sort(st.begin(), st.end(), [&](int a, int b) {
            return phase_cmp(z(rt_.root(a)), z(rt_.root(b))) == PhaseOrder::Less;
        });
        for (std::size_t i = 1; i < st.size(); ++i)
            if (phase_cmp(z(rt_.root(st[i - 1])), z(rt_.root(st[i]))) == PhaseOrder::Equal)
                throw std::invalid_argument("stability function is not discrete on stables");
        HNStratum s;
        for (int m : st) s.labels.push_back({m, 0});
        return s;
    }

    bool is_discrete(const StabilityFunction& z) const {
        try {
            induced_stratum(z);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    /// Integer-charge fast path for searches: number of violations of the
    /// target order (0 iff the target stratum is induced).
    long score(const std::vector<std::pair<long long, long long>>& z, const std::vector<int>& target) const {
        const int n = rt_.root_count();
        std::vector<std::pair<long long, long long>> c(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m) {
            long long x = 0, y = 0;
            const DimVec& d = rt_.root(m);
            for (std::size_t i = 0; i < d.size(); ++i) {
                x += d[i] * z[i].first;
                y += d[i] * z[i].second;
            }
            c[idx(m)] = {x, y};
        }
        auto cross = [&](int a, int b) {
            const auto& p = c[idx(a)];
            const auto& q = c[idx(b)];
            return static_cast<__int128>(p.first) * q.second - static_cast<__int128>(p.second) * q.first;
        };
        std::vector<char> want(static_cast<std::size_t>(n), 0);
        for (int t : target) want[idx(t)] = 1;
        long bad = 0;
        for (int m = 0; m < n; ++m) {
            bool stable = true;
            for (int l = 0; l < n && stable; ++l)
                if (sub_[idx(l)][idx(m)] && cross(l, m) <= 0) stable = false;  // mu(L) >= mu(M)
            if (stable != (want[idx(m)] != 0)) ++bad;
        }
        for (std::size_t i = 1; i < target.size(); ++i)
            if (cross(target[i - 1], target[i]) <= 0) ++bad;  // phases must increase
        return bad;
    }

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    bool check(int m, const StabilityFunction& z, bool strict) const {
        const Charge zm = z(rt_.root(m));
        for (int l = 0; l < rt_.root_count(); ++l) {
            if (!sub_[idx(l)][idx(m)]) continue;
            const PhaseOrder o = phase_cmp(z(rt_.root(l)), zm);
            if (o == PhaseOrder::Greater || (strict && o == PhaseOrder::Equal)) return false;
        }
        return true;
    }

    const HeartCalculus& hc_;
    const RepTheory& rt_;
    std::vector<std::vector<char>> sub_;
};

/// Charges for total stability on the orientations where they are known to
/// work: A_n with Z(S_j) = -j + i, D_n with Z(S_j) = j + i (j <= n-2) and
/// Z(S_{n-1}) = Z(S_n) = t i.
inline StabilityFunction charges_a(int n) {
    std::vector<Charge> z;
    for (int j = 1; j <= n; ++j) z.push_back({Rat(-j), Rat(1)});
    return StabilityFunction(std::move(z));
}
inline StabilityFunction charges_d(int n, long t) {
    std::vector<Charge> z;
    for (int j = 1; j <= n - 2; ++j) z.push_back({Rat(j), Rat(1)});
    z.push_back({Rat(0), Rat(t)});
    z.push_back({Rat(0), Rat(t)});
    return StabilityFunction(std::move(z));
}

/// Orientations on which the reference charges are meant to be totally
/// stable. The E orientations have every arrow of the usual pictures reversed.
inline std::string reference_orientation(const TypeTag& t) {
    std::string o;
    auto arrow = [&](int a, int b) { o += (o.empty() ? "" : ",") + std::to_string(a) + ">" + std::to_string(b); };
    switch (t.family) {
        case Family::A:
            for (int j = t.n; j > 1; --j) arrow(j, j - 1);
            break;
        case Family::D:
            for (int j = 1; j < t.n - 2; ++j) arrow(j, j + 1);
            arrow(t.n - 1, 1);
            arrow(t.n, 1);
            break;
        case Family::E:
            if (t.n == 6) return "4>1,6>4,3>1,2>1,5>2";
            if (t.n == 7) return "2>1,3>2,4>1,5>1,6>5,7>6";
            return "4>1,4>2,5>2,6>2,6>3,8>3,8>7";
    }
    return o;
}

/// Smallest integer t in [1, t_max] for which the D_n charges are totally stable.
inline std::optional<long> minimal_t_for_d(const StabilityChecker& sc, int n, long t_max = 1000) {
    for (long t = 1; t <= t_max; ++t)
        if (sc.is_totally_stable(charges_d(n, t))) return t;
    return std::nullopt;
}

struct InducingSearch {
    std::optional<StabilityFunction> witness;
    long evaluations = 0;
    long best_score = 0;
};

/// Heuristic search for integer charges inducing `target` (random restarts
/// plus coordinate descent). A miss proves nothing.
inline InducingSearch search_inducing(const StabilityChecker& sc, const HNStratum& target, long budget,
                                      std::uint64_t seed = 1,
                                      std::optional<StabilityFunction> start = std::nullopt) {
    const int n = sc.reps().rank();
    std::vector<int> t;
    for (const auto& x : target.labels) t.push_back(x.root);
    std::mt19937_64 rng(seed);
    const long long R = 100;
    std::uniform_int_distribution<long long> dx(-R, R), dy(1, R);
    std::uniform_int_distribution<int> coord(0, 2 * n - 1);
    std::uniform_int_distribution<long long> step(-R / 4, R / 4);

    InducingSearch res;
    res.best_score = -1;
    using Z = std::vector<std::pair<long long, long long>>;
    auto verified = [&](const Z& z) -> std::optional<StabilityFunction> {
        std::vector<Charge> cs;
        for (const auto& [x, y] : z) cs.push_back({Rat(static_cast<long>(x)), Rat(static_cast<long>(y))});
        StabilityFunction f(std::move(cs));
        if (sc.is_discrete(f) && sc.induced_stratum(f) == target) return f;
        return std::nullopt;
    };

    Z cur(static_cast<std::size_t>(n));
    bool fresh = true;
    if (start) {
        bool integral = true;
        for (std::size_t i = 0; i < start->z.size(); ++i) {
            const auto& c = start->z[i];
            if (c.re.get_den() != 1 || c.im.get_den() != 1 || !c.re.get_num().fits_slong_p() ||
                !c.im.get_num().fits_slong_p()) {
                integral = false;
                break;
            }
            cur[i] = {c.re.get_num().get_si(), c.im.get_num().get_si()};
        }
        fresh = !integral;
    }
    long cur_score = 0;
    long stall = 0;
    while (res.evaluations < budget) {
        if (fresh) {
            for (auto& [x, y] : cur) {
                x = dx(rng);
                y = dy(rng);
            }
            fresh = false;
            stall = 0;
            cur_score = sc.score(cur, t);
            ++res.evaluations;
        } else {
            Z nxt = cur;
            const int c = coord(rng);
            auto& p = nxt[static_cast<std::size_t>(c / 2)];
            if (c % 2 == 0) p.first += step(rng);
            else p.second = std::max<long long>(1, p.second + step(rng));
            const long s = sc.score(nxt, t);
            ++res.evaluations;
            if (s <= cur_score) {
                stall = s < cur_score ? 0 : stall + 1;
                cur = std::move(nxt);
                cur_score = s;
            } else if (++stall > 200) {
                fresh = true;
            }
        }
        if (res.best_score < 0 || cur_score < res.best_score) res.best_score = cur_score;
        if (cur_score == 0) {
            if (auto w = verified(cur)) {
                res.witness = std::move(w);
                return res;
            }
        }
    }
    return res;
}

}  // namespace dynkin
