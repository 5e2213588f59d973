#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace dynkin {

/// Homogeneous sparse linear system over a field, reduced incrementally to
/// echelon form (each stored row has its pivot at its smallest variable).
template <class F>
class SparseSystem {
public:
    using Row = std::map<std::size_t, F>;

    explicit SparseSystem(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t nullity() const { return nvars_ - pivots_.size(); }

    void add_equation(Row row) {
        for (auto it = row.begin(); it != row.end();) {
            if (it->second == F(0)) {
                it = row.erase(it);
                continue;
            }
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const F factor = it->second;
            const std::size_t var = it->first;
            for (const auto& [v, c] : p->second) {
                auto [slot, inserted] = row.try_emplace(v, F(0));
                slot->second -= factor * c;
            }
            it = row.upper_bound(var);
            row.erase(var);
            // new entries are all above var, so restart from there
        }
        for (auto it = row.begin(); it != row.end();)
            it = it->second == F(0) ? row.erase(it) : std::next(it);
        if (row.empty()) return;
        const F inv = F(1) / row.begin()->second;
        for (auto& [v, c] : row) c *= inv;
        pivots_.emplace(row.begin()->first, std::move(row));
    }

    /// Basis of the solution space, one dense vector per free variable.
    std::vector<std::vector<F>> nullspace() const {
        std::vector<std::vector<F>> basis;
        for (std::size_t f = 0; f < nvars_; ++f) {
            if (pivots_.count(f)) continue;
            std::vector<F> x(nvars_, F(0));
            x[f] = F(1);
            for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
                F s(0);
                for (const auto& [v, c] : it->second)
                    if (v != it->first && !(x[v] == F(0))) s -= c * x[v];
                x[it->first] = s;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    std::size_t nvars_;
    std::map<std::size_t, Row> pivots_;
};

}  // namespace dynkin
