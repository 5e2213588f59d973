#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynkin/exact/matrix.hpp"
#include "dynkin/exact/number.hpp"

namespace dynkin {

/// Sparse multivariate polynomial over Q in t_1..t_h, lex-ordered terms.
class MPoly {
public:
    using Exponent = std::vector<int>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
    MPoly(std::size_t nvars, const Rat& c) : nvars_(nvars) {
        if (c != 0) terms_[Exponent(nvars, 0)] = c;
    }
    static MPoly variable(std::size_t nvars, std::size_t k, const Rat& c = Rat(1)) {
        MPoly p(nvars);
        if (c != 0) {
            Exponent e(nvars, 0);
            e[k] = 1;
            p.terms_[e] = c;
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    Rat evaluate(const std::vector<Rat>& point) const {
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                for (int i = 0; i < e[k]; ++i) t *= point[k];
            acc += t;
        }
        return acc;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend MPoly operator-(MPoly a, const MPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    /// Exact quotient a / b; throws if b does not divide a.
    friend MPoly exact_div(MPoly a, const MPoly& b) {
        if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
        const auto& [lb_e, lb_c] = *b.terms_.rbegin();
        MPoly q(a.nvars_);
        while (!a.is_zero()) {
            const auto [la_e, la_c] = *a.terms_.rbegin();
            Exponent e = la_e;
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] -= lb_e[k];
                if (e[k] < 0) throw std::domain_error("MPoly: inexact division");
            }
            const Rat c = la_c / lb_c;
            q.add_term(e, c);
            for (const auto& [eb, cb] : b.terms_) {
                Exponent f = eb;
                for (std::size_t k = 0; k < f.size(); ++k) f[k] += e[k];
                a.add_term(f, -c * cb);
            }
        }
        return q;
    }

private:
    void add_term(const Exponent& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars_ = 0;
    std::map<Exponent, Rat> terms_;
};

/// Matrix with entries affine-linear in parameters t_1..t_h.
class ParamMatrix {
public:
    ParamMatrix(std::size_t rows, std::size_t cols, std::size_t nparams)
        : rows_(rows), cols_(cols), nparams_(nparams), entries_(rows * cols, MPoly(nparams)) {}

    /// sum_k t_k * basis[k]
    static ParamMatrix pencil(const std::vector<Matrix<Rat>>& basis, std::size_t rows, std::size_t cols) {
        ParamMatrix m(rows, cols, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].rows() != rows || basis[k].cols() != cols)
                throw std::invalid_argument("ParamMatrix::pencil: shape mismatch");
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    if (basis[k](r, c) != 0) m.at(r, c) = m.at(r, c) + MPoly::variable(basis.size(), k, basis[k](r, c));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nparams() const { return nparams_; }

    /// Sets entry (r, c) to c0 + sum_k coef[k] t_k.
    void set_affine(std::size_t r, std::size_t c, const Rat& c0, const std::vector<Rat>& coef) {
        MPoly p(nparams_, c0);
        for (std::size_t k = 0; k < coef.size(); ++k) p = p + MPoly::variable(nparams_, k, coef[k]);
        at(r, c) = std::move(p);
    }

    MPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix<Rat> specialize(const std::vector<Rat>& point) const {
        Matrix<Rat> m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = at(r, c).evaluate(point);
        return m;
    }

private:
    std::size_t rows_, cols_, nparams_;
    std::vector<MPoly> entries_;
};

/// Rank over Q(t_1..t_h) by fraction-free (Bareiss) elimination.
inline std::size_t symbolic_rank(const ParamMatrix& pm) {
    const std::size_t R = pm.rows(), C = pm.cols();
    std::vector<MPoly> a;
    a.reserve(R * C);
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c) a.push_back(pm.at(r, c));
    auto A = [&](std::size_t r, std::size_t c) -> MPoly& { return a[r * C + c]; };
    MPoly prev(pm.nparams(), Rat(1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t p = rank;
        while (p < R && A(p, col).is_zero()) ++p;
        if (p == R) continue;
        if (p != rank)
            for (std::size_t c = 0; c < C; ++c) std::swap(A(p, c), A(rank, c));
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j)
                A(i, j) = exact_div(A(rank, col) * A(i, j) - A(i, col) * A(rank, j), prev);
            A(i, col) = MPoly(pm.nparams());
        }
        prev = A(rank, col);
        ++rank;
    }
    return rank;
}

/// Generic rank. A specialization reaching min(rows, cols) proves the answer;
/// otherwise falls back to symbolic elimination.
inline std::size_t generic_rank(const ParamMatrix& pm) {
    const std::size_t full = std::min(pm.rows(), pm.cols());
    if (full == 0) return 0;
    static const long seeds[][2] = {{2, 3}, {5, 7}, {11, 13}};
    for (const auto& s : seeds) {
        std::vector<Rat> point(pm.nparams());
        for (std::size_t k = 0; k < point.size(); ++k)
            point[k] = Rat(s[0] + static_cast<long>(k * k) * s[1] + static_cast<long>(k) * 17, 1);
        if (rank(pm.specialize(point)) == full) return full;
    }
    return symbolic_rank(pm);
}

}  // namespace dynkin
