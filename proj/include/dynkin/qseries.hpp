#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exact/qcoeff.hpp"
#include "dynkin/exact/ratfun.hpp"
#include "dynkin/quiver.hpp"

namespace dynkin {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<QCoeff> {
    static QCoeff v_pow(long k) { return QCoeff::v_pow(k); }
    static QCoeff inv_v_pow_minus_one(int n) { return QCoeff::inv_v_pow_minus_one(n); }
};

template <>
struct CoeffOps<RatFun> {
    static RatFun v_pow(long k) { return RatFun::v_pow(k); }
    static RatFun inv_v_pow_minus_one(int n) { return (RatFun::v_pow(n) - RatFun(1L)).inv(); }
};

/// Truncated quantum affine space: y^a y^b = v^{w(a,b)} y^{a+b}, with w an
/// antisymmetric integer form, keeping total degree <= degree.
struct QTorus {
    int n = 0;
    int degree = 0;
    std::vector<std::vector<int>> w;  // w[i][j] = w(e_i, e_j)

    long omega(const DimVec& a, const DimVec& b) const {
        long s = 0;
        for (int i = 0; i < n; ++i) {
            if (!a[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < n; ++j)
                s += static_cast<long>(a[static_cast<std::size_t>(i)]) * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)];
        }
        return s;
    }

    /// w(a,b) = <a,b> - <b,a> for the Euler form of q.
    static std::shared_ptr<const QTorus> of_quiver(const Quiver& q, int degree) {
        auto t = std::make_shared<QTorus>();
        t->n = q.rank();
        t->degree = degree;
        const auto e = euler_matrix(q);
        t->w.assign(static_cast<std::size_t>(t->n), std::vector<int>(static_cast<std::size_t>(t->n), 0));
        for (int i = 0; i < t->n; ++i)
            for (int j = 0; j < t->n; ++j)
                t->w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - e[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return t;
    }
    static std::shared_ptr<const QTorus> custom(std::vector<std::vector<int>> w, int degree) {
        auto t = std::make_shared<QTorus>();
        t->n = static_cast<int>(w.size());
        t->degree = degree;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].size() != w.size()) throw std::invalid_argument("QTorus: form must be square");
            for (std::size_t j = 0; j < w.size(); ++j)
                if (w[i][j] != -w[j][i]) throw std::invalid_argument("QTorus: form must be antisymmetric");
        }
        t->w = std::move(w);
        return t;
    }
};

using TorusPtr = std::shared_ptr<const QTorus>;

/// (power of v, a + b) for y^a y^b.
inline std::pair<long, DimVec> monomial_mul(const QTorus& t, const DimVec& a, const DimVec& b) {
    return {t.omega(a, b), a + b};
}

template <class C>
class QSeries {
public:
    using Terms = std::map<DimVec, C>;

    explicit QSeries(TorusPtr t) : t_(std::move(t)) {
        if (!t_) throw std::invalid_argument("QSeries: null torus");
    }

    static QSeries one(TorusPtr t) {
        QSeries s(std::move(t));
        s.c_[DimVec(static_cast<std::size_t>(s.t_->n), 0)] = C(1L);
        return s;
    }
    static QSeries monomial(TorusPtr t, const DimVec& a, C c) {
        QSeries s(std::move(t));
        s.add_term(a, std::move(c));
        return s;
    }

    const QTorus& torus() const { return *t_; }
    const TorusPtr& torus_ptr() const { return t_; }
    int degree() const { return t_->degree; }
    const Terms& terms() const { return c_; }
    std::size_t size() const { return c_.size(); }

    C coeff(const DimVec& a) const {
        auto it = c_.find(a);
        return it == c_.end() ? C() : it->second;
    }

    void add_term(const DimVec& a, const C& c) {
        if (static_cast<int>(a.size()) != t_->n || !is_nonnegative(a))
            throw std::invalid_argument("QSeries: exponent " + dim_str(a) + " not in N^n");
        if (total(a) > t_->degree || c.is_zero()) return;
        auto [it, fresh] = c_.emplace(a, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        a.same(b);
        QSeries r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    QSeries operator-() const {
        QSeries r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.same(b);
        QSeries r(a.t_);
        const int D = a.t_->degree;
        for (const auto& [ea, ca] : a.c_) {
            const int da = total(ea);
            for (const auto& [eb, cb] : b.c_) {
                if (da + total(eb) > D) continue;
                auto [k, e] = monomial_mul(*a.t_, ea, eb);
                r.add_term(e, ca * cb * CoeffOps<C>::v_pow(k));
            }
        }
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    /// Inverse of a series with constant term 1: sum_k (1 - s)^k.
    QSeries inverse() const {
        const DimVec zero(static_cast<std::size_t>(t_->n), 0);
        if (coeff(zero) != C(1L)) throw std::domain_error("QSeries: inverse needs constant term 1");
        const QSeries u = one(t_) - *this;
        QSeries r = one(t_), p = one(t_);
        for (int k = 1; k <= t_->degree; ++k) {
            p = p * u;
            if (p.c_.empty()) break;
            r = r + p;
        }
        return r;
    }

    /// Same terms after dropping everything of total degree > d.
    QSeries truncated(int d) const {
        QSeries r(t_);
        for (const auto& [e, c] : c_)
            if (total(e) <= d) r.c_.emplace(e, c);
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.t_->degree == b.t_->degree && a.t_->w == b.t_->w && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    void same(const QSeries& o) const {
        if (t_ != o.t_ && (t_->w != o.t_->w || t_->degree != o.t_->degree))
            throw std::invalid_argument("QSeries: mismatched quantum tori");
    }

    TorusPtr t_;
    Terms c_;
};

/// c_j = v^j / prod_{m=1}^{j} (v^{2m} - 1).
template <class C>
C dilog_coeff(int j) {
    C c = CoeffOps<C>::v_pow(j);
    for (int m = 1; m <= j; ++m) c *= CoeffOps<C>::inv_v_pow_minus_one(2 * m);
    return c;
}

/// E(y^a) truncated at the torus degree.
template <class C>
QSeries<C> qexp(const TorusPtr& t, const DimVec& a) {
    if (static_cast<int>(a.size()) != t->n || !is_nonnegative(a) || is_zero(a))
        throw std::invalid_argument("qexp: class must be nonzero and nonnegative");
    QSeries<C> s = QSeries<C>::one(t);
    const int h = total(a);
    for (int j = 1; j * h <= t->degree; ++j) s.add_term(j * a, dilog_coeff<C>(j));
    return s;
}

}  // namespace dynkin
