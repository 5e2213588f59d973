#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/exact/number.hpp"
#include "dynkin/exact/poly.hpp"
#include "dynkin/exact/ratfun.hpp"

namespace dynkin {

using ZPoly = Poly<Int>;

/// d-th cyclotomic polynomial over Z (cached, thread-safe).
inline const ZPoly& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::mutex mu;
    static std::deque<ZPoly> table{ZPoly()};  // deque: references stay valid while it grows
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= d) {
        const int n = static_cast<int>(table.size());
        ZPoly p = ZPoly::monomial(static_cast<std::size_t>(n)) - ZPoly(Int(1));
        for (int e = 1; e < n; ++e) {
            if (n % e) continue;
            ZPoly q;
            if (!divide_exact_monic(p, table[static_cast<std::size_t>(e)], q))
                throw std::logic_error("cyclotomic: inexact division");
            p = std::move(q);
        }
        table.push_back(std::move(p));
    }
    return table[static_cast<std::size_t>(d)];
}

/// Element of Q(v) whose denominator is a product of cyclotomic polynomials:
/// v^s * N(v) / prod_d Phi_d(v)^{e_d}, with N in Z[v], N(0) != 0, and no
/// Phi_d with e_d > 0 dividing N. The representation is canonical, so
/// equality is structural. Closed under +, -, * and division by v^k.
class QCoeff {
public:
    QCoeff() = default;
    QCoeff(long c) : QCoeff(Int(c)) {}  // NOLINT(google-explicit-constructor)
    QCoeff(const Int& c) : num_(c) {}   // NOLINT(google-explicit-constructor)

    static QCoeff v_pow(long k) {
        QCoeff r(1);
        r.shift_ = k;
        return r;
    }
    /// 1 / (v^n - 1).
    static QCoeff inv_v_pow_minus_one(int n) {
        QCoeff r(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) r.den_[d] = 1;
        return r;
    }

    bool is_zero() const { return num_.is_zero(); }
    long v_shift() const { return shift_; }
    const ZPoly& numerator() const { return num_; }
    const std::map<int, int>& cyclotomic_exponents() const { return den_; }

    friend QCoeff operator*(const QCoeff& a, const QCoeff& b) {
        if (a.is_zero() || b.is_zero()) return QCoeff();
        QCoeff r;
        r.shift_ = a.shift_ + b.shift_;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [d, e] : b.den_) r.den_[d] += e;
        r.normalize();
        return r;
    }

    friend QCoeff operator+(const QCoeff& a, const QCoeff& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        QCoeff r;
        r.shift_ = std::min(a.shift_, b.shift_);
        r.den_ = a.den_;
        for (const auto& [d, e] : b.den_) r.den_[d] = std::max(r.den_[d], e);
        r.num_ = lift(a, r) + lift(b, r);
        r.normalize();
        return r;
    }
    QCoeff operator-() const {
        QCoeff r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend QCoeff operator-(const QCoeff& a, const QCoeff& b) { return a + (-b); }
    QCoeff& operator+=(const QCoeff& o) { return *this = *this + o; }
    QCoeff& operator-=(const QCoeff& o) { return *this = *this - o; }
    QCoeff& operator*=(const QCoeff& o) { return *this = *this * o; }

    /// Inverse of a unit +-v^k; other elements are not invertible in this type.
    QCoeff inv_unit() const {
        if (!den_.empty() || num_.degree() != 0 || (num_.leading() != 1 && num_.leading() != -1))
            throw std::domain_error("QCoeff: inverse of a non-unit");
        QCoeff r = *this;
        r.shift_ = -shift_;
        return r;
    }

    friend bool operator==(const QCoeff& a, const QCoeff& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QCoeff& a, const QCoeff& b) { return !(a == b); }

    RatFun to_ratfun() const {
        if (is_zero()) return RatFun();
        std::vector<Rat> nc;
        for (const auto& c : num_.coeffs()) nc.emplace_back(c);
        QPoly n(std::move(nc)), d(Rat(1));
        for (const auto& [k, e] : den_) {
            std::vector<Rat> cc;
            for (const auto& c : cyclotomic(k).coeffs()) cc.emplace_back(c);
            d *= QPoly(std::move(cc)).pow(static_cast<unsigned>(e));
        }
        if (shift_ >= 0) n = n.shifted_up(static_cast<std::size_t>(shift_));
        else d = d.shifted_up(static_cast<std::size_t>(-shift_));
        return RatFun(n, d);
    }

    Rat eval_at(const Rat& x) const {
        if (is_zero()) return Rat(0);
        Rat den(1);
        for (const auto& [k, e] : den_) {
            Rat f = cyclotomic(k).evaluate(x);
            for (int i = 0; i < e; ++i) den *= f;
        }
        if (den == 0) throw std::domain_error("QCoeff: evaluation at a pole");
        Rat val = num_.evaluate(x) / den;
        if (shift_ != 0) {
            if (x == 0) throw std::domain_error("QCoeff: evaluation at a pole");
            Rat p(1);
            for (long i = 0; i < (shift_ < 0 ? -shift_ : shift_); ++i) p *= x;
            if (shift_ > 0) val *= p;
            else val /= p;
        }
        return val;
    }

    std::string str() const { return to_ratfun().str(); }

private:
    static ZPoly lift(const QCoeff& a, const QCoeff& target) {
        ZPoly n = a.num_.shifted_up(static_cast<std::size_t>(a.shift_ - target.shift_));
        for (const auto& [d, e] : target.den_) {
            auto it = a.den_.find(d);
            const int have = it == a.den_.end() ? 0 : it->second;
            if (e > have) n *= cyclotomic(d).pow(static_cast<unsigned>(e - have));
        }
        return n;
    }

    void normalize() {
        if (num_.is_zero()) {
            shift_ = 0;
            den_.clear();
            return;
        }
        const std::size_t val = num_.valuation();
        if (val) {
            num_ = num_.shifted_down(val);
            shift_ += static_cast<long>(val);
        }
        for (auto it = den_.begin(); it != den_.end();) {
            ZPoly q;
            while (it->second > 0 && divide_exact_monic(num_, cyclotomic(it->first), q)) {
                num_ = std::move(q);
                --it->second;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
    }

    long shift_ = 0;
    ZPoly num_;
    std::map<int, int> den_;
};

inline std::ostream& operator<<(std::ostream& os, const QCoeff& c) { return os << c.str(); }

}  // namespace dynkin
