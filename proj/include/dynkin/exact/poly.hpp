#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynkin {

/// Dense univariate polynomial in `v` over a commutative ring `R`.
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has no coefficients and `degree()` returns -1 for it.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const R& constant) {  // NOLINT(google-explicit-constructor)
        if (!(constant == R(0))) c_.push_back(constant);
    }

    static Poly monomial(std::size_t power, const R& coeff = R(1)) {
        std::vector<R> c(power + 1, R(0));
        c[power] = coeff;
        return Poly(std::move(c));
    }
    static Poly v() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Multiplicity of v as a factor (0 for the zero polynomial).
    std::size_t valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == R(0)) ++k;
        return c_.empty() ? 0 : k;
    }

    Poly shifted_down(std::size_t k) const {
        if (k > valuation()) throw std::domain_error("Poly::shifted_down: not divisible by v^k");
        return Poly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }
    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<R> c(k, R(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    template <class S>
    S evaluate(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        Poly p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const R& s, const Poly& p) {
        if (s == R(0)) return Poly();
        Poly q = p;
        for (auto& x : q.c_) x *= s;
        return q;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const {
        Poly result(R(1)), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;
};

/// Division with remainder over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> rem = a.coeffs();
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
    const F lead_inv = F(1) / b.leading();
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const F q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == F(0)) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return (F(1) / p.leading()) * p;
}

/// Monic greatest common divisor over a field (gcd(0, 0) = 0).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Exact division by a monic divisor over a ring; returns false when the
/// remainder is nonzero (and leaves `quotient` unspecified).
template <class R>
bool divide_exact_monic(const Poly<R>& a, const Poly<R>& monic, Poly<R>& quotient) {
    if (monic.is_zero() || !(monic.leading() == R(1))) throw std::invalid_argument("divide_exact_monic: divisor not monic");
    if (a.is_zero()) {
        quotient = Poly<R>();
        return true;
    }
    if (a.degree() < monic.degree()) return false;
    std::vector<R> rem = a.coeffs();
    std::vector<R> quo(static_cast<std::size_t>(a.degree() - monic.degree() + 1), R(0));
    const auto& mc = monic.coeffs();
    const auto md = static_cast<std::size_t>(monic.degree());
    for (int k = a.degree() - monic.degree(); k >= 0; --k) {
        const auto ku = static_cast<std::size_t>(k);
        const R q = rem[ku + md];
        quo[ku] = q;
        if (q == R(0)) continue;
        for (std::size_t j = 0; j < mc.size(); ++j) rem[ku + j] -= q * mc[j];
    }
    for (std::size_t j = 0; j < md; ++j)
        if (!(rem[j] == R(0))) return false;
    quotient = Poly<R>(std::move(quo));
    return true;
}

}  // namespace dynkin
