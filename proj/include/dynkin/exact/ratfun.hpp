#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dynkin/exact/number.hpp"
#include "dynkin/exact/poly.hpp"

namespace dynkin {

using QPoly = Poly<Rat>;

/// Element of Q(v), kept as num/den with den monic and gcd(num, den) = 1.
class RatFun {
public:
    RatFun() : den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(Rat(c)) {}               // NOLINT(google-explicit-constructor)
    RatFun(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun v() { return RatFun(QPoly::v()); }
    /// v^k for any integer k.
    static RatFun v_pow(long k) {
        if (k >= 0) return RatFun(QPoly::monomial(static_cast<std::size_t>(k)));
        return RatFun(QPoly(Rat(1)), QPoly::monomial(static_cast<std::size_t>(-k)));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFun inv() const {
        if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun pow(long e) const {
        if (e < 0) return inv().pow(-e);
        return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    Rat eval_at(const Rat& x) const {
        const Rat d = den_.evaluate(x);
        if (d == 0) throw std::domain_error("RatFun: evaluation at a pole v = " + x.get_str());
        return num_.evaluate(x) / d;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const;
    static RatFun parse(const std::string& text);

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Rat(1));
            return;
        }
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rat lead = den_.leading();
        if (lead != 1) {
            const Rat s = Rat(1) / lead;
            num_ = s * num_;
            den_ = s * den_;
        }
    }

    QPoly num_;
    QPoly den_;
};

namespace detail {

inline std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (c < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << 'v';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

inline int term_count(const QPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

class RatFunParser {
public:
    explicit RatFunParser(std::string text) : s_(std::move(text)) {}

    RatFun run() {
        RatFun r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("RatFun parse error at " + std::to_string(pos_) + " in '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    RatFun term() {
        RatFun acc = unary();
        for (;;) {
            if (eat('*')) acc *= unary();
            else if (eat('/')) {
                RatFun d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else return acc;
        }
    }
    RatFun unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RatFun power() {
        RatFun base = primary();
        if (!eat('^')) return base;
        bool neg = false;
        if (eat('-')) neg = true;
        else if (eat('(')) {
            neg = eat('-');
            long e = integer();
            if (!eat(')')) fail("expected ')'");
            return base.pow(neg ? -e : e);
        }
        long e = integer();
        return base.pow(neg ? -e : e);
    }
    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stol(s_.substr(start, pos_ - start));
    }
    RatFun primary() {
        skip();
        if (eat('(')) {
            RatFun r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (eat('v')) return RatFun::v();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFun(Rat(Int(s_.substr(start, pos_ - start))));
        }
        fail("unexpected character");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Expanded canonical form, e.g. "v^3/(v^4-2*v^2+1)".
inline std::string RatFun::str() const {
    std::string n = detail::poly_str(num_);
    if (den_.degree() == 0) return n;
    if (detail::term_count(num_) > 1) n = "(" + n + ")";
    std::string d = detail::poly_str(den_);
    if (detail::term_count(den_) > 1) d = "(" + d + ")";
    return n + "/" + d;
}

inline RatFun RatFun::parse(const std::string& text) { return detail::RatFunParser(text).run(); }

inline std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

}  // namespace dynkin
