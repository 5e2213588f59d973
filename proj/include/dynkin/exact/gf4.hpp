#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace dynkin {

/// The field with four elements {0, 1, w, w+1}, w^2 = w + 1.
///
/// Elements are encoded by their coordinates in the basis (1, w): bit 0 is the
/// constant term and bit 1 the coefficient of w. Addition is XOR.
class GF4 {
public:
    static constexpr int order = 4;

    constexpr GF4() = default;
    /// Integers map through the prime field: only the parity matters.
    constexpr GF4(int v) : code_(static_cast<std::uint8_t>(v & 1)) {}  // NOLINT(google-explicit-constructor)

    static constexpr GF4 from_code(int code) {
        GF4 g;
        g.code_ = static_cast<std::uint8_t>(code & 3);
        return g;
    }
    static constexpr GF4 w() { return from_code(2); }

    constexpr int code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr GF4 operator+(GF4 a, GF4 b) { return from_code(a.code_ ^ b.code_); }
    friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
    constexpr GF4 operator-() const { return *this; }

    friend constexpr GF4 operator*(GF4 a, GF4 b) { return from_code(kMul[a.code_][b.code_]); }

    friend GF4 operator/(GF4 a, GF4 b) {
        if (b.is_zero()) throw std::domain_error("GF4: division by zero");
        return a * b.inverse();
    }

    GF4 inverse() const {
        if (is_zero()) throw std::domain_error("GF4: inverse of zero");
        return from_code(kInv[code_]);
    }

    GF4& operator+=(GF4 o) { return *this = *this + o; }
    GF4& operator-=(GF4 o) { return *this = *this - o; }
    GF4& operator*=(GF4 o) { return *this = *this * o; }
    GF4& operator/=(GF4 o) { return *this = *this / o; }

    friend constexpr bool operator==(GF4 a, GF4 b) { return a.code_ == b.code_; }
    friend constexpr bool operator!=(GF4 a, GF4 b) { return a.code_ != b.code_; }

    friend std::ostream& operator<<(std::ostream& os, GF4 g) {
        static constexpr const char* names[] = {"0", "1", "w", "w+1"};
        return os << names[g.code_];
    }

    static constexpr std::array<GF4, 4> elements() {
        return {from_code(0), from_code(1), from_code(2), from_code(3)};
    }

private:
    // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};

    std::uint8_t code_ = 0;
};

}  // namespace dynkin
