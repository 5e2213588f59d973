#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynkin/exact/matrix.hpp"
#include "dynkin/exact/number.hpp"

namespace dynkin {

using IntMatrix = Matrix<Int>;

struct SmithResult {
    IntMatrix U, D, V;               // U * A * V = D
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., length min(rows, cols)
    std::size_t rank = 0;
};

namespace detail {

inline void row_op(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= k * m(src, c);
}
inline void col_op(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= k * m(r, src);
}
inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a != b)
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a != b)
        for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace detail

/// Smith normal form with unimodular transforms; the identity U A V = D is
/// checked before returning.
inline SmithResult smith_normal_form(const IntMatrix& A) {
    using namespace detail;
    const std::size_t R = A.rows(), C = A.cols();
    IntMatrix D = A, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
    const std::size_t n = std::min(R, C);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // smallest nonzero entry of the remaining block as pivot
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t r = t; r < R; ++r)
            for (std::size_t c = t; c < C; ++c)
                if (D(r, c) != 0 && (!found || abs(D(r, c)) < abs(D(pr, pc)))) {
                    found = true;
                    pr = r;
                    pc = c;
                }
        if (!found) break;
        swap_rows(D, t, pr);
        swap_rows(U, t, pr);
        swap_cols(D, t, pc);
        swap_cols(V, t, pc);
        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (D(r, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(r, t).get_mpz_t(), D(t, t).get_mpz_t());
                row_op(D, r, t, q);
                row_op(U, r, t, q);
                if (D(r, t) != 0) {
                    swap_rows(D, t, r);
                    swap_rows(U, t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (D(t, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, c).get_mpz_t(), D(t, t).get_mpz_t());
                col_op(D, c, t, q);
                col_op(V, c, t, q);
                if (D(t, c) != 0) {
                    swap_cols(D, t, c);
                    swap_cols(V, t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility of the rest of the block
            std::size_t bad_r = R;
            for (std::size_t r = t + 1; r < R && bad_r == R; ++r)
                for (std::size_t c = t + 1; c < C; ++c)
                    if (D(r, c) % D(t, t) != 0) {
                        bad_r = r;
                        break;
                    }
            if (bad_r == R) break;
            // fold the offending row into row t and retry
            row_op(D, t, bad_r, Int(-1));
            row_op(U, t, bad_r, Int(-1));
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
    SmithResult res{U, D, V, {}, t};
    for (std::size_t i = 0; i < n; ++i) res.invariant_factors.push_back(D(i, i));
    if (!(U * A * V == D)) throw std::logic_error("smith_normal_form: transform check failed");
    return res;
}

}  // namespace dynkin
