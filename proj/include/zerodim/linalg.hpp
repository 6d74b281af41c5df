#ifndef ZERODIM_LINALG_HPP
#define ZERODIM_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "zerodim/scalar.hpp"

namespace zerodim {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntMat = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) determinant with partial pivoting on exact
// magnitude; pivot ties break to the lowest row index.
inline Int bareiss_det(IntMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        Int best = abs(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            Int v = abs(m[i][k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Reduced row echelon form of a rational matrix. Elimination runs
// fraction-free on integer-cleared rows; the reduced form is rationalized in
// a final normalization pass. Deterministic: partial pivot on magnitude,
// ties to the lowest row.
struct Rref {
    RatMat mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

inline Rref rref(const RatMat& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    for (const auto& r : input)
        if (r.size() != cols) throw DomainError("ragged matrix");

    // clear each row to integers (row scaling preserves the row space)
    IntMat m(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (const Rat& q : input[i]) l = int_lcm(l, q.get_den());
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = input[i][j].get_num() * (l / input[i][j].get_den());
    }

    Rref out;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        Int best = abs(m[row][col]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            Int v = abs(m[i][col]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0) continue;
        if (piv != row) std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;

    // back substitution over Q into reduced form
    RatMat r(rows, RatVec(cols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r[i][j] = Rat(m[i][j]);
    for (std::size_t i = out.rank; i-- > 0;) {
        std::size_t pc = out.pivot_cols[i];
        Rat inv = Rat(1) / r[i][pc];
        for (std::size_t j = pc; j < cols; ++j) r[i][j] *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            Rat f = r[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) r[k][j] -= f * r[i][j];
        }
    }
    out.mat = std::move(r);
    return out;
}

// Particular solution of A x = b with all free variables set to zero;
// nullopt when inconsistent.
inline std::optional<RatVec> solve_particular(const RatMat& a, const RatVec& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw DomainError("shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    RatMat aug(rows, RatVec(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw DomainError("shape mismatch");
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    Rref r = rref(aug);
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.pivot_cols[i] == cols) return std::nullopt;  // row 0 ... 0 | 1
    RatVec x(cols, Rat(0));
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.mat[i][cols];
    return x;
}

// Basis of the null space from the reduced echelon form, one vector per free
// column, in column order.
inline std::vector<RatVec> kernel_basis(const RatMat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    Rref r = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of a square nonsingular system.
inline RatVec solve_unique(const RatMat& a, const RatVec& b) {
    auto x = solve_particular(a, b);
    if (!x) throw InternalError("inconsistent square system");
    Rref r = rref(a);
    if (r.rank != a.size()) throw InternalError("singular square system");
    return *x;
}

}  // namespace zerodim

#endif
