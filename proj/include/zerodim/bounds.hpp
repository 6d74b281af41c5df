#ifndef ZERODIM_BOUNDS_HPP
#define ZERODIM_BOUNDS_HPP

#include <algorithm>
#include <vector>

#include "zerodim/logval.hpp"
#include "zerodim/profile.hpp"
#include "zerodim/scalar.hpp"

namespace zerodim {

// Closed-form evaluation of the degree/height bounds as certified LogVals or
// exact integers. Division-prone terms like (h_s/d_s) * d_1...d_s are
// rewritten as h_s * (d_1...d_s / d_s), an exact integer scaling, so every
// formula is a sum of nonnegative-integer multiples of certified logs.

// deg(V) <= d_1 ... d_{n-1} d_s over the sorted non-distinguished degrees;
// when s-1 < n-1, all s-1 factors are used (the profile is underdetermined
// and callers should surface a warning).
inline Int bezout_degree_bound(const SystemProfile& p) {
    auto other = p.sorted_other_degs();
    std::size_t m = std::min<std::size_t>(p.n - 1, other.size());
    Int prod = 1;
    for (std::size_t j = 0; j < m; ++j) prod *= other[j];
    return prod * p.ds();
}

namespace detail {

// (h_s/d_s + sum_{j<=m} h/d_j + 2n log2(n+1)) * d_1...d_m * d_s, with the
// divisions folded into integer cofactors of the product.
inline LogVal abi_sharp_for(const SystemProfile& p, unsigned prec) {
    auto other = p.sorted_other_degs();
    std::size_t m = std::min<std::size_t>(p.n - 1, other.size());
    Int prod_others = 1;  // d_1 ... d_m
    for (std::size_t j = 0; j < m; ++j) prod_others *= other[j];
    Int full = prod_others * p.ds();
    LogVal val = p.hs() * prod_others;  // (h_s/d_s) * full
    LogVal h = p.h_other();
    for (std::size_t j = 0; j < m; ++j) val = val + h * Int(full / other[j]);
    val = val + log2_interval(Int(p.n + 1), prec) * Int(2 * p.n) * full;
    return val;
}

}  // namespace detail

// Measures a profile from integer polynomials. When no distinguished index
// is pinned, picks the one minimizing the sharp arithmetic-Bezout value
// (exact dyadic midpoint comparison, ties to the lowest index).
inline SystemProfile make_profile(const std::vector<MPoly>& polys, unsigned prec,
                                  std::optional<int> distinguished = std::nullopt) {
    if (polys.empty()) throw DomainError("profile of an empty system");
    SystemProfile p;
    p.n = polys[0].nvars();
    p.s = static_cast<int>(polys.size());
    for (const MPoly& f : polys) {
        if (f.nvars() != p.n)
            throw DomainError("system polynomials must share one variable universe");
        p.degs.push_back(f.degree());
        p.heights.push_back(poly_height(f, prec));
    }
    if (distinguished) {
        if (*distinguished < 0 || *distinguished >= p.s)
            throw DomainError("distinguished index out of range");
        p.distinguished = *distinguished;
        return p;
    }
    p.distinguished = 0;
    Dyadic best;
    bool first = true;
    for (int j = 0; j < p.s; ++j) {
        SystemProfile q = p;
        q.distinguished = j;
        Dyadic mid = detail::abi_sharp_for(q, prec).midpoint_times2();
        if (first || mid < best) {
            best = mid;
            p.distinguished = j;
            first = false;
        }
    }
    return p;
}

struct AbiBounds {
    LogVal sharp;   // first displayed form
    LogVal coarse;  // second displayed form
};

// h(V) <= sharp <= coarse. The sharp <= coarse ordering is certified by the
// coefficient-wise nonnegative difference (the two forms share correlated
// terms, so interval comparison alone cannot resolve the equality cases).
inline AbiBounds arith_bezout_height_bound(const SystemProfile& p, unsigned prec) {
    const long n = p.n;
    AbiBounds b;
    b.sharp = detail::abi_sharp_for(p, prec);

    const long d = p.d_other();
    Int dn1 = int_pow(d, n - 1);  // d^{n-1}
    LogVal log_n1 = log2_interval(Int(n + 1), prec);
    b.coarse = p.hs() * dn1 + log_n1 * Int(2 * n) * (dn1 * p.ds());
    if (n >= 2) b.coarse = b.coarse + p.h_other() * Int((n - 1) * int_pow(d, n - 2) * p.ds());

    // certified difference coarse - sharp = sum of (nonnegative LogVal) *
    // (nonnegative integer) terms; its lower endpoint must be >= 0
    auto other = p.sorted_other_degs();
    std::size_t m = std::min<std::size_t>(n - 1, other.size());
    Int prod_others = 1;
    for (std::size_t j = 0; j < m; ++j) prod_others *= other[j];
    Int full = prod_others * p.ds();
    LogVal diff = p.hs() * Int(dn1 - prod_others);
    Int h_coef = n >= 2 ? Int((n - 1) * int_pow(d, n - 2) * p.ds()) : Int(0);
    for (std::size_t j = 0; j < m; ++j) h_coef -= full / other[j];
    diff = diff + p.h_other() * h_coef;
    diff = diff + log_n1 * Int(2 * n) * Int(dn1 * p.ds() - full);
    if (diff.lo().sign() < 0) throw InternalError("sharp bound exceeds coarse bound");
    return b;
}

struct RootBounds {
    LogVal upper;        // log|zeta_i| <= upper
    LogVal coord_lower;  // |log|zeta_i|| <= coord_lower when zeta_i != 0
    LogVal separation;   // |log|zeta_i - xi_i|| <= separation when distinct
};

// Uniform-profile root bounds: d and h are the maxima over all input
// polynomials for this formula family.
inline RootBounds root_bounds(const SystemProfile& p, unsigned prec) {
    const long n = p.n;
    const long d = p.d_max();
    LogVal h = p.h_max();
    Int dn1 = int_pow(d, n - 1), dn = int_pow(d, n);
    Int d2n1 = int_pow(d, 2 * n - 1), d2n = int_pow(d, 2 * n);
    RootBounds b;
    b.upper = h * Int(n * dn1) + log2_interval(Int(n + 1), prec) * Int(2 * n) * dn;
    b.coord_lower = h * Int(2 * n * dn1) + log2_interval(Int(n + 2), prec) * Int(4 * (n + 1)) * dn;
    b.separation = h * (Int(4 * n) * d2n1) +
                   log2_interval(Int(2 * n + 2), prec) * Int(4 * (2 * n + 1)) * d2n;
    return b;
}

struct ValueBounds {
    LogVal upper;       // log|p(zeta)| <= upper
    LogVal two_sided;   // |log|p(zeta)|| <= two_sided when p(zeta) != 0
    LogVal difference;  // |log|p(zeta) - p(xi)|| <= difference when distinct
};

inline ValueBounds value_bounds(const SystemProfile& p, long dp, const LogVal& hp,
                                unsigned prec) {
    if (dp < 0) throw DomainError("negative test-polynomial degree");
    const long n = p.n;
    const long d = p.d_max();
    LogVal h = p.h_max();
    Int dn1 = int_pow(d, n - 1), dn = int_pow(d, n);
    Int d2n1 = int_pow(d, 2 * n - 1), d2n = int_pow(d, 2 * n);
    LogVal log_n1 = log2_interval(Int(n + 1), prec);
    LogVal log_n2 = log2_interval(Int(n + 2), prec);
    LogVal log_2n2 = log2_interval(Int(2 * n + 2), prec);
    ValueBounds b;
    b.upper = hp + h * Int(n * dn1 * dp) + log_n1 * Int(3 * n) * (dn * dp);
    b.two_sided = hp * dn + h * Int(2 * n * dn1 * dp) + log_n2 * Int(4 * (n + 1)) * (dn * dp);
    b.difference =
        hp * d2n + h * (Int(4 * n) * d2n1 * dp) + log_2n2 * Int(4 * (2 * n + 1)) * (d2n * dp);
    return b;
}

struct NssBounds {
    Int degree;     // deg(g_i f_i) <= degree
    LogVal height;  // h(a), h(g_i) + h(f_i) <= height
};

inline NssBounds nss_bounds(const SystemProfile& p, unsigned prec) {
    const long n = p.n;
    auto other = p.sorted_other_degs();
    const long r = std::min<long>(p.r(), static_cast<long>(other.size()));
    Int prod_r = 1;
    for (long k = 0; k < r; ++k) prod_r *= other[k];
    Int full = prod_r * p.ds();
    NssBounds b;
    b.degree = full;
    LogVal val = p.hs() * prod_r;
    LogVal h = p.h_other();
    for (long k = 0; k < r; ++k) val = val + h * Int(full / other[k]);
    long excess = std::max<long>(1, p.s - n);
    val = val + log2_interval(Int(n + 3), prec) * Int(6 * n + 9) * full;
    val = val + log2_interval(Int(excess), prec) * Int(3 * n) * full;
    b.height = val;
    return b;
}

// h(omega_i) <= d^{n-1} h_s + (n-1) d^{n-2} d_s h + 2n log2(n+1) d^{n-1} d_s
//               + 4 D log2((n+1) D).
inline LogVal shape_height_bound(const SystemProfile& p, long D, unsigned prec) {
    if (D < 1) throw DomainError("variety degree must be >= 1");
    const long n = p.n;
    const long d = p.d_other();
    Int dn1 = int_pow(d, n - 1);
    LogVal v = p.hs() * dn1;
    if (n >= 2) v = v + p.h_other() * Int((n - 1) * int_pow(d, n - 2) * p.ds());
    v = v + log2_interval(Int(n + 1), prec) * Int(2 * n) * (dn1 * p.ds());
    v = v + log2_interval(Int((n + 1) * D), prec) * Int(4 * D);
    return v;
}

struct UmapBounds {
    LogVal monomial;  // h(U(x^alpha)) <= monomial  (meaningful for |alpha| >= 1)
    LogVal poly;      // h(U(p)) <= poly
};

inline UmapBounds umap_bounds(const SystemProfile& p, long alpha_norm, long dp, const LogVal& hp,
                              unsigned prec) {
    if (alpha_norm < 0) throw DomainError("negative monomial degree");
    const long n = p.n;
    const long d = p.d_max();
    LogVal h = p.h_max();
    Int dn1 = int_pow(d, n - 1), dn = int_pow(d, n);
    LogVal logq = log2_interval(Int((n + 2) * d), prec);
    UmapBounds b;
    b.monomial = h * Int(n * dn1 * alpha_norm) + logq * Int(4 * n) * (dn * alpha_norm);
    b.poly = hp + h * Int(n * dn1 * dp) + logq * Int(5 * n) * (dn * dp);
    return b;
}

struct RemainderBounds {
    LogVal denominator;  // h(a)
    LogVal numerator;    // h(N(p))
};

inline RemainderBounds remainder_bounds(const SystemProfile& p, long delta, long dp,
                                        const LogVal& hp, unsigned prec) {
    if (delta < 0) throw DomainError("negative basis degree");
    const long n = p.n;
    const long d = p.d_max();
    LogVal h = p.h_max();
    Int dn1 = int_pow(d, n - 1), dn = int_pow(d, n);
    Int d2n1 = int_pow(d, 2 * n - 1), d2n = int_pow(d, 2 * n);
    LogVal logq = log2_interval(Int((n + 2) * d), prec);
    RemainderBounds b;
    b.denominator = h * (Int(n * delta) * d2n1) + logq * Int(5 * n) * (d2n * delta);
    Int mixed = Int(dp) + dn * delta;  // d_p + d^n delta
    b.numerator = hp + h * (Int(n) * dn1 * mixed) + logq * Int(5 * n) * (dn * mixed);
    return b;
}

struct PerronBounds {
    Int weighted_degree;  // alpha . d <= weighted_degree
    LogVal height;        // h(c_alpha) + alpha . h <= height
};

inline PerronBounds perron_bounds(const std::vector<long>& degs,
                                  const std::vector<LogVal>& heights, unsigned prec) {
    if (degs.size() != heights.size() || degs.empty())
        throw DomainError("perron bound needs matching degree/height lists");
    const long n = static_cast<long>(degs.size()) - 1;
    Int prod = 1;
    for (long d : degs) {
        if (d < 1) throw DomainError("perron bound needs degrees >= 1");
        prod *= d;
    }
    PerronBounds b;
    b.weighted_degree = prod;
    LogVal v = LogVal::zero();
    for (std::size_t i = 0; i < degs.size(); ++i) v = v + heights[i] * Int(prod / degs[i]);
    v = v + log2_interval(Int(2 * n + 8), prec) * Int(n + 2) * prod;
    b.height = v;
    return b;
}

}  // namespace zerodim

#endif
