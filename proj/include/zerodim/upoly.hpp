#ifndef ZERODIM_UPOLY_HPP
#define ZERODIM_UPOLY_HPP

#include <utility>
#include <vector>

#include "zerodim/mpoly.hpp"
#include "zerodim/scalar.hpp"

namespace zerodim {

// Dense univariate representation, coefficients low-to-high, no trailing
// zeros; the zero polynomial is the empty vector.
using DenseU = std::vector<Rat>;

inline void u_normalize(DenseU& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline DenseU to_dense(const UPoly& u) {
    if (u.nvars() != 1) throw DomainError("expected a univariate polynomial");
    DenseU p;
    for (const auto& [e, c] : u.terms()) {
        if (p.size() <= e[0]) p.resize(e[0] + 1, Rat(0));
        p[e[0]] = c;
    }
    return p;
}

inline UPoly from_dense(const DenseU& p) {
    UPoly u(1);
    for (std::size_t i = 0; i < p.size(); ++i) u.add_term(Exponents{static_cast<unsigned>(i)}, p[i]);
    return u;
}

inline long u_deg(const DenseU& p) { return static_cast<long>(p.size()) - 1; }  // -1 for zero

inline DenseU u_add(const DenseU& a, const DenseU& b) {
    DenseU r = a;
    if (r.size() < b.size()) r.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    u_normalize(r);
    return r;
}

inline DenseU u_scale(const DenseU& a, const Rat& c) {
    if (c == 0) return {};
    DenseU r = a;
    for (Rat& x : r) x *= c;
    return r;
}

inline DenseU u_sub(const DenseU& a, const DenseU& b) { return u_add(a, u_scale(b, Rat(-1))); }

inline DenseU u_mul(const DenseU& a, const DenseU& b) {
    if (a.empty() || b.empty()) return {};
    DenseU r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    u_normalize(r);
    return r;
}

inline DenseU u_deriv(const DenseU& a) {
    if (a.size() <= 1) return {};
    DenseU r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<unsigned long>(i));
    u_normalize(r);
    return r;
}

// Euclidean division over Q, b != 0.
inline std::pair<DenseU, DenseU> u_divrem(DenseU a, const DenseU& b) {
    if (b.empty()) throw DomainError("univariate division by zero");
    DenseU q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        Rat f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        u_normalize(a);
        if (a.size() < b.size()) break;
        // a.back() is now guaranteed to have dropped degree; loop continues
    }
    u_normalize(q);
    return {std::move(q), std::move(a)};
}

inline DenseU u_mod(const DenseU& a, const DenseU& m) { return u_divrem(a, m).second; }

inline DenseU u_monic(DenseU a) {
    if (a.empty()) return a;
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
    return a;
}

inline DenseU u_gcd(DenseU a, DenseU b) {
    while (!b.empty()) {
        DenseU r = u_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return u_monic(std::move(a));
}

// Extended gcd: g = s*a + t*b with g monic (or zero).
struct UExtGcd {
    DenseU g, s, t;
};

inline UExtGcd u_ext_gcd(const DenseU& a, const DenseU& b) {
    DenseU r0 = a, r1 = b;
    DenseU s0 = {Rat(1)}, s1 = {};
    DenseU t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = u_divrem(r0, r1);
        DenseU s2 = u_sub(s0, u_mul(q, s1));
        DenseU t2 = u_sub(t0, u_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        r0 = u_monic(std::move(r0));
        s0 = u_scale(s0, Rat(1) / lead);
        t0 = u_scale(t0, Rat(1) / lead);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

// True iff gcd(p, p') is constant.
inline bool univ_squarefree(const UPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree test of zero polynomial");
    DenseU d = to_dense(p);
    DenseU g = u_gcd(d, u_deriv(d));
    return u_deg(g) == 0;
}

// q with p*q = 1 mod m, deg(q) < deg(m).
inline UPoly univ_modinv(const UPoly& p, const UPoly& m) {
    DenseU dm = to_dense(m);
    if (u_deg(dm) < 1) throw DomainError("modulus must have degree >= 1");
    DenseU dp = u_mod(to_dense(p), dm);
    UExtGcd eg = u_ext_gcd(dp, dm);
    if (u_deg(eg.g) != 0) throw DomainError("not invertible modulo m");
    return from_dense(u_mod(eg.s, dm));
}

inline Rat u_eval(const DenseU& p, const Rat& x) {
    Rat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace zerodim

#endif
