#ifndef ZERODIM_RUR_HPP
#define ZERODIM_RUR_HPP

#include <set>
#include <vector>

#include "zerodim/chow.hpp"
#include "zerodim/upoly.hpp"

namespace zerodim {

// Rational univariate representation of a finite rational-point variety:
// separating integer form l(x) = u.x, squarefree omega0 of degree D, and
// omega_1..omega_n of degree < D with zeta_i = omega_i(l(zeta)) /
// omega0'(l(zeta)) at every point.
struct RUR {
    std::vector<Int> u;
    UPoly omega0;
    std::vector<UPoly> omega;  // omega_1 ... omega_n
    long D = 0;
};

// First vector in the lexicographic grid {0..D'}^n, D' = D(D-1)/2, whose
// linear form takes distinct values at the points. Zero vector for D = 1.
inline std::vector<Int> find_separating_form(const PointVariety& v) {
    const int n = v.n();
    const long D = v.D();
    std::vector<Int> u(n, 0);
    if (D == 1) return u;
    const long grid = D * (D - 1) / 2;
    while (true) {
        std::set<Rat> values;
        bool ok = true;
        for (const auto& p : v.points()) {
            if (!values.insert(linform_value(u, p)).second) {
                ok = false;
                break;
            }
        }
        if (ok) return u;
        // advance lexicographically, last coordinate fastest
        int i = n - 1;
        while (i >= 0 && u[i] == grid) u[i--] = 0;
        if (i < 0) throw InternalError("separating grid exhausted");
        u[i] += 1;
    }
}

// omega0(t) = Ch_V(t, -u); omega_i(t) = (d/dU_i Ch_V)(t, -u). The partial is
// taken first, then U_0 -> t and U_j -> -u_j are substituted; this is the
// convention that satisfies the per-point identity above (validated in the
// test suite against a brute-force two-point instance).
inline RUR build_rur(const PointVariety& v, const std::vector<Int>& u) {
    const int n = v.n();
    if (static_cast<int>(u.size()) != n) throw DomainError("separating form dimension mismatch");
    ChowForm ch = chow_form(v);
    std::vector<Rat> tail(n);
    for (int i = 0; i < n; ++i) tail[i] = Rat(-u[i]);

    RUR r;
    r.u = u;
    r.D = ch.D;
    r.omega0 = specialize_tail(ch.poly, tail);
    if (r.omega0.degree() != ch.D) throw InternalError("omega0 degree != D");
    if (!univ_squarefree(r.omega0)) throw DomainError("omega0 not squarefree");

    UPoly w0d = r.omega0.derivative(0);
    for (int i = 1; i <= n; ++i) {
        UPoly wi = specialize_tail(ch.poly.derivative(i), tail);
        if (!wi.is_zero() && wi.degree() >= ch.D) throw InternalError("omega_i degree >= D");
        r.omega.push_back(std::move(wi));
    }

    // the defining identity, checked exactly at every point
    for (const auto& p : v.points()) {
        Rat t = linform_value(u, p);
        Rat den = w0d.eval({t});
        if (den == 0) throw InternalError("omega0' vanishes at a root");
        if (r.omega0.eval({t}) != 0) throw InternalError("omega0 does not vanish at l(zeta)");
        for (int i = 0; i < n; ++i)
            if (r.omega[i].eval({t}) / den != p[i])
                throw InternalError("coordinate identity violated in RUR");
    }
    return r;
}

}  // namespace zerodim

#endif
