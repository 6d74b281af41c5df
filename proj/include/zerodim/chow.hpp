#ifndef ZERODIM_CHOW_HPP
#define ZERODIM_CHOW_HPP

#include <vector>

#include "zerodim/mpoly.hpp"
#include "zerodim/scalar.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

// The primitive Chow form of a finite rational-point variety:
// Ch_V(U) = c * prod_{zeta in V} (U_0 + zeta_1 U_1 + ... + zeta_n U_n),
// expanded as the product of the primitive integer linear forms
// c_zeta U_0 + c_{zeta,1} U_1 + ... Homogeneous of degree D, content 1,
// positive leading coefficient; c is the product of the point denominators.
struct ChowForm {
    int n;
    long D;
    MPoly poly;  // n+1 variables U_0 ... U_n
    Int c;
};

inline ChowForm chow_form(const PointVariety& v) {
    const int m = v.n() + 1;
    MPoly prod = MPoly::constant(m, Rat(1));
    Int c = 1;
    for (const auto& prim : v.primitive_vectors()) {
        MPoly lin(m);
        for (int i = 0; i < m; ++i) {
            Exponents e(m, 0);
            e[i] = 1;
            lin.add_term(std::move(e), Rat(prim[i]));
        }
        prod = prod * lin;
        c *= prim[0];
    }
    // Gauss: a product of primitive forms is primitive. Assert, never divide.
    PrimitivePart pp = primitive_part(prod);
    if (pp.content != 1) throw InternalError("chow form is not primitive");
    for (const auto& [e, q] : prod.terms())
        if (static_cast<long>(total_degree(e)) != v.D())
            throw InternalError("chow form is not homogeneous of degree D");
    return {v.n(), v.D(), std::move(prod), std::move(c)};
}

// Linear form value l(zeta) = sum u_i zeta_i.
inline Rat linform_value(const std::vector<Int>& u, const std::vector<Rat>& point) {
    if (u.size() != point.size()) throw DomainError("linear form dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += Rat(u[i]) * point[i];
    return s;
}

// d/dU_{n+1} of the primitive Chow form of the extended variety
// {(zeta, w_zeta)}, specialized at (t, -u, 0). With per-point extended
// denominators c'_zeta = lcm(c_zeta, den(w_zeta)) this equals
//   sum_zeta c'_zeta w_zeta * prod_{xi != zeta} (c'_xi t - c'_xi l(xi)),
// an integer univariate polynomial of degree < D.
inline UPoly extension_partial(const PointVariety& v, const std::vector<Int>& u,
                               const std::vector<Rat>& w) {
    const std::size_t D = v.points().size();
    if (w.size() != D) throw DomainError("extension value count mismatch");
    std::vector<Int> cext(D), wval(D);
    std::vector<Int> lval(D);  // c'_xi * l(xi), an integer
    for (std::size_t k = 0; k < D; ++k) {
        const auto& prim = v.primitive_vectors()[k];
        Int c = int_lcm(prim[0], w[k].get_den());
        cext[k] = c;
        wval[k] = w[k].get_num() * (c / w[k].get_den());
        // primitivity of the extended vector (c', c' zeta, c' w)
        Int g = c;
        for (std::size_t i = 1; i < prim.size(); ++i) g = int_gcd(g, prim[i] * (c / prim[0]));
        g = int_gcd(g, wval[k]);
        if (g != 1) throw InternalError("extended primitive vector with gcd != 1");
        Rat l = linform_value(u, v.points()[k]);
        Rat cl = Rat(c) * l;
        if (!is_integer(cl)) throw InternalError("c * l(zeta) not integral");
        lval[k] = cl.get_num();
    }
    UPoly sum(1);
    for (std::size_t k = 0; k < D; ++k) {
        // coefficient of U_{n+1} in the factor of zeta, times the product
        // of the substituted factors of the other points
        UPoly term = MPoly::constant(1, Rat(wval[k]));
        for (std::size_t j = 0; j < D; ++j) {
            if (j == k) continue;
            UPoly lin(1);
            lin.add_term(Exponents{1}, Rat(cext[j]));
            lin.add_term(Exponents{0}, Rat(-lval[j]));
            term = term * lin;
        }
        sum = sum + term;
    }
    if (!sum.all_integer()) throw InternalError("extension partial not integral");
    return sum;
}

}  // namespace zerodim

#endif
