#ifndef ZERODIM_QUOTIENT_HPP
#define ZERODIM_QUOTIENT_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "zerodim/bounds.hpp"
#include "zerodim/chow.hpp"
#include "zerodim/linalg.hpp"
#include "zerodim/rur.hpp"
#include "zerodim/upoly.hpp"

namespace zerodim {

// Monomial basis of the quotient algebra of functions on V, built greedily:
// b_1 = 1, then products x_k * b_i accepted whenever the evaluation vector
// on the points of V grows the rank. Candidates are scanned by total degree
// ascending, with the lexicographically larger exponent vector first within
// one degree (so x_1 is tried before x_2).
struct MonomialBasis {
    std::vector<Exponents> monomials;
    long delta = 0;      // max total degree, < D
    RatMat eval_matrix;  // M[k][j] = b_j(zeta_k)
};

namespace detail {

struct CandidateOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline Rat eval_monomial(const Exponents& e, const std::vector<Rat>& pt) {
    Rat v(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= pt[i];
    return v;
}

}  // namespace detail

inline MonomialBasis monomial_basis(const PointVariety& v) {
    const int n = v.n();
    const std::size_t D = v.points().size();
    MonomialBasis basis;
    RatMat echelon;  // reduced rows of accepted evaluation vectors
    std::set<Exponents, detail::CandidateOrder> candidates;
    std::set<Exponents> tried;
    candidates.insert(Exponents(n, 0));

    while (basis.monomials.size() < D) {
        if (candidates.empty()) throw InternalError("monomial basis candidates exhausted");
        Exponents e = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!tried.insert(e).second) continue;

        RatVec row(D);
        for (std::size_t k = 0; k < D; ++k) row[k] = detail::eval_monomial(e, v.points()[k]);
        // reduce against the stored echelon rows
        RatVec red = row;
        for (const RatVec& er : echelon) {
            std::size_t p = 0;
            while (p < D && er[p] == 0) ++p;
            if (p < D && red[p] != 0) {
                Rat f = red[p] / er[p];
                for (std::size_t k = p; k < D; ++k) red[k] -= f * er[k];
            }
        }
        bool independent = std::any_of(red.begin(), red.end(), [](const Rat& x) { return x != 0; });
        if (!independent) continue;

        echelon.push_back(std::move(red));
        std::sort(echelon.begin(), echelon.end(), [](const RatVec& a, const RatVec& b) {
            auto lead = [](const RatVec& r) {
                std::size_t p = 0;
                while (p < r.size() && r[p] == 0) ++p;
                return p;
            };
            return lead(a) < lead(b);
        });
        basis.monomials.push_back(e);
        basis.eval_matrix.push_back(std::move(row));  // row per accepted monomial, transposed below
        for (int k = 0; k < n; ++k) {
            Exponents child = e;
            ++child[k];
            if (!tried.count(child)) candidates.insert(std::move(child));
        }
    }

    // transpose so that eval_matrix[k][j] = b_j(zeta_k)
    RatMat m(D, RatVec(D));
    for (std::size_t j = 0; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k) m[k][j] = basis.eval_matrix[j][k];
    basis.eval_matrix = std::move(m);

    basis.delta = 0;
    for (const Exponents& e : basis.monomials)
        basis.delta = std::max(basis.delta, static_cast<long>(total_degree(e)));
    if (basis.delta >= static_cast<long>(D)) throw InternalError("basis degree delta >= D");
    return basis;
}

// The coefficient vector of omega0' * phi(p) mod omega0 in the power basis
// 1, t, ..., t^{D-1}: phi maps x_i to omega_i * inv(omega0'), with reduction
// modulo omega0 after every ring operation.
inline RatVec umap(const RUR& r, const MPoly& p) {
    const std::size_t D = static_cast<std::size_t>(r.D);
    DenseU m = to_dense(r.omega0);
    DenseU w0d = u_deriv(m);
    DenseU inv = to_dense(univ_modinv(from_dense(w0d), r.omega0));
    std::vector<DenseU> images;  // phi(x_i)
    for (const UPoly& wi : r.omega) images.push_back(u_mod(u_mul(to_dense(wi), inv), m));

    // evaluate p at the images, reducing mod omega0 after each operation
    std::vector<std::vector<DenseU>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(DenseU{Rat(1)});
    auto image_pow = [&](std::size_t i, unsigned e) -> const DenseU& {
        while (powers[i].size() <= e)
            powers[i].push_back(u_mod(u_mul(powers[i].back(), images[i]), m));
        return powers[i][e];
    };
    DenseU acc;
    for (const auto& [e, c] : p.terms()) {
        DenseU t{c};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = u_mod(u_mul(t, image_pow(i, e[i])), m);
        acc = u_add(acc, t);
    }
    acc = u_mod(u_mul(acc, w0d), m);
    RatVec out(D, Rat(0));
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i];
    return out;
}

// Remainder of p modulo the vanishing ideal of V, in the span of the basis:
// pbar = N / a with a = |det(A)| for the cleared integer matrix A whose
// columns are Lambda * U(b), Lambda the least common clearing of all U(b)
// and U(p). Cross-checked against the evaluation-interpolation oracle and
// against the extended-variety Chow columns (integrality route).
struct Remainder {
    Int a;                  // positive common denominator, |det(A)|
    std::vector<Int> N;     // integer numerators over the basis
    MPoly pbar;             // N/a combined over the basis monomials
    std::vector<Rat> column_ratios;  // extension_partial(b) : U(b), recorded
    Int lambda;             // the uniform clearing factor
};

inline Remainder remainder(const PointVariety& v, const RUR& r, const MonomialBasis& basis,
                           const MPoly& p) {
    const std::size_t D = static_cast<std::size_t>(r.D);
    if (basis.monomials.size() != D) throw DomainError("basis size mismatch");
    if (p.nvars() != v.n()) throw DomainError("variable universe mismatch");

    std::vector<RatVec> ucols;
    for (const Exponents& e : basis.monomials)
        ucols.push_back(umap(r, MPoly::monomial(v.n(), e, Rat(1))));
    RatVec urhs = umap(r, p);

    Int lambda = 1;
    for (const RatVec& col : ucols)
        for (const Rat& q : col) lambda = int_lcm(lambda, q.get_den());
    for (const Rat& q : urhs) lambda = int_lcm(lambda, q.get_den());

    IntMat a_mat(D, std::vector<Int>(D));
    std::vector<Int> w(D);
    for (std::size_t j = 0; j < D; ++j)
        for (std::size_t i = 0; i < D; ++i) {
            const Rat& q = ucols[j][i];
            a_mat[i][j] = q.get_num() * (lambda / q.get_den());
        }
    for (std::size_t i = 0; i < D; ++i) w[i] = urhs[i].get_num() * (lambda / urhs[i].get_den());

    Int det = bareiss_det(a_mat);
    if (det == 0) throw InternalError("singular umap matrix over the basis");
    Int a = abs(det);
    int sign = det > 0 ? 1 : -1;

    Remainder res;
    res.lambda = lambda;
    res.a = a;
    res.pbar = MPoly(v.n());
    for (std::size_t j = 0; j < D; ++j) {
        IntMat replaced = a_mat;
        for (std::size_t i = 0; i < D; ++i) replaced[i][j] = w[i];
        Int nj = bareiss_det(replaced) * sign;
        res.pbar.add_term(basis.monomials[j], make_rat(nj, a));
        res.N.push_back(std::move(nj));
    }

    // extended-variety Chow columns: integer by construction, proportional
    // to the rational umap columns; the ratio is recorded
    for (std::size_t j = 0; j < D; ++j) {
        std::vector<Rat> values;
        for (const auto& pt : v.points())
            values.push_back(detail::eval_monomial(basis.monomials[j], pt));
        DenseU ext = to_dense(extension_partial(v, r.u, values));
        ext.resize(D, Rat(0));
        Rat ratio(0);
        for (std::size_t i = 0; i < D; ++i)
            if (ucols[j][i] != 0) {
                ratio = ext[i] / ucols[j][i];
                break;
            }
        if (ratio == 0) throw InternalError("zero umap column for a basis monomial");
        for (std::size_t i = 0; i < D; ++i)
            if (ext[i] != ratio * ucols[j][i])
                throw InternalError("extension column not proportional to umap column");
        res.column_ratios.push_back(std::move(ratio));
    }

    // evaluation-interpolation oracle: solve M y = (p(zeta_k)) exactly; the
    // two routes must agree coefficient by coefficient
    RatVec pvals;
    for (const auto& pt : v.points()) pvals.push_back(p.eval(pt));
    RatVec y = solve_unique(basis.eval_matrix, pvals);
    for (std::size_t j = 0; j < D; ++j)
        if (y[j] != make_rat(res.N[j], res.a))
            throw InternalError("cramer remainder disagrees with evaluation oracle");

    for (std::size_t k = 0; k < v.points().size(); ++k)
        if (res.pbar.eval(v.points()[k]) != pvals[k])
            throw InternalError("remainder does not interpolate p on V");
    return res;
}

// Integer generators vanishing exactly on V, read off the representation:
// g0 = omega0(l(x)), g_i = omega0'(l(x)) x_i - omega_i(l(x)). Zero and
// duplicate polynomials are dropped.
inline std::vector<MPoly> ideal_presentation(const PointVariety& v, const RUR& r) {
    const int n = v.n();
    MPoly ell(n);
    for (int i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        ell.add_term(std::move(e), Rat(r.u[i]));
    }

    auto compose_lin = [&](const UPoly& w) {
        if (w.is_zero()) return MPoly(n);
        return compose(w, {ell});  // ell may be the zero form when D = 1
    };

    std::vector<MPoly> gens;
    gens.push_back(compose_lin(r.omega0));
    MPoly w0d_l = compose_lin(r.omega0.derivative(0));
    for (int i = 0; i < n; ++i)
        gens.push_back(w0d_l * MPoly::variable(n, i) - compose_lin(r.omega[i]));

    std::vector<MPoly> out;
    for (MPoly& g : gens) {
        if (g.is_zero()) continue;
        if (std::find(out.begin(), out.end(), g) != out.end()) continue;
        for (const auto& pt : v.points())
            if (g.eval(pt) != 0) throw InternalError("presentation polynomial does not vanish on V");
        if (!g.all_integer()) throw InternalError("presentation polynomial not integral");
        out.push_back(std::move(g));
    }
    if (out.empty()) throw InternalError("empty ideal presentation");
    // operational radicality certificate: the quotient dimension measured on
    // V equals D
    if (static_cast<long>(monomial_basis(v).monomials.size()) != v.D())
        throw InternalError("quotient dimension != D");
    return out;
}

enum class CertOutcome { Zero, NonZero, Unknown };

// Decides p(zeta) = 0 from a rational bracket approx +/- err, using the
// two-sided value bound B: a nonzero value satisfies |p(zeta)| >= 2^-B, so a
// bracket confined below the threshold certifies zero.
inline CertOutcome certify_value(const SystemProfile& profile, const MPoly& p, const Rat& approx,
                                 const Rat& err, unsigned prec) {
    if (err < 0) throw DomainError("negative error radius");
    long dp = p.is_zero() ? 0 : p.degree();
    LogVal hp = p.is_zero() ? LogVal::zero() : poly_height(p, prec);
    LogVal bound = value_bounds(profile, dp, hp, prec).two_sided;
    Int k = bound.hi().ceil();  // 2^-k <= 2^-B, a conservative threshold
    Rat mag = abs(approx) + err;
    Rat threshold;
    if (k >= 0)
        threshold = make_rat(Int(1), pow2(k.get_ui()));
    else
        threshold = Rat(pow2(Int(-k).get_ui()));
    if (mag < threshold) return CertOutcome::Zero;
    if (abs(approx) - err > 0) return CertOutcome::NonZero;
    return CertOutcome::Unknown;
}

}  // namespace zerodim

#endif
