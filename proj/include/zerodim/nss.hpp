#ifndef ZERODIM_NSS_HPP
#define ZERODIM_NSS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zerodim/linalg.hpp"
#include "zerodim/mpoly.hpp"

namespace zerodim {

// Certificate a = g_1 f_1 + ... + g_s f_s with a a positive integer and
// integer cofactors; delta is the degree level deg(g_i f_i) <= delta at
// which it was found.
struct BezoutIdentity {
    Int a;
    std::vector<MPoly> cofactors;
    long delta = 0;
};

namespace detail {

inline void enumerate_monomials(int nvars, long max_deg, std::vector<Exponents>& out) {
    Exponents e(nvars, 0);
    // fixed deterministic order: lexicographic over exponent vectors
    struct Rec {
        int nvars;
        std::vector<Exponents>& out;
        Exponents& e;
        void go(int pos, long budget) {
            if (pos == nvars) {
                out.push_back(e);
                return;
            }
            for (long k = 0; k <= budget; ++k) {
                e[pos] = static_cast<unsigned>(k);
                go(pos + 1, budget - k);
            }
            e[pos] = 0;
        }
    } rec{nvars, out, e};
    rec.go(0, max_deg);
}

}  // namespace detail

inline bool verify_identity(const BezoutIdentity& id, const std::vector<MPoly>& f) {
    if (id.cofactors.size() != f.size()) return false;
    if (f.empty() || id.a <= 0) return false;
    MPoly sum(f[0].nvars());
    for (std::size_t i = 0; i < f.size(); ++i) sum = sum + id.cofactors[i] * f[i];
    return sum == MPoly::constant(f[0].nvars(), Rat(id.a));
}

// Searches degree levels delta = max d_j, ..., delta_max for integer
// cofactors with sum g_i f_i = a. The rational system is solved exactly
// (reduced echelon particular solution, free unknowns zero) and cleared to
// the minimal positive integer certificate along that ray.
inline std::optional<BezoutIdentity> nss_search(const std::vector<MPoly>& f, long delta_max) {
    if (f.empty()) throw DomainError("empty system");
    const int n = f[0].nvars();
    long dmax = 0;
    for (const MPoly& fi : f) {
        if (fi.nvars() != n) throw DomainError("variable universe mismatch");
        if (fi.is_zero()) throw DomainError("zero polynomial in system");
        dmax = std::max(dmax, fi.degree());
    }

    for (long delta = dmax; delta <= delta_max; ++delta) {
        std::vector<Exponents> rows_mon;
        detail::enumerate_monomials(n, delta, rows_mon);
        std::map<Exponents, std::size_t, GrlexLess> row_of;
        for (std::size_t i = 0; i < rows_mon.size(); ++i) row_of.emplace(rows_mon[i], i);

        // one unknown per (polynomial, shift monomial) pair
        std::vector<std::pair<std::size_t, Exponents>> unknowns;
        for (std::size_t i = 0; i < f.size(); ++i) {
            long cap = delta - f[i].degree();
            if (cap < 0) continue;
            std::vector<Exponents> shifts;
            detail::enumerate_monomials(n, cap, shifts);
            for (Exponents& s : shifts) unknowns.emplace_back(i, std::move(s));
        }
        if (unknowns.empty()) continue;

        RatMat a_mat(rows_mon.size(), RatVec(unknowns.size(), Rat(0)));
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto& [i, shift] = unknowns[u];
            for (const auto& [e, c] : f[i].terms()) {
                Exponents m = e;
                for (std::size_t k = 0; k < m.size(); ++k) m[k] += shift[k];
                a_mat[row_of.at(m)][u] = c;
            }
        }
        RatVec rhs(rows_mon.size(), Rat(0));
        rhs[row_of.at(Exponents(n, 0))] = 1;

        auto sol = solve_particular(a_mat, rhs);
        if (!sol) continue;

        // clear denominators, then divide through by the residual content
        Int a0 = 1;
        for (const Rat& q : *sol) a0 = int_lcm(a0, q.get_den());
        std::vector<MPoly> g(f.size(), MPoly(n));
        Int content = a0;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const Rat& q = (*sol)[u];
            if (q == 0) continue;
            Int c = q.get_num() * (a0 / q.get_den());
            content = int_gcd(content, c);
            g[unknowns[u].first].add_term(unknowns[u].second, Rat(c));
        }
        BezoutIdentity id;
        id.a = a0 / content;
        id.delta = delta;
        for (MPoly& gi : g) id.cofactors.push_back(gi * make_rat(Int(1), content));
        if (!verify_identity(id, f)) throw InternalError("certificate failed verification");
        return id;
    }
    return std::nullopt;
}

}  // namespace zerodim

#endif
