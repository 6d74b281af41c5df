#ifndef ZERODIM_PERRON_HPP
#define ZERODIM_PERRON_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zerodim/linalg.hpp"
#include "zerodim/mpoly.hpp"

namespace zerodim {

// Nonzero integer relation P(y_1, ..., y_{n+1}) with P(f_1, ..., f_{n+1}) = 0.
struct PerronRelation {
    MPoly relation;  // n+1 variables
};

inline bool verify_relation(const PerronRelation& rel, const std::vector<MPoly>& f) {
    if (rel.relation.is_zero()) return false;
    if (static_cast<int>(f.size()) != rel.relation.nvars()) return false;
    return compose(rel.relation, f).is_zero();
}

namespace detail {

inline void enumerate_weighted(const std::vector<long>& degs, const Int& cap,
                               std::vector<Exponents>& out) {
    Exponents e(degs.size(), 0);
    struct Rec {
        const std::vector<long>& degs;
        std::vector<Exponents>& out;
        Exponents& e;
        void go(std::size_t pos, Int budget) {
            if (pos == degs.size()) {
                out.push_back(e);
                return;
            }
            for (Int k = 0; k * degs[pos] <= budget; ++k) {
                e[pos] = static_cast<unsigned>(k.get_ui());
                go(pos + 1, budget - k * degs[pos]);
            }
            e[pos] = 0;
        }
    } rec{degs, out, e};
    if (cap >= 0) rec.go(0, cap);
}

}  // namespace detail

// Kernel basis of the map c -> coefficients of sum c_alpha f^alpha over the
// monomials of weighted degree alpha.d <= cap (default: the product of the
// degrees, at which a nonzero relation always exists). Basis vectors are
// integer-cleared, content-free, and sign-normalized on their first nonzero
// coordinate in enumeration order.
inline std::vector<PerronRelation> perron_search(const std::vector<MPoly>& f,
                                                 std::optional<Int> weighted_cap = std::nullopt) {
    if (f.size() < 2) throw DomainError("dependence search needs at least two polynomials");
    const int n = f[0].nvars();
    if (static_cast<int>(f.size()) != n + 1)
        throw DomainError("dependence search needs n+1 polynomials in n variables");
    std::vector<long> degs;
    for (const MPoly& fi : f) {
        if (fi.nvars() != n) throw DomainError("variable universe mismatch");
        if (fi.is_zero()) throw DomainError("zero polynomial in system");
        degs.push_back(fi.degree());
        if (degs.back() < 1) throw DomainError("dependence search needs nonconstant polynomials");
    }
    Int default_cap = 1;
    for (long d : degs) default_cap *= d;
    const bool theorem_cap = !weighted_cap.has_value();
    Int cap = weighted_cap.value_or(default_cap);

    std::vector<Exponents> alphas;
    detail::enumerate_weighted(degs, cap, alphas);

    // columns: expanded f^alpha; rows: x-monomials encountered
    std::map<Exponents, std::size_t, GrlexLess> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> cols;
    std::vector<std::vector<MPoly>> powers(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) powers[i].push_back(MPoly::constant(n, Rat(1)));
    auto f_pow = [&](std::size_t i, unsigned e) -> const MPoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * f[i]);
        return powers[i][e];
    };
    for (const Exponents& a : alphas) {
        MPoly prod = MPoly::constant(n, Rat(1));
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0) prod = prod * f_pow(i, a[i]);
        std::vector<std::pair<std::size_t, Rat>> col;
        for (const auto& [e, c] : prod.terms()) {
            auto [it, fresh] = row_of.emplace(e, row_of.size());
            col.emplace_back(it->second, c);
        }
        cols.push_back(std::move(col));
    }

    RatMat m(row_of.size(), RatVec(alphas.size(), Rat(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [row, c] : cols[j]) m[row][j] = c;

    std::vector<PerronRelation> relations;
    for (const RatVec& v : kernel_basis(m)) {
        Int l = 1;
        for (const Rat& q : v) l = int_lcm(l, q.get_den());
        Int content = 0;
        std::vector<Int> cleared(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            cleared[j] = v[j].get_num() * (l / v[j].get_den());
            content = int_gcd(content, cleared[j]);
        }
        int sign = 0;
        for (const Int& c : cleared)
            if (c != 0) {
                sign = c > 0 ? 1 : -1;
                break;
            }
        MPoly rel(n + 1);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (cleared[j] != 0) rel.add_term(alphas[j], Rat(cleared[j] * sign) / Rat(content));
        PerronRelation pr{std::move(rel)};
        if (!verify_relation(pr, f)) throw InternalError("dependence relation failed verification");
        relations.push_back(std::move(pr));
    }
    if (relations.empty() && theorem_cap)
        throw InternalError("no dependence relation within the weighted-degree cap");
    return relations;
}

}  // namespace zerodim

#endif
