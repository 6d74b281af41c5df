#ifndef ZERODIM_TRIANGULAR_HPP
#define ZERODIM_TRIANGULAR_HPP

#include <algorithm>
#include <vector>

#include "zerodim/upoly.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

namespace detail {

// All rational roots of a nonzero univariate polynomial over Q, with the
// requirement that it splits over Q: after deflating every rational root
// (with multiplicity) the quotient must be constant.
inline std::vector<Rat> rational_roots_split(const UPoly& f) {
    DenseU p = to_dense(f);
    if (p.empty()) throw DomainError("root search on zero polynomial");
    std::vector<Rat> roots;
    // factor out t^k
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(k));
    }
    // clear denominators
    Int l = 1;
    for (const Rat& c : p) l = int_lcm(l, c.get_den());
    std::vector<Int> z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) z[i] = p[i].get_num() * (l / p[i].get_den());

    // synthetic division by (t - r), repeated while the remainder is zero
    auto deflate_all = [&](const Rat& r) {
        bool any = false;
        while (z.size() > 1) {
            DenseU quot(z.size() - 1, Rat(0));
            Rat acc(0);
            for (std::size_t i = z.size(); i-- > 1;) {
                acc = acc * r + Rat(z[i]);
                quot[i - 1] = acc;
            }
            if (acc * r + Rat(z[0]) != 0) break;
            Int l2 = 1;
            for (const Rat& c : quot) l2 = int_lcm(l2, c.get_den());
            z.resize(quot.size());
            for (std::size_t i = 0; i < quot.size(); ++i)
                z[i] = quot[i].get_num() * (l2 / quot[i].get_den());
            any = true;
        }
        return any;
    };

    if (z.size() >= 2) {
        std::vector<Int> num_divs = positive_divisors(z.front());
        std::vector<Int> den_divs = positive_divisors(z.back());
        std::vector<Rat> candidates;
        for (const Int& a : num_divs)
            for (const Int& b : den_divs) {
                Rat r = make_rat(a, b);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rat& r : candidates) {
            if (z.size() < 2) break;
            DenseU zq(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) zq[i] = Rat(z[i]);
            if (u_eval(zq, r) == 0) {
                if (deflate_all(r)) roots.push_back(r);
            }
        }
    }
    if (z.size() > 1) throw DomainError("head roots not rational");
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

// Exact back-substitution for triangular chains: the first polynomial is
// univariate in x1 and splits over Q; every later polynomial has the shape
// x_i - g(x_1, ..., x_{i-1}).
inline PointVariety solve_triangular(const std::vector<MPoly>& system) {
    if (system.empty()) throw DomainError("empty system");
    const int n = system[0].nvars();
    if (static_cast<int>(system.size()) != n)
        throw DomainError("triangular system needs exactly one polynomial per variable");

    // head: univariate in x1
    const MPoly& head = system[0];
    if (head.is_zero()) throw DomainError("zero polynomial in system");
    UPoly head_u(1);
    for (const auto& [e, c] : head.terms()) {
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] != 0) throw DomainError("system is not triangular: head not univariate in x1");
        head_u.add_term(Exponents{e[0]}, c);
    }
    std::vector<Rat> x1_roots = detail::rational_roots_split(head_u);
    if (x1_roots.empty()) throw DomainError("head polynomial has no roots");

    // tails: x_i - g(x_1..x_{i-1})
    std::vector<MPoly> g;  // g_i for i = 2..n, in nvars variables
    for (int i = 1; i < n; ++i) {
        const MPoly& f = system[i];
        Exponents unit(n, 0);
        unit[i] = 1;
        bool has_unit = false;
        MPoly gi(n);
        for (const auto& [e, c] : f.terms()) {
            if (e == unit) {
                if (c != 1) throw DomainError("system is not triangular: x_i coefficient != 1");
                has_unit = true;
                continue;
            }
            for (std::size_t j = static_cast<std::size_t>(i); j < e.size(); ++j)
                if (e[j] != 0)
                    throw DomainError("system is not triangular: late variable in tail polynomial");
            gi.add_term(e, -c);
        }
        if (!has_unit) throw DomainError("system is not triangular: missing x_i term");
        g.push_back(std::move(gi));
    }

    std::vector<std::vector<Rat>> points;
    for (const Rat& r : x1_roots) {
        std::vector<Rat> pt{r};
        for (int i = 1; i < n; ++i) {
            std::vector<Rat> padded = pt;
            padded.resize(n, Rat(0));
            pt.push_back(g[i - 1].eval(padded));
        }
        points.push_back(std::move(pt));
    }
    return PointVariety::from_points(n, std::move(points));
}

}  // namespace zerodim

#endif
