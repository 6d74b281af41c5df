#ifndef ZERODIM_MPOLY_HPP
#define ZERODIM_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "zerodim/logval.hpp"
#include "zerodim/scalar.hpp"

namespace zerodim {

using Exponents = std::vector<unsigned>;

inline unsigned long total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0ul);
}

// Graded lexicographic order with x1 > x2 > ... (ascending comparator, so the
// leading term of a map is its last entry).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over the rationals. No stored coefficient is
// zero; the zero polynomial has an empty term map. Values are immutable in
// spirit: all operations return fresh polynomials.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw DomainError("negative variable count");
    }

    static MPoly constant(int nvars, const Rat& c) {
        MPoly f(nvars);
        f.add_term(Exponents(nvars, 0), c);
        return f;
    }

    static MPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
        Exponents e(nvars, 0);
        e[i] = 1;
        MPoly f(nvars);
        f.add_term(e, Rat(1));
        return f;
    }

    static MPoly monomial(int nvars, Exponents e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars) throw DomainError("exponent length mismatch");
        MPoly f(nvars);
        f.add_term(std::move(e), c);
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Exponents e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long degree() const {
        if (terms_.empty()) throw DomainError("degree undefined for zero polynomial");
        return static_cast<long>(total_degree(terms_.rbegin()->first));
    }

    bool all_integer() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return is_integer(t.second); });
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.require_same_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_vars(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& c) {
        MPoly r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, q] : a.terms_) r.terms_.emplace(e, q * c);
        return r;
    }
    friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned long e) const {
        MPoly r = constant(nvars_, Rat(1));
        MPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Exact evaluation, Horner scheme variable by variable.
    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw DomainError("evaluation point dimension mismatch");
        std::vector<std::pair<Exponents, Rat>> flat(terms_.begin(), terms_.end());
        return eval_range(flat, 0, flat.size(), 0, point);
    }

    MPoly derivative(int var) const {
        if (var < 0 || var >= nvars_) throw DomainError("variable index out of range");
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            r.add_term(std::move(d), c * Rat(e[var]));
        }
        return r;
    }

    // Same polynomial viewed in a larger variable universe.
    MPoly extended(int new_nvars) const {
        if (new_nvars < nvars_) throw DomainError("cannot shrink variable universe");
        MPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents f(new_nvars, 0);
            std::copy(e.begin(), e.end(), f.begin());
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

private:
    void require_same_vars(const MPoly& other) const {
        if (nvars_ != other.nvars_) throw DomainError("variable count mismatch");
    }

    // Horner on the terms [begin, end), all sharing the same exponents below
    // position `var`; the range is grlex-sorted, which within one variable's
    // grouping yields ascending exponents of that variable once the range is
    // re-sorted locally. We sort indices by e[var] descending and recurse.
    static Rat eval_range(const std::vector<std::pair<Exponents, Rat>>& flat, std::size_t b,
                          std::size_t e, int var, const std::vector<Rat>& pt) {
        if (b == e) return Rat(0);
        if (var == static_cast<int>(pt.size())) return flat[b].second;  // single constant term
        // group term indices by exponent of `var`, descending
        std::vector<std::size_t> idx;
        idx.reserve(e - b);
        for (std::size_t i = b; i < e; ++i) idx.push_back(i);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
            return flat[i].first[var] > flat[j].first[var];
        });
        Rat acc(0);
        unsigned long prev_exp = 0;
        bool first = true;
        std::size_t i = 0;
        while (i < idx.size()) {
            unsigned long cur = flat[idx[i]].first[var];
            std::size_t j = i;
            while (j < idx.size() && flat[idx[j]].first[var] == cur) ++j;
            // evaluate the group recursively in the remaining variables
            std::vector<std::pair<Exponents, Rat>> group;
            group.reserve(j - i);
            for (std::size_t k = i; k < j; ++k) group.push_back(flat[idx[k]]);
            Rat g = eval_range(group, 0, group.size(), var + 1, pt);
            if (first) {
                acc = g;
                first = false;
            } else {
                acc = acc * rat_pow(pt[var], prev_exp - cur) + g;
            }
            prev_exp = cur;
            i = j;
        }
        if (prev_exp > 0) acc = acc * rat_pow(pt[var], prev_exp);
        return acc;
    }

    static Rat rat_pow(const Rat& x, unsigned long e) {
        Rat r(1), base = x;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    int nvars_;
    TermMap terms_;
};

// A univariate polynomial is an MPoly with one variable.
using UPoly = MPoly;

inline long poly_degree(const MPoly& f) { return f.degree(); }

// Bracket of log2 max|c_alpha| over the nonzero integer coefficients.
inline LogVal poly_height(const MPoly& f, unsigned prec) {
    if (f.is_zero()) throw DomainError("height undefined for zero polynomial");
    if (!f.all_integer()) throw DomainError("height defined for integer polynomials");
    Int m = 0;
    for (const auto& [e, c] : f.terms()) m = std::max(m, Int(abs(c.get_num())));
    return log2_interval(m, prec);
}

inline Rat poly_eval(const MPoly& f, const std::vector<Rat>& point) { return f.eval(point); }

struct PrimitivePart {
    MPoly primitive;  // integer coefficients, content 1, positive leading coefficient
    Rat content;      // f = content * primitive
};

inline PrimitivePart primitive_part(const MPoly& f) {
    if (f.is_zero()) throw DomainError("primitive part undefined for zero polynomial");
    Int den_lcm = 1;
    for (const auto& [e, c] : f.terms()) den_lcm = int_lcm(den_lcm, c.get_den());
    Int num_gcd = 0;
    for (const auto& [e, c] : f.terms()) {
        Int scaled = c.get_num() * (den_lcm / c.get_den());
        num_gcd = int_gcd(num_gcd, scaled);
    }
    // sign from the grlex-leading coefficient
    int lead_sign = sgn(f.terms().rbegin()->second);
    Int signed_gcd = lead_sign < 0 ? -num_gcd : num_gcd;
    Rat inv_content = make_rat(den_lcm, signed_gcd);
    MPoly prim = f * inv_content;
    Rat content = make_rat(signed_gcd, den_lcm);
    return {std::move(prim), std::move(content)};
}

// Evaluation of f at polynomial arguments (one per variable of f).
inline MPoly compose(const MPoly& f, const std::vector<MPoly>& args) {
    if (static_cast<int>(args.size()) != f.nvars())
        throw DomainError("compose arity mismatch");
    int m = args.empty() ? 0 : args[0].nvars();
    for (const MPoly& a : args)
        if (a.nvars() != m) throw DomainError("compose argument variable mismatch");
    // memoized powers per argument
    std::vector<std::vector<MPoly>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) powers[i].push_back(MPoly::constant(m, Rat(1)));
    auto arg_pow = [&](std::size_t i, unsigned e) -> const MPoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * args[i]);
        return powers[i][e];
    };
    MPoly r(m);
    for (const auto& [e, c] : f.terms()) {
        MPoly t = MPoly::constant(m, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * arg_pow(i, e[i]);
        r = r + t;
    }
    return r;
}

// f(t, c1, ..., ck): keeps variable 0, specializes the rest to constants.
inline UPoly specialize_tail(const MPoly& f, const std::vector<Rat>& tail) {
    if (static_cast<int>(tail.size()) != f.nvars() - 1)
        throw DomainError("specialize_tail arity mismatch");
    UPoly r(1);
    for (const auto& [e, c] : f.terms()) {
        Rat v = c;
        for (std::size_t i = 1; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) v *= tail[i - 1];
        r.add_term(Exponents{e[0]}, v);
    }
    return r;
}

}  // namespace zerodim

#endif
