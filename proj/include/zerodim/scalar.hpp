#ifndef ZERODIM_SCALAR_HPP
#define ZERODIM_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace zerodim {

// Exact scalars: arbitrary-precision integers and canonical rationals.
// A Rat with denominator 1 plays the role of an integer; arithmetic never
// rounds.
using Int = mpz_class;
using Rat = mpq_class;

// Bad input / violated precondition (user-facing).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant (bug, not user error).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

// 2^e for e >= 0.
inline Int pow2(unsigned long e) {
    Int r = 1;
    r <<= e;
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// m > 0 and m = 2^k for some k >= 0.
inline bool is_power_of_two(const Int& m) {
    return m > 0 && mpz_popcount(m.get_mpz_t()) == 1;
}

// Exact log2 of a positive power of two.
inline long log2_exact(const Int& m) {
    if (!is_power_of_two(m)) throw InternalError("log2_exact: not a power of two");
    return static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "a" or "a/b" with optional leading '-'.
inline Rat parse_rat(const std::string& text) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw DomainError("malformed rational: '" + text + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

// All positive divisors of |m|, m != 0, by trial division. Meant for the
// modest coefficients that appear in triangular chains.
inline std::vector<Int> positive_divisors(Int m) {
    if (m == 0) throw DomainError("divisors of zero");
    m = abs(m);
    std::vector<Int> small, large;
    Int i = 1;
    while (i * i <= m) {
        if (m % i == 0) {
            small.push_back(i);
            Int j = m / i;
            if (j != i) large.push_back(j);
        }
        ++i;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace zerodim

#endif
