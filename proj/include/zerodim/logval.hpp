#ifndef ZERODIM_LOGVAL_HPP
#define ZERODIM_LOGVAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "zerodim/dyadic.hpp"
#include "zerodim/scalar.hpp"

namespace zerodim {

// Certified bracket [lo, hi] for a real base-2 logarithmic quantity.
// Every operation rounds lo downward and hi upward, so the true value
// provably stays inside. The bracket is exact when lo == hi.
class LogVal {
public:
    LogVal() : lo_(), hi_() {}
    LogVal(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (cmp(lo_, hi_) > 0) throw InternalError("LogVal with lo > hi");
    }

    static LogVal exact(const Dyadic& v) { return LogVal(v, v); }
    static LogVal exact_int(const Int& v) { return exact(Dyadic(v)); }
    static LogVal exact_int(long v) { return exact(Dyadic(v)); }
    static LogVal zero() { return LogVal(); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    bool exact_point() const { return lo_ == hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic midpoint_times2() const { return lo_ + hi_; }
    bool contains(const Dyadic& v) const { return lo_ <= v && v <= hi_; }

    friend LogVal operator+(const LogVal& a, const LogVal& b) {
        return LogVal(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend LogVal operator-(const LogVal& a, const LogVal& b) {
        return LogVal(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend LogVal operator-(const LogVal& a) { return LogVal(-a.hi_, -a.lo_); }

    // Scaling by an integer is exact on dyadic endpoints.
    friend LogVal operator*(const LogVal& a, const Int& k) {
        if (k >= 0) return LogVal(a.lo_ * k, a.hi_ * k);
        return LogVal(a.hi_ * k, a.lo_ * k);
    }
    friend LogVal operator*(const Int& k, const LogVal& a) { return a * k; }

    LogVal div_pos(const Int& k, unsigned prec) const {
        return LogVal(lo_.div_down(k, prec), hi_.div_up(k, prec));
    }
    LogVal halved() const { return LogVal(lo_.halved(), hi_.halved()); }

    LogVal abs() const {
        if (lo_.sign() >= 0) return *this;
        if (hi_.sign() <= 0) return -*this;
        return LogVal(Dyadic(), std::max(-lo_, hi_));
    }

private:
    Dyadic lo_, hi_;
};

inline LogVal lv_max(const LogVal& a, const LogVal& b) {
    return LogVal(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

enum class Cert { True, False, Unknown };

// Certified comparison of the bracketed true values: True means a <= b is
// proven, False means a > b is proven. Callers refine precision on Unknown.
inline Cert leq_certified(const LogVal& a, const LogVal& b) {
    if (a.hi() <= b.lo()) return Cert::True;
    if (a.lo() > b.hi()) return Cert::False;
    return Cert::Unknown;
}

namespace detail {

struct MpfrFloat {
    mpfr_t v;
    explicit MpfrFloat(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrFloat() { mpfr_clear(v); }
    MpfrFloat(const MpfrFloat&) = delete;
    MpfrFloat& operator=(const MpfrFloat&) = delete;
};

inline Dyadic dyadic_from_mpfr(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Dyadic();
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return Dyadic(m, static_cast<long>(e));
}

}  // namespace detail

// Bracket of log2(x) for a positive rational x, of width <= 2^-prec; exact
// point interval when x is a power of two. The endpoints come from MPFR
// directed rounding and are converted to exact dyadics, so the bracket is
// certified.
inline LogVal log2_interval(const Rat& x, unsigned prec) {
    if (x <= 0) throw DomainError("log2 of non-positive value");
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (is_power_of_two(num) && is_power_of_two(den))
        return LogVal::exact(Dyadic(log2_exact(num) - log2_exact(den)));

    const Dyadic target_width(Int(1), -static_cast<long>(prec));
    for (mpfr_prec_t work = static_cast<mpfr_prec_t>(prec) + 32;; work *= 2) {
        detail::MpfrFloat xd(work), xu(work), ld(work), lu(work);
        mpfr_set_q(xd.v, x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xu.v, x.get_mpq_t(), MPFR_RNDU);
        mpfr_log2(ld.v, xd.v, MPFR_RNDD);
        mpfr_log2(lu.v, xu.v, MPFR_RNDU);
        Dyadic lo = detail::dyadic_from_mpfr(ld.v);
        Dyadic hi = detail::dyadic_from_mpfr(lu.v);
        if (hi - lo <= target_width) return LogVal(lo, hi);
        if (work > static_cast<mpfr_prec_t>(prec) + (1L << 22))
            throw InternalError("log2_interval failed to converge");
    }
}

inline LogVal log2_interval(const Int& x, unsigned prec) { return log2_interval(Rat(x), prec); }

// Bracket of log2 ||v||_2 = (1/2) log2 (sum v_i^2), from the exact integer
// sum of squares.
inline LogVal lognorm2(const std::vector<Int>& v, unsigned prec) {
    Int s = 0;
    for (const Int& c : v) s += c * c;
    if (s == 0) throw DomainError("lognorm2 of zero vector");
    return log2_interval(s, prec).halved();
}

}  // namespace zerodim

#endif
