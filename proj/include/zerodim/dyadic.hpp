#ifndef ZERODIM_DYADIC_HPP
#define ZERODIM_DYADIC_HPP

#include <string>
#include <utility>

#include "zerodim/scalar.hpp"

namespace zerodim {

// Dyadic rational m * 2^e, normalized so that m is odd (or m = 0, e = 0).
// Addition, subtraction, multiplication and halving are exact; only division
// by a non-power-of-two needs directed rounding (see div_down / div_up).
class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    Dyadic(Int mantissa, long exponent) : m_(std::move(mantissa)), e_(exponent) { normalize(); }
    explicit Dyadic(const Int& value) : m_(value), e_(0) { normalize(); }
    explicit Dyadic(long value) : m_(value), e_(0) { normalize(); }

    const Int& mantissa() const { return m_; }
    long exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }
    int sign() const { return sgn(m_); }

    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m_, a.e_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.m_ == 0) return b;
        if (b.m_ == 0) return a;
        if (a.e_ <= b.e_) return Dyadic(a.m_ + (b.m_ << static_cast<unsigned long>(b.e_ - a.e_)), a.e_);
        return b + a;
    }

    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m_ * b.m_, a.e_ + b.e_);
    }

    friend Dyadic operator*(const Dyadic& a, const Int& k) { return Dyadic(a.m_ * k, a.e_); }

    Dyadic halved() const { return m_ == 0 ? Dyadic() : Dyadic(m_, e_ - 1); }
    Dyadic doubled() const { return m_ == 0 ? Dyadic() : Dyadic(m_, e_ + 1); }

    // value / k rounded toward -inf (resp. +inf) onto the grid 2^-prec, k > 0.
    Dyadic div_down(const Int& k, unsigned prec) const { return div_dir(k, prec, false); }
    Dyadic div_up(const Int& k, unsigned prec) const { return div_dir(k, prec, true); }

    Int floor() const { return shift_int(false); }
    Int ceil() const { return shift_int(true); }

    // Exact comparison.
    friend int cmp(const Dyadic& a, const Dyadic& b) {
        if (int sa = a.sign(), sb = b.sign(); sa != sb) return sa < sb ? -1 : 1;
        Dyadic d = a - b;
        return d.sign();
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    Dyadic abs() const { return m_ < 0 ? -*this : *this; }

    Rat to_rat() const {
        if (e_ >= 0) return Rat(m_ << static_cast<unsigned long>(e_));
        return make_rat(m_, pow2(static_cast<unsigned long>(-e_)));
    }

    double to_double() const { return mpq_get_d(to_rat().get_mpq_t()); }

    // Exact decimal expansion (dyadics are always decimally finite).
    std::string to_decimal() const {
        if (m_ == 0) return "0";
        if (e_ >= 0) return Int(m_ << static_cast<unsigned long>(e_)).get_str();
        unsigned long f = static_cast<unsigned long>(-e_);
        Int digits = m_ * int_pow(Int(5), f);
        bool neg = digits < 0;
        std::string s = abs(digits).get_str();
        if (s.size() <= f) s.insert(0, f + 1 - s.size(), '0');
        s.insert(s.size() - f, ".");
        // strip trailing zeros of the fractional part
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
        return neg ? "-" + s : s;
    }

private:
    void normalize() {
        if (m_ == 0) {
            e_ = 0;
            return;
        }
        unsigned long tz = mpz_scan1(m_.get_mpz_t(), 0);
        if (tz > 0) {
            m_ >>= tz;
            e_ += static_cast<long>(tz);
        }
    }

    Dyadic div_dir(const Int& k, unsigned prec, bool up) const {
        if (k <= 0) throw DomainError("dyadic division by non-positive integer");
        // floor/ceil of m * 2^(e+prec) / k, result scaled by 2^-prec
        long shift = e_ + static_cast<long>(prec);
        Int num = m_, den = k, q;
        if (shift >= 0)
            num <<= static_cast<unsigned long>(shift);
        else
            den <<= static_cast<unsigned long>(-shift);
        if (up)
            mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        else
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return Dyadic(q, -static_cast<long>(prec));
    }

    Int shift_int(bool up) const {
        if (e_ >= 0) return m_ << static_cast<unsigned long>(e_);
        Int q;
        Int den = pow2(static_cast<unsigned long>(-e_));
        if (up)
            mpz_cdiv_q(q.get_mpz_t(), m_.get_mpz_t(), den.get_mpz_t());
        else
            mpz_fdiv_q(q.get_mpz_t(), m_.get_mpz_t(), den.get_mpz_t());
        return q;
    }

    Int m_;
    long e_;
};

}  // namespace zerodim

#endif
