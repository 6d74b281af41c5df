#ifndef ZERODIM_VARIETY_HPP
#define ZERODIM_VARIETY_HPP

#include <set>
#include <utility>
#include <vector>

#include "zerodim/logval.hpp"
#include "zerodim/scalar.hpp"

namespace zerodim {

// A finite set of distinct rational points in Q^n. Each point zeta carries
// its primitive integer vector v = (c, c_1, ..., c_n) with c >= 1, gcd(v) = 1
// and zeta_i = c_i / c; c is the minimal common denominator.
class PointVariety {
public:
    static PointVariety from_points(int n, std::vector<std::vector<Rat>> points) {
        if (n < 1) throw DomainError("variety needs at least one variable");
        if (points.empty()) throw DomainError("variety needs at least one point");
        std::set<std::vector<Rat>> seen;
        for (const auto& p : points) {
            if (static_cast<int>(p.size()) != n) throw DomainError("point dimension mismatch");
            if (!seen.insert(p).second) throw DomainError("points must be pairwise distinct");
        }
        PointVariety v;
        v.n_ = n;
        v.points_ = std::move(points);
        for (const auto& p : v.points_) {
            Int c = 1;
            for (const Rat& x : p) c = int_lcm(c, x.get_den());
            std::vector<Int> prim;
            prim.reserve(n + 1);
            prim.push_back(c);
            Int g = c;
            for (const Rat& x : p) {
                Int ci = x.get_num() * (c / x.get_den());
                g = int_gcd(g, ci);
                prim.push_back(std::move(ci));
            }
            if (g != 1) throw InternalError("primitive vector with gcd != 1");
            v.prim_.push_back(std::move(prim));
        }
        return v;
    }

    int n() const { return n_; }
    long D() const { return static_cast<long>(points_.size()); }
    const std::vector<std::vector<Rat>>& points() const { return points_; }
    const std::vector<std::vector<Int>>& primitive_vectors() const { return prim_; }

private:
    PointVariety() = default;
    int n_ = 0;
    std::vector<std::vector<Rat>> points_;
    std::vector<std::vector<Int>> prim_;
};

// h(V) = sum over points of log2 ||v_zeta||_2, as the exact rational
// radicand R with h(V) = (1/2) log2 R.
inline Int variety_height_radicand(const PointVariety& v) {
    Int r = 1;
    for (const auto& prim : v.primitive_vectors()) {
        Int s = 0;
        for (const Int& c : prim) s += c * c;
        r *= s;
    }
    return r;
}

inline LogVal variety_height(const PointVariety& v, unsigned prec) {
    return log2_interval(variety_height_radicand(v), prec).halved();
}

// sum over points of log2 ||(1, zeta)||_2 = (1/2) log2 of the rational
// radicand prod (1 + sum zeta_i^2).
inline Rat rootin_radicand(const PointVariety& v) {
    Rat r(1);
    for (const auto& p : v.points()) {
        Rat s(1);
        for (const Rat& x : p) s += x * x;
        r *= s;
    }
    return r;
}

inline LogVal rootin_lhs(const PointVariety& v, unsigned prec) {
    return log2_interval(rootin_radicand(v), prec).halved();
}

// Certified bracket for h(V) from the height of the Chow form:
// [h_ChV - 3 log2(n+1) D, h_ChV + 3 log2(n+1) D].
inline std::pair<LogVal, LogVal> chow_height_bracket(const LogVal& h_chv, long D, int n,
                                                     unsigned prec) {
    if (D < 1) throw DomainError("variety degree must be >= 1");
    LogVal w = log2_interval(Int(n + 1), prec) * Int(3 * D);
    return {h_chv - w, h_chv + w};
}

}  // namespace zerodim

#endif
