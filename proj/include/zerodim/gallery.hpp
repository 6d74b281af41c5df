#ifndef ZERODIM_GALLERY_HPP
#define ZERODIM_GALLERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "zerodim/mpoly.hpp"
#include "zerodim/scalar.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

// Catalog entry with known exact behavior. Expected quantities are
// re-verified at construction, never trusted.
struct GalleryCase {
    std::string name;
    std::string family;  // "V1", "V2", "V3", "NSS2", "BMP"
    int n = 0;
    long d = 0, h = 0;
    std::vector<MPoly> system;
    std::optional<PointVariety> variety;
    bool known_empty = false;
    std::optional<Int> expected_degree;         // number of points
    std::optional<Int> expected_height_radicand;  // h(V) = (1/2) log2 R
    std::optional<long> expected_log2_last_coord;
    bool bounds_only = false;  // certificate search out of desk scale
};

namespace detail {

inline MPoly chain_poly_head(int n, long h) {
    // x1 - 2^h
    MPoly f = MPoly::variable(n, 0);
    return f - MPoly::constant(n, Rat(pow2(static_cast<unsigned long>(h))));
}

inline MPoly chain_poly_link(int n, int i, long d) {
    // x_i - x_{i-1}^d
    return MPoly::variable(n, i) - MPoly::variable(n, i - 1).pow(static_cast<unsigned long>(d));
}

inline void verify_vanishing(const GalleryCase& c) {
    if (!c.variety) return;
    for (const MPoly& f : c.system)
        for (const auto& pt : c.variety->points())
            if (f.eval(pt) != 0) throw InternalError("gallery system does not vanish on its points");
}

}  // namespace detail

// V1: x_i^d - 1 for all i; rational points only for d in {1, 2}.
inline GalleryCase v1_case(int n, long d) {
    if (d != 1 && d != 2) throw DomainError("V1 has rational points only for d in {1,2}");
    GalleryCase c;
    c.family = "V1";
    c.name = "V1(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
    c.n = n;
    c.d = d;
    c.h = 0;
    for (int i = 0; i < n; ++i)
        c.system.push_back(MPoly::variable(n, i).pow(static_cast<unsigned long>(d)) -
                           MPoly::constant(n, Rat(1)));
    std::vector<std::vector<Rat>> pts;
    long count = 1;
    for (int i = 0; i < n; ++i) count *= d;
    for (long mask = 0; mask < count; ++mask) {
        std::vector<Rat> pt(n, Rat(1));
        long m = mask;
        for (int i = 0; i < n; ++i) {
            if (d == 2 && (m & 1)) pt[i] = Rat(-1);
            m >>= 1;
        }
        pts.push_back(std::move(pt));
    }
    c.variety = PointVariety::from_points(n, std::move(pts));
    c.expected_degree = int_pow(d, static_cast<unsigned long>(n));
    if (c.variety->D() != *c.expected_degree) throw InternalError("V1 point count mismatch");
    detail::verify_vanishing(c);
    return c;
}

// V2: x1 - 2^h, x_i - x_{i-1}^d; the single point (2^h, 2^{dh}, ...,
// 2^{d^{n-1} h}).
inline GalleryCase v2_case(int n, long d, long h) {
    GalleryCase c;
    c.family = "V2";
    c.name = "V2(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",h=" + std::to_string(h) +
             ")";
    c.n = n;
    c.d = d;
    c.h = h;
    c.system.push_back(detail::chain_poly_head(n, h));
    for (int i = 1; i < n; ++i) c.system.push_back(detail::chain_poly_link(n, i, d));
    std::vector<Rat> pt;
    Int radicand = 1;
    long e = h;
    for (int i = 0; i < n; ++i) {
        pt.push_back(Rat(pow2(static_cast<unsigned long>(e))));
        radicand += pow2(static_cast<unsigned long>(2 * e));
        if (i + 1 < n) e *= d;
    }
    c.expected_log2_last_coord = e;
    c.variety = PointVariety::from_points(n, {pt});
    c.expected_degree = 1;
    c.expected_height_radicand = radicand;
    if (variety_height_radicand(*c.variety) != radicand)
        throw InternalError("V2 height radicand mismatch");
    detail::verify_vanishing(c);
    return c;
}

// V3: 2^h x1 - 1, x_i - x_{i-1}^d; the single point (2^-h, ..., 2^{-d^{n-1} h}).
inline GalleryCase v3_case(int n, long d, long h) {
    GalleryCase c;
    c.family = "V3";
    c.name = "V3(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",h=" + std::to_string(h) +
             ")";
    c.n = n;
    c.d = d;
    c.h = h;
    MPoly head = MPoly::constant(n, Rat(pow2(static_cast<unsigned long>(h)))) *
                     MPoly::variable(n, 0) -
                 MPoly::constant(n, Rat(1));
    c.system.push_back(std::move(head));
    for (int i = 1; i < n; ++i) c.system.push_back(detail::chain_poly_link(n, i, d));
    std::vector<Rat> pt;
    long e = h;
    for (int i = 0; i < n; ++i) {
        pt.push_back(make_rat(Int(1), pow2(static_cast<unsigned long>(e))));
        if (i + 1 < n) e *= d;
    }
    c.expected_log2_last_coord = -e;
    c.variety = PointVariety::from_points(n, {pt});
    c.expected_degree = 1;
    detail::verify_vanishing(c);
    return c;
}

// NSS2: the V2 chain plus x_n^d, an empty system; any certificate has
// h(a) >= d^n h.
inline GalleryCase nss2_case(int n, long d, long h) {
    GalleryCase c;
    c.family = "NSS2";
    c.name = "NSS2(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",h=" +
             std::to_string(h) + ")";
    c.n = n;
    c.d = d;
    c.h = h;
    c.system.push_back(detail::chain_poly_head(n, h));
    for (int i = 1; i < n; ++i) c.system.push_back(detail::chain_poly_link(n, i, d));
    c.system.push_back(MPoly::variable(n, n - 1).pow(static_cast<unsigned long>(d)));
    c.known_empty = true;
    // emptiness certificate: the chain forces the unique point of V2, and
    // x_n^d does not vanish there
    GalleryCase v2 = v2_case(n, d, h);
    if (c.system.back().eval(v2.variety->points()[0]) == 0)
        throw InternalError("NSS2 system unexpectedly consistent");
    return c;
}

// Brownawell-Masser-Philippon: x1^d, x_{i-1} x_n^{d-1} - x_i^d, ...,
// 2^h - x_{n-1} x_n^{d-1}; empty, recorded for bound evaluation only.
inline GalleryCase bmp_case(int n, long d, long h) {
    if (n < 2) throw DomainError("BMP needs n >= 2");
    GalleryCase c;
    c.family = "BMP";
    c.name = "BMP(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",h=" + std::to_string(h) +
             ")";
    c.n = n;
    c.d = d;
    c.h = h;
    c.bounds_only = true;
    c.known_empty = true;
    auto xpow = [&](int i, long e) { return MPoly::variable(n, i).pow(static_cast<unsigned long>(e)); };
    c.system.push_back(xpow(0, d));
    for (int i = 1; i + 1 < n; ++i)
        c.system.push_back(xpow(i - 1, 1) * xpow(n - 1, d - 1) - xpow(i, d));
    c.system.push_back(MPoly::constant(n, Rat(pow2(static_cast<unsigned long>(h)))) -
                       xpow(n - 2, 1) * xpow(n - 1, d - 1));
    return c;
}

// The full catalog used by the property suite.
inline std::vector<GalleryCase> gallery() {
    std::vector<GalleryCase> cases;
    for (int n = 1; n <= 3; ++n)
        for (long d = 1; d <= 2; ++d) cases.push_back(v1_case(n, d));
    for (int n = 1; n <= 3; ++n)
        for (long d = 2; d <= 3; ++d)
            for (long h = 1; h <= 8; ++h) cases.push_back(v2_case(n, d, h));
    for (int n = 1; n <= 3; ++n)
        for (long d = 1; d <= 3; ++d)
            for (long h = 1; h <= 4; ++h) cases.push_back(v3_case(n, d, h));
    for (int n = 1; n <= 2; ++n)
        for (long h = 1; h <= 3; ++h) cases.push_back(nss2_case(n, 2, h));
    for (int n = 2; n <= 3; ++n)
        for (long d = 2; d <= 3; ++d) cases.push_back(bmp_case(n, d, 2));
    return cases;
}

}  // namespace zerodim

#endif
