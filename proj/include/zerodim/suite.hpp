#ifndef ZERODIM_SUITE_HPP
#define ZERODIM_SUITE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zerodim/bounds.hpp"
#include "zerodim/gallery.hpp"
#include "zerodim/nss.hpp"
#include "zerodim/perron.hpp"
#include "zerodim/quotient.hpp"
#include "zerodim/rur.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

// Splittable deterministic generator; identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t domain, std::uint64_t index) {
        SplitMix64 g(seed * 0x9E3779B97F4A7C15ull ^ domain * 0xBF58476D1CE4E5B9ull ^
                     index * 0x94D049BB133111EBull);
        g.next();
        g.next();
        return g;
    }

    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // inclusive range
    long uniform(long lo, long hi) {
        if (hi < lo) throw DomainError("empty range");
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

struct SuiteConfig {
    std::uint64_t seed = 1;
    int variety_count = 100;
    int polys_per_variety = 5;
    int n_max = 3;
    long D_max = 5;
    long coord_bound = 1024;  // numerator/denominator magnitude
    long dp_max = 4;
    long hp_max = 8;
    unsigned precision = 64;
    unsigned precision_cap = 1024;
    long delta_cap = 12;
    int nss_empty_count = 20;
    std::string sabotage;        // bound name perturbed downward, "" = none
    long sabotage_offset = 1000;

    void validate() const {
        if (n_max < 1 || n_max > 3) throw DomainError("n_max out of range [1,3]");
        if (D_max < 1 || D_max > 6) throw DomainError("D_max out of range [1,6]");
        if (coord_bound < 1 || coord_bound > 1024) throw DomainError("coord_bound out of range");
        if (dp_max < 0 || dp_max > 4) throw DomainError("dp_max out of range [0,4]");
        if (hp_max < 0 || hp_max > 8) throw DomainError("hp_max out of range [0,8]");
        if (precision < 4 || precision > precision_cap || precision_cap > 4096)
            throw DomainError("invalid precision settings");
        if (variety_count < 0 || nss_empty_count < 0 || polys_per_variety < 0)
            throw DomainError("negative counts");
    }
};

struct CheckRecord {
    std::string case_name;
    std::string check;
    std::string theorem;
    bool has_values = false;
    LogVal exact;
    LogVal bound;
    std::string margin;
    std::string verdict;  // "true", "false", "unknown"
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::vector<CheckRecord> checks;
    long failures = 0;
    bool passed() const { return failures == 0; }
    std::map<std::string, double> timings;  // seconds per phase; not serialized

    long count(const std::string& check_name) const {
        long c = 0;
        for (const auto& r : checks)
            if (r.check == check_name) ++c;
        return c;
    }
    long failures_of(const std::string& check_name) const {
        long c = 0;
        for (const auto& r : checks)
            if (r.check == check_name && !r.pass) ++c;
        return c;
    }
};

struct RandomVariety {
    PointVariety V;
    RUR rur;
    std::vector<MPoly> presentation;
    SystemProfile profile;
};

namespace detail {

inline Rat random_rat(SplitMix64& rng, long bound) {
    Int num(rng.uniform(-bound, bound));
    Int den(rng.uniform(1, bound));
    return make_rat(num, den);
}

inline MPoly random_poly(SplitMix64& rng, int n, long dp_max, long hp_max) {
    long dp = rng.uniform(0, dp_max);
    long coeff_bound = (1L << hp_max);
    for (;;) {
        MPoly p(n);
        std::vector<Exponents> mons;
        enumerate_monomials(n, dp, mons);
        long terms = rng.uniform(1, std::min<long>(6, static_cast<long>(mons.size())));
        for (long t = 0; t < terms; ++t) {
            const Exponents& e = mons[static_cast<std::size_t>(
                rng.uniform(0, static_cast<long>(mons.size()) - 1))];
            long c = rng.uniform(-coeff_bound, coeff_bound);
            p.add_term(e, Rat(c));
        }
        if (!p.is_zero()) return p;
    }
}

}  // namespace detail

// Seeded sample: D distinct rational points, their representation, the
// derived integer presentation, and the profile measured from it.
inline RandomVariety random_variety(const SuiteConfig& cfg, std::uint64_t index) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, 0x7661726965747973ull, index);
    int n = static_cast<int>(rng.uniform(1, cfg.n_max));
    long D = rng.uniform(1, cfg.D_max);
    std::set<std::vector<Rat>> pts;
    while (static_cast<long>(pts.size()) < D) {
        std::vector<Rat> pt(n);
        for (int i = 0; i < n; ++i) pt[i] = detail::random_rat(rng, cfg.coord_bound);
        pts.insert(std::move(pt));
    }
    RandomVariety rv{PointVariety::from_points(
                         n, std::vector<std::vector<Rat>>(pts.begin(), pts.end())),
                     RUR{}, {}, SystemProfile{}};
    rv.rur = build_rur(rv.V, find_separating_form(rv.V));
    rv.presentation = ideal_presentation(rv.V, rv.rur);
    rv.profile = make_profile(rv.presentation, cfg.precision);
    return rv;
}

namespace detail {

class SuiteRunner {
public:
    explicit SuiteRunner(const SuiteConfig& cfg) : cfg_(cfg) {}

    SuiteReport take_report() { return std::move(rep_); }

    LogVal sab(const char* name, LogVal v) const {
        if (cfg_.sabotage == name) return v - LogVal::exact_int(cfg_.sabotage_offset);
        return v;
    }
    Int sab_int(const char* name, Int v) const {
        if (cfg_.sabotage == name) v -= cfg_.sabotage_offset;
        return v;
    }
    Rat sab_pow4(const char* name) const {
        // multiplicative 4^-offset factor for exact-rational log comparisons
        if (cfg_.sabotage != name) return Rat(1);
        return make_rat(Int(1), pow2(static_cast<unsigned long>(2 * cfg_.sabotage_offset)));
    }

    void check_bool(const std::string& cname, const std::string& check, const std::string& theorem,
                    bool ok, const std::string& note = "") {
        CheckRecord r;
        r.case_name = cname;
        r.check = check;
        r.theorem = theorem;
        r.verdict = ok ? "true" : "false";
        r.pass = ok;
        r.note = note;
        push(std::move(r));
    }

    // certified "exact <= bound" with precision doubling up to the cap
    void check_leq(const std::string& cname, const std::string& check, const std::string& theorem,
                   const std::function<LogVal(unsigned)>& exact_fn,
                   const std::function<LogVal(unsigned)>& bound_fn) {
        unsigned prec = cfg_.precision;
        for (;;) {
            LogVal a = exact_fn(prec);
            LogVal b = bound_fn(prec);
            Cert c = leq_certified(a, b);
            if (c != Cert::Unknown) {
                CheckRecord r;
                r.case_name = cname;
                r.check = check;
                r.theorem = theorem;
                r.has_values = true;
                r.exact = a;
                r.bound = b;
                r.margin = (b.lo() - a.hi()).to_decimal();
                r.verdict = c == Cert::True ? "true" : "false";
                r.pass = c == Cert::True;
                push(std::move(r));
                return;
            }
            if (prec >= cfg_.precision_cap) {
                CheckRecord r;
                r.case_name = cname;
                r.check = check;
                r.theorem = theorem;
                r.has_values = true;
                r.exact = a;
                r.bound = b;
                r.margin = (b.lo() - a.hi()).to_decimal();
                r.verdict = "unknown";
                r.pass = false;
                push(std::move(r));
                return;
            }
            prec = std::min(prec * 2, cfg_.precision_cap);
        }
    }

    template <class F>
    void timed(const std::string& phase, F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        rep_.timings[phase] += std::chrono::duration<double>(t1 - t0).count();
    }

    // ---- per-variety battery -------------------------------------------

    void battery(const std::string& cname, const PointVariety& V, const RUR& rur,
                 const std::vector<MPoly>& presentation, int pinned_distinguished,
                 SplitMix64& rng) {
        const long D = V.D();
        const int n = V.n();
        auto prof = [&, pinned_distinguished](unsigned prec) {
            return make_profile(presentation, prec, pinned_distinguished);
        };
        SystemProfile base_prof = prof(cfg_.precision);

        // Bezout degree bound
        {
            Int bound = sab_int("bezout_degree", bezout_degree_bound(base_prof));
            check_bool(cname, "bezout_degree", "bezout_inequality", Int(D) <= bound,
                       "deg(V) = " + std::to_string(D) + ", bound = " + to_string(bound));
        }

        // rootIn: sum log ||(1,zeta)|| <= h(V), exact rational radicands
        {
            Rat lhs = rootin_radicand(V);
            Rat rhs = Rat(variety_height_radicand(V));
            check_bool(cname, "rootin", "height_of_points", lhs <= rhs);
        }

        // arithmetic Bezout domination of the exact additive h(V)
        Int radicand = variety_height_radicand(V);
        auto exact_height = [radicand](unsigned prec) {
            return log2_interval(radicand, prec).halved();
        };
        check_leq(cname, "abi_sharp", "arithmetic_bezout", exact_height,
                  [&, prof](unsigned prec) {
                      return sab("abi_sharp", arith_bezout_height_bound(prof(prec), prec).sharp);
                  });
        check_leq(cname, "abi_coarse", "arithmetic_bezout", exact_height,
                  [&, prof](unsigned prec) {
                      return sab("abi_coarse", arith_bezout_height_bound(prof(prec), prec).coarse);
                  });

        // Chow height bracket around h(V)
        ChowForm ch = chow_form(V);
        auto h_chv = [poly = ch.poly](unsigned prec) { return poly_height(poly, prec); };
        check_leq(cname, "chow_bracket_lower", "height_vs_chow_height",
                  [&, h_chv](unsigned prec) {
                      return sab("chow_bracket",
                                 chow_height_bracket(h_chv(prec), D, n, prec).first);
                  },
                  exact_height);
        check_leq(cname, "chow_bracket_upper", "height_vs_chow_height", exact_height,
                  [&, h_chv](unsigned prec) {
                      return sab("chow_bracket",
                                 chow_height_bracket(h_chv(prec), D, n, prec).second);
                  });

        // Shape lemma: degree equalities and height bound on the omegas
        {
            bool deg_ok = rur.omega0.degree() == D;
            for (const UPoly& wi : rur.omega)
                if (!wi.is_zero() && wi.degree() >= D) deg_ok = false;
            check_bool(cname, "shape_degrees", "arithmetic_shape_lemma", deg_ok);

            std::vector<UPoly> omegas = rur.omega;
            omegas.push_back(rur.omega0);
            auto exact_h = [omegas](unsigned prec) {
                LogVal m = LogVal::exact_int(0);
                bool any = false;
                for (const UPoly& w : omegas) {
                    if (w.is_zero()) continue;
                    LogVal h = poly_height(w, prec);
                    m = any ? lv_max(m, h) : h;
                    any = true;
                }
                return m;
            };
            check_leq(cname, "shape_height", "arithmetic_shape_lemma", exact_h,
                      [&, prof, D](unsigned prec) {
                          return sab("shape_height", shape_height_bound(prof(prec), D, prec));
                      });
        }

        // coordinate upper/lower/separation bounds
        {
            std::vector<Rat> nonzero_coords;
            for (const auto& pt : V.points())
                for (const Rat& x : pt)
                    if (x != 0) nonzero_coords.push_back(abs(x));
            if (!nonzero_coords.empty()) {
                auto max_log = [nonzero_coords](unsigned prec) {
                    LogVal m = log2_interval(nonzero_coords[0], prec);
                    for (std::size_t i = 1; i < nonzero_coords.size(); ++i)
                        m = lv_max(m, log2_interval(nonzero_coords[i], prec));
                    return m;
                };
                auto max_abs_log = [nonzero_coords](unsigned prec) {
                    LogVal m = log2_interval(nonzero_coords[0], prec).abs();
                    for (std::size_t i = 1; i < nonzero_coords.size(); ++i)
                        m = lv_max(m, log2_interval(nonzero_coords[i], prec).abs());
                    return m;
                };
                check_leq(cname, "root_upper", "coordinate_upper_bound", max_log,
                          [&, prof](unsigned prec) {
                              return sab("root_upper", root_bounds(prof(prec), prec).upper);
                          });
                check_leq(cname, "coord_lower", "coordinate_lower_bound", max_abs_log,
                          [&, prof](unsigned prec) {
                              return sab("coord_lower", root_bounds(prof(prec), prec).coord_lower);
                          });
            }
            std::vector<Rat> coord_gaps;
            for (std::size_t a = 0; a < V.points().size(); ++a)
                for (std::size_t b = a + 1; b < V.points().size(); ++b)
                    for (int i = 0; i < n; ++i) {
                        Rat gap = abs(V.points()[a][i] - V.points()[b][i]);
                        if (gap != 0) coord_gaps.push_back(gap);
                    }
            if (!coord_gaps.empty()) {
                auto max_gap_log = [coord_gaps](unsigned prec) {
                    LogVal m = log2_interval(coord_gaps[0], prec).abs();
                    for (std::size_t i = 1; i < coord_gaps.size(); ++i)
                        m = lv_max(m, log2_interval(coord_gaps[i], prec).abs());
                    return m;
                };
                check_leq(cname, "separation", "separation_bound", max_gap_log,
                          [&, prof](unsigned prec) {
                              return sab("separation", root_bounds(prof(prec), prec).separation);
                          });
            }
        }

        // remainder machinery with random test polynomials
        MonomialBasis basis = monomial_basis(V);
        check_bool(cname, "basis_delta", "quotient_basis", basis.delta < D);

        for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
            const Exponents& e = basis.monomials[j];
            long anorm = static_cast<long>(total_degree(e));
            if (anorm == 0) continue;  // the bound is vacuous for the constant monomial
            std::vector<Rat> values;
            for (const auto& pt : V.points()) values.push_back(detail::eval_monomial(e, pt));
            UPoly ext = extension_partial(V, rur.u, values);
            if (ext.is_zero()) continue;
            MPoly prim = primitive_part(ext).primitive;
            check_leq(cname + "/basis" + std::to_string(j), "umap_monomial", "umap_height",
                      [prim](unsigned prec) { return poly_height(prim, prec); },
                      [&, prof, anorm](unsigned prec) {
                          return sab("umap_monomial",
                                     umap_bounds(prof(prec), anorm, 0, LogVal::zero(), prec)
                                         .monomial);
                      });
        }

        for (int k = 0; k < cfg_.polys_per_variety; ++k) {
            MPoly p = detail::random_poly(rng, n, cfg_.dp_max, cfg_.hp_max);
            std::string pname = cname + "/p" + std::to_string(k);
            long dp = p.degree();
            LogVal hp0 = poly_height(p, cfg_.precision);

            bool oracle_ok = true;
            Remainder rem(
                {Int(1), {}, MPoly(n), {}, Int(1)});
            try {
                rem = remainder(V, rur, basis, p);
            } catch (const InternalError& err) {
                oracle_ok = false;
                check_bool(pname, "oracle_equality", "remainder_modulo_ideal", false, err.what());
            }
            if (oracle_ok) {
                check_bool(pname, "oracle_equality", "remainder_modulo_ideal", true);
                auto hp = [p](unsigned prec) { return poly_height(p, prec); };
                Int a_val = rem.a;
                check_leq(pname, "rem_denominator", "remainder_height",
                          [a_val](unsigned prec) { return log2_interval(a_val, prec); },
                          [&, prof, delta = basis.delta, dp, hp](unsigned prec) {
                              return sab("rem_denominator",
                                         remainder_bounds(prof(prec), delta, dp, hp(prec), prec)
                                             .denominator);
                          });
                Int max_n = 0;
                for (const Int& c : rem.N) max_n = std::max(max_n, Int(abs(c)));
                if (max_n > 0) {
                    check_leq(pname, "rem_numerator", "remainder_height",
                              [max_n](unsigned prec) { return log2_interval(max_n, prec); },
                              [&, prof, delta = basis.delta, dp, hp](unsigned prec) {
                                  return sab("rem_numerator",
                                             remainder_bounds(prof(prec), delta, dp, hp(prec), prec)
                                                 .numerator);
                              });
                }
            }

            // value bounds at the points
            std::vector<Rat> vals;
            for (const auto& pt : V.points()) vals.push_back(p.eval(pt));
            std::vector<Rat> nonzero_vals;
            for (const Rat& v : vals)
                if (v != 0) nonzero_vals.push_back(abs(v));
            auto hp = [p](unsigned prec) { return poly_height(p, prec); };
            if (!nonzero_vals.empty()) {
                auto max_log = [nonzero_vals](unsigned prec) {
                    LogVal m = log2_interval(nonzero_vals[0], prec);
                    for (std::size_t i = 1; i < nonzero_vals.size(); ++i)
                        m = lv_max(m, log2_interval(nonzero_vals[i], prec));
                    return m;
                };
                auto max_abs_log = [nonzero_vals](unsigned prec) {
                    LogVal m = log2_interval(nonzero_vals[0], prec).abs();
                    for (std::size_t i = 1; i < nonzero_vals.size(); ++i)
                        m = lv_max(m, log2_interval(nonzero_vals[i], prec).abs());
                    return m;
                };
                check_leq(pname, "value_upper", "value_upper_bound", max_log,
                          [&, prof, dp, hp](unsigned prec) {
                              return sab("value_upper",
                                         value_bounds(prof(prec), dp, hp(prec), prec).upper);
                          });
                check_leq(pname, "value_two_sided", "value_two_sided_bound", max_abs_log,
                          [&, prof, dp, hp](unsigned prec) {
                              return sab("value_two_sided",
                                         value_bounds(prof(prec), dp, hp(prec), prec).two_sided);
                          });
            }
            std::vector<Rat> val_gaps;
            for (std::size_t a = 0; a < vals.size(); ++a)
                for (std::size_t b = a + 1; b < vals.size(); ++b) {
                    Rat gap = abs(vals[a] - vals[b]);
                    if (gap != 0) val_gaps.push_back(gap);
                }
            if (!val_gaps.empty()) {
                auto max_gap_log = [val_gaps](unsigned prec) {
                    LogVal m = log2_interval(val_gaps[0], prec).abs();
                    for (std::size_t i = 1; i < val_gaps.size(); ++i)
                        m = lv_max(m, log2_interval(val_gaps[i], prec).abs());
                    return m;
                };
                check_leq(pname, "value_difference", "value_difference_bound", max_gap_log,
                          [&, prof, dp, hp](unsigned prec) {
                              return sab("value_difference",
                                         value_bounds(prof(prec), dp, hp(prec), prec).difference);
                          });
            }
        }
    }

    // ---- phases ---------------------------------------------------------

    void v2_tightness(const std::vector<GalleryCase>& cases) {
        for (const GalleryCase& c : cases) {
            if (c.family != "V2") continue;
            const Int radicand = *c.expected_height_radicand;
            const long t = *c.expected_log2_last_coord;  // d^{n-1} h
            // d^{n-1}h <= h(V2): 4^t <= R, exact
            check_bool(c.name, "v2_height_lower", "height_tightness",
                       pow2(static_cast<unsigned long>(2 * t)) <= radicand);
            // h(V2) <= d^{n-1}h + (1/2)log2(n+1): R <= (n+1) 4^t, exact
            Rat rhs = Rat(Int(c.n + 1) * pow2(static_cast<unsigned long>(2 * t))) *
                      sab_pow4("v2_upper");
            check_bool(c.name, "v2_upper", "height_tightness", Rat(radicand) <= rhs);

            SystemProfile prof0 = make_profile(c.system, cfg_.precision);
            int pinned = prof0.distinguished;
            auto prof = [&, pinned](unsigned prec) {
                return make_profile(c.system, prec, pinned);
            };
            auto exact_height = [radicand](unsigned prec) {
                return log2_interval(radicand, prec).halved();
            };
            check_leq(c.name, "v2_abi_sharp", "arithmetic_bezout", exact_height,
                      [&, prof](unsigned prec) {
                          return sab("abi_sharp",
                                     arith_bezout_height_bound(prof(prec), prec).sharp);
                      });
        }
    }

    void v3_and_v1_extras(const std::vector<GalleryCase>& cases) {
        for (const GalleryCase& c : cases) {
            if (c.family == "V3") {
                // the exact last coordinate margin: log2 zeta_n = -d^{n-1} h
                const Rat& last = c.variety->points()[0][c.n - 1];
                bool exact_coord =
                    last == make_rat(Int(1), pow2(static_cast<unsigned long>(
                                                 -*c.expected_log2_last_coord)));
                SystemProfile prof = make_profile(c.system, cfg_.precision);
                LogVal lower = root_bounds(prof, cfg_.precision).coord_lower;
                check_bool(c.name, "v3_exact_coord", "coordinate_lower_bound", exact_coord,
                           "log2 zeta_n = " + std::to_string(*c.expected_log2_last_coord) +
                               ", bound = " + lower.hi().to_decimal());
            }
            if (c.family == "V1") {
                SystemProfile prof = make_profile(c.system, cfg_.precision);
                Int bound = bezout_degree_bound(prof);
                check_bool(c.name, "v1_degree_attained", "bezout_inequality",
                           bound == *c.expected_degree,
                           "deg(V1) = " + to_string(*c.expected_degree));
            }
        }
    }

    void gallery_battery(const std::vector<GalleryCase>& cases) {
        std::uint64_t idx = 0;
        for (const GalleryCase& c : cases) {
            ++idx;
            if (!c.variety) continue;
            SplitMix64 rng = SplitMix64::stream(cfg_.seed, 0x67616c6c65727979ull, idx);
            RUR rur = build_rur(*c.variety, find_separating_form(*c.variety));
            std::vector<MPoly> pres = ideal_presentation(*c.variety, rur);
            int pinned = make_profile(pres, cfg_.precision).distinguished;
            battery(c.name, *c.variety, rur, pres, pinned, rng);
        }
    }

    void random_battery() {
        for (int i = 0; i < cfg_.variety_count; ++i) {
            RandomVariety rv = random_variety(cfg_, static_cast<std::uint64_t>(i));
            SplitMix64 rng = SplitMix64::stream(cfg_.seed, 0x72616e646f6d7070ull,
                                                static_cast<std::uint64_t>(i));
            battery("random" + std::to_string(i), rv.V, rv.rur, rv.presentation,
                    rv.profile.distinguished, rng);
        }
    }

    void nss_phase(const std::vector<GalleryCase>& cases) {
        // generated empty systems
        for (int i = 0; i < cfg_.nss_empty_count; ++i) {
            SuiteConfig small = cfg_;
            small.n_max = std::min(cfg_.n_max, 2);
            small.D_max = std::min(cfg_.D_max, 3L);
            RandomVariety rv = random_variety(small, 0x1000u + static_cast<std::uint64_t>(i));
            SplitMix64 rng = SplitMix64::stream(cfg_.seed, 0x6e73732d656d7074ull,
                                                static_cast<std::uint64_t>(i));
            // append x1 - q, q avoiding every first coordinate
            Rat q;
            for (;;) {
                q = detail::random_rat(rng, small.coord_bound);
                bool clash = false;
                for (const auto& pt : rv.V.points())
                    if (pt[0] == q) clash = true;
                if (!clash) break;
            }
            MPoly extra = MPoly::variable(rv.V.n(), 0) - MPoly::constant(rv.V.n(), q);
            PrimitivePart pp = primitive_part(extra);  // clear the denominator
            std::vector<MPoly> sys = rv.presentation;
            sys.push_back(pp.primitive);
            run_nss_case("empty" + std::to_string(i), sys, std::nullopt);
        }
        // NSS2 gallery instances with the forced height lower bound
        for (const GalleryCase& c : cases) {
            if (c.family != "NSS2") continue;
            Int forced = pow2(static_cast<unsigned long>(
                int_pow(c.d, static_cast<unsigned long>(c.n)).get_ui() *
                static_cast<unsigned long>(c.h)));
            run_nss_case(c.name, c.system, forced);
        }
    }

    void run_nss_case(const std::string& cname, const std::vector<MPoly>& sys,
                      std::optional<Int> min_a) {
        SystemProfile prof = make_profile(sys, cfg_.precision);
        Int bound = sab_int("nss_degree", nss_bounds(prof, cfg_.precision).degree);
        Int cap = std::min(bound, Int(cfg_.delta_cap));
        if (cap < 1 || cap > cfg_.delta_cap) {
            check_bool(cname, "nss_certificate", "arithmetic_nullstellensatz", false,
                       "degree cap " + to_string(cap) + " is unusable");
            return;
        }
        auto id = nss_search(sys, cap.get_si());
        if (!id) {
            check_bool(cname, "nss_certificate", "arithmetic_nullstellensatz", false,
                       "no certificate up to degree " + to_string(cap));
            return;
        }
        bool ok = verify_identity(*id, sys);
        check_bool(cname, "nss_certificate", "arithmetic_nullstellensatz", ok,
                   "delta = " + std::to_string(id->delta) + ", h(a) = log2(" + to_string(id->a) +
                       ")");
        if (min_a)
            check_bool(cname, "nss2_height_attained", "arithmetic_nullstellensatz",
                       id->a >= *min_a, "a = " + to_string(id->a));
    }

    void perron_phase() {
        for (int n = 1; n <= 2; ++n)
            for (long h = 1; h <= 2; ++h) {
                const long d = 2;
                GalleryCase c = nss2_case(n, d, h);
                std::string cname = "perron_chain(n=" + std::to_string(n) +
                                    ",h=" + std::to_string(h) + ")";
                std::vector<long> degs;
                std::vector<LogVal> heights;
                for (const MPoly& f : c.system) {
                    degs.push_back(f.degree());
                    heights.push_back(poly_height(f, cfg_.precision));
                }
                PerronBounds pb = perron_bounds(degs, heights, cfg_.precision);
                Int cap = sab_int("perron_degree", pb.weighted_degree);
                std::vector<PerronRelation> rels;
                try {
                    rels = perron_search(c.system,
                                         cap == pb.weighted_degree ? std::nullopt
                                                                   : std::optional<Int>(cap));
                } catch (const InternalError& err) {
                    check_bool(cname, "perron_nonempty", "arithmetic_perron", false, err.what());
                    continue;
                }
                check_bool(cname, "perron_nonempty", "arithmetic_perron", !rels.empty(),
                           std::to_string(rels.size()) + " relation(s)");
                Int dn = int_pow(d, static_cast<unsigned long>(n));
                Int min_height = pow2(dn.get_ui() * static_cast<unsigned long>(h));
                for (std::size_t r = 0; r < rels.size(); ++r) {
                    const MPoly& P = rels[r].relation;
                    std::string rn = cname + "/rel" + std::to_string(r);
                    long deg_y1 = 0;
                    Int max_coeff = 0;
                    for (const auto& [e, q] : P.terms()) {
                        deg_y1 = std::max<long>(deg_y1, e[0]);
                        max_coeff = std::max(max_coeff, Int(abs(q.get_num())));
                    }
                    check_bool(rn, "perron_lower_deg", "perron_example", Int(deg_y1) >= dn,
                               "deg_y1 = " + std::to_string(deg_y1));
                    check_bool(rn, "perron_lower_height", "perron_example",
                               max_coeff >= min_height, "max |c| = " + to_string(max_coeff));
                    if (n == 1)
                        check_bool(rn, "perron_minimal_attained", "perron_example",
                                   max_coeff == min_height);
                    // per-monomial height bound
                    std::vector<std::pair<Int, Exponents>> terms;
                    for (const auto& [e, q] : P.terms())
                        terms.emplace_back(abs(q.get_num()), e);
                    auto exact_side = [terms, heights](unsigned prec) {
                        bool any = false;
                        LogVal m = LogVal::exact_int(0);
                        for (const auto& [coeff, e] : terms) {
                            LogVal t = log2_interval(coeff, prec);
                            for (std::size_t i = 0; i < e.size(); ++i)
                                t = t + heights[i] * Int(e[i]);
                            m = any ? lv_max(m, t) : t;
                            any = true;
                        }
                        return m;
                    };
                    check_leq(rn, "perron_height", "arithmetic_perron", exact_side,
                              [&, degs, heights](unsigned prec) {
                                  return sab("perron_height",
                                             perron_bounds(degs, heights, prec).height);
                              });
                }
            }
    }

private:
    void push(CheckRecord r) {
        if (!r.pass) ++rep_.failures;
        rep_.checks.push_back(std::move(r));
    }

    const SuiteConfig& cfg_;
    SuiteReport rep_;
};

}  // namespace detail

// Runs every inequality check end to end and returns the report; any false
// or unresolved verdict counts as a failure.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    detail::SuiteRunner runner(cfg);
    std::vector<GalleryCase> cases = gallery();
    runner.timed("v2_tightness", [&] { runner.v2_tightness(cases); });
    runner.timed("gallery_extras", [&] { runner.v3_and_v1_extras(cases); });
    runner.timed("gallery_battery", [&] { runner.gallery_battery(cases); });
    runner.timed("random_battery", [&] { runner.random_battery(); });
    runner.timed("nss", [&] { runner.nss_phase(cases); });
    runner.timed("perron", [&] { runner.perron_phase(); });
    return runner.take_report();
}

}  // namespace zerodim

#endif
