#ifndef ZERODIM_SERIALIZE_HPP
#define ZERODIM_SERIALIZE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerodim/bounds.hpp"
#include "zerodim/logval.hpp"
#include "zerodim/mpoly.hpp"
#include "zerodim/nss.hpp"
#include "zerodim/parse.hpp"
#include "zerodim/perron.hpp"
#include "zerodim/profile.hpp"
#include "zerodim/quotient.hpp"
#include "zerodim/rur.hpp"
#include "zerodim/suite.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

// All potentially large numbers are emitted as exact decimal strings; key
// order is fixed so that serialized reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

inline Json json_of(const LogVal& v) {
    return Json{{"lo", v.lo().to_decimal()}, {"hi", v.hi().to_decimal()}, {"exact", v.exact_point()}};
}

inline Json json_terms(const MPoly& f) {
    Json terms = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Json t;
        t["coeff"] = to_string(it->second);
        t["exponents"] = it->first;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Json json_of(const PointVariety& v) {
    Json pts = Json::array();
    for (const auto& p : v.points()) {
        Json row = Json::array();
        for (const Rat& x : p) row.push_back(to_string(x));
        pts.push_back(std::move(row));
    }
    return pts;
}

inline Json json_of(const RUR& r) {
    Json u = Json::array();
    for (const Int& ui : r.u) u.push_back(to_string(ui));
    Json omega = Json::array();
    auto dense_strings = [](const UPoly& w) {
        Json c = Json::array();
        for (const Rat& q : to_dense(w)) c.push_back(to_string(q));
        return c;
    };
    omega.push_back(dense_strings(r.omega0));
    for (const UPoly& wi : r.omega) omega.push_back(dense_strings(wi));
    return Json{{"u", std::move(u)}, {"omega", std::move(omega)}};
}

inline Json json_of(const SystemProfile& p) {
    Json heights = Json::array();
    for (const LogVal& h : p.heights) heights.push_back(json_of(h));
    return Json{{"n", p.n},
                {"s", p.s},
                {"degrees", p.degs},
                {"heights", std::move(heights)},
                {"distinguished", p.distinguished + 1}};
}

inline Json json_of(const Remainder& r, const MonomialBasis& basis) {
    Json numer = Json::array();
    for (const Int& c : r.N) numer.push_back(to_string(c));
    Json mons = Json::array();
    for (const Exponents& e : basis.monomials) mons.push_back(e);
    Json ratios = Json::array();
    for (const Rat& q : r.column_ratios) ratios.push_back(to_string(q));
    Json coeffs = Json::array();
    for (std::size_t j = 0; j < r.N.size(); ++j) coeffs.push_back(to_string(make_rat(r.N[j], r.a)));
    return Json{{"a", to_string(r.a)},
                {"numerator", std::move(numer)},
                {"coefficients", std::move(coeffs)},
                {"basis", std::move(mons)},
                {"basis_degree", basis.delta},
                {"column_ratios", std::move(ratios)},
                {"clearing", to_string(r.lambda)}};
}

inline Json json_of(const BezoutIdentity& id) {
    Json cof = Json::array();
    for (const MPoly& g : id.cofactors) cof.push_back(json_terms(g));
    return Json{{"a", to_string(id.a)}, {"delta", id.delta}, {"cofactors", std::move(cof)}};
}

inline Json json_of(const PerronRelation& r) { return Json{{"relation", json_terms(r.relation)}}; }

// Full bound report for a system: every applicable closed-form bound, with
// exact-integer bounds emitted as point intervals.
inline Json bound_report_json(const SystemProfile& prof, const std::vector<MPoly>& sys,
                              const std::optional<MPoly>& p, unsigned prec) {
    Json bounds = Json::array();
    auto add_int = [&](const char* name, const char* theorem, const Int& v) {
        bounds.push_back(Json{{"name", name},
                              {"theorem", theorem},
                              {"lo", to_string(v)},
                              {"hi", to_string(v)},
                              {"exact", true}});
    };
    auto add = [&](const char* name, const char* theorem, const LogVal& v) {
        bounds.push_back(Json{{"name", name},
                              {"theorem", theorem},
                              {"lo", v.lo().to_decimal()},
                              {"hi", v.hi().to_decimal()},
                              {"exact", v.exact_point()}});
    };

    Int deg_bound = bezout_degree_bound(prof);
    add_int("bezout_degree", "bezout_inequality", deg_bound);
    AbiBounds abi = arith_bezout_height_bound(prof, prec);
    add("abi_sharp", "arithmetic_bezout", abi.sharp);
    add("abi_coarse", "arithmetic_bezout", abi.coarse);
    RootBounds rb = root_bounds(prof, prec);
    add("root_upper", "coordinate_upper_bound", rb.upper);
    add("coord_lower", "coordinate_lower_bound", rb.coord_lower);
    add("separation", "separation_bound", rb.separation);
    NssBounds nb = nss_bounds(prof, prec);
    add_int("nss_degree", "arithmetic_nullstellensatz", nb.degree);
    add("nss_height", "arithmetic_nullstellensatz", nb.height);
    if (deg_bound.fits_slong_p()) {
        long D = deg_bound.get_si();
        add("shape_height", "arithmetic_shape_lemma", shape_height_bound(prof, D, prec));
        if (p) {
            long dp = p->is_zero() ? 0 : p->degree();
            LogVal hp = p->is_zero() ? LogVal::zero() : poly_height(*p, prec);
            ValueBounds vb = value_bounds(prof, dp, hp, prec);
            add("value_upper", "value_upper_bound", vb.upper);
            add("value_two_sided", "value_two_sided_bound", vb.two_sided);
            add("value_difference", "value_difference_bound", vb.difference);
            UmapBounds ub = umap_bounds(prof, dp, dp, hp, prec);
            add("umap_monomial", "umap_height", ub.monomial);
            add("umap_poly", "umap_height", ub.poly);
            RemainderBounds remb = remainder_bounds(prof, D - 1, dp, hp, prec);
            add("rem_denominator", "remainder_height", remb.denominator);
            add("rem_numerator", "remainder_height", remb.numerator);
        }
    }
    if (prof.s == prof.n + 1 &&
        std::all_of(prof.degs.begin(), prof.degs.end(), [](long d) { return d >= 1; })) {
        PerronBounds pb = perron_bounds(prof.degs, prof.heights, prec);
        add_int("perron_degree", "arithmetic_perron", pb.weighted_degree);
        add("perron_height", "arithmetic_perron", pb.height);
    }

    Json systems = Json::array();
    for (const MPoly& f : sys) systems.push_back(print_poly(f));
    Json out{{"bounds", std::move(bounds)}, {"profile", json_of(prof)}, {"system", systems}};
    if (p) out["poly"] = print_poly(*p);
    Json warnings = Json::array();
    if (prof.underdetermined())
        warnings.push_back("s < n: the system may not be zero-dimensional; the degree product "
                           "uses the available factors");
    out["warnings"] = std::move(warnings);
    return out;
}

inline Json json_of(const SuiteConfig& cfg) {
    return Json{{"seed", cfg.seed},
                {"variety_count", cfg.variety_count},
                {"polys_per_variety", cfg.polys_per_variety},
                {"n_max", cfg.n_max},
                {"D_max", cfg.D_max},
                {"coord_bound", cfg.coord_bound},
                {"dp_max", cfg.dp_max},
                {"hp_max", cfg.hp_max},
                {"precision", cfg.precision},
                {"precision_cap", cfg.precision_cap},
                {"delta_cap", cfg.delta_cap},
                {"nss_empty_count", cfg.nss_empty_count},
                {"sabotage", cfg.sabotage}};
}

// Deterministic: identical (seed, config, precision) give byte-identical
// serializations. Timings are intentionally not part of the document.
inline Json json_of(const SuiteReport& rep, const SuiteConfig& cfg) {
    Json checks = Json::array();
    for (const CheckRecord& r : rep.checks) {
        Json c{{"case", r.case_name},
               {"check", r.check},
               {"theorem", r.theorem},
               {"verdict", r.verdict}};
        if (r.has_values) {
            c["exact"] = json_of(r.exact);
            c["bound"] = json_of(r.bound);
            c["margin"] = r.margin;
        }
        if (!r.note.empty()) c["note"] = r.note;
        checks.push_back(std::move(c));
    }
    return Json{{"config", json_of(cfg)},
                {"checks", std::move(checks)},
                {"failures", rep.failures},
                {"passed", rep.passed()}};
}

}  // namespace zerodim

#endif
