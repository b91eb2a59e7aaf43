#include "bif/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bif {

namespace {

using json = nlohmann::ordered_json;

bool finite(const LimitValue& v) { return v.kind == LimitValue::Kind::Finite; }

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

json limit_json(const LimitValue& v, int digits) {
    switch (v.kind) {
        case LimitValue::Kind::PlusInfinity: return {{"kind", "+infinity"}};
        case LimitValue::Kind::MinusInfinity: return {{"kind", "-infinity"}};
        case LimitValue::Kind::Finite: break;
    }
    return {{"kind", "finite"}, {"value", algebraic_json(v.value, digits)}};
}

json elem_json(const Elem& e, int digits) {
    long bits = static_cast<long>(digits * 3.33) + 16;
    Encl E = e.enclose(bits);
    Rational lo = E.lo_q(), hi = E.hi_q();
    AlgebraicReal mid((lo + hi) / 2);
    std::string err;
    std::string d = mid.decimal(digits, &err);
    Rational half = (hi - lo) / 2;
    double total = std::stod(err) + half.get_d();
    return {{"decimal", d}, {"error", fixed(total, 3)}};
}

std::string point_str(const InfinityPoint& p, int digits) {
    if (p.horizontal) return "[1:0:0]";
    std::string a = p.slope.is_rational() ? p.slope.rational().get_str() : p.slope.decimal(digits);
    return "[" + a + ":1:0]";
}

std::string side_name(oracle::Side s) { return s == oracle::Side::Below ? "below" : "above"; }

std::string value_str(const AlgebraicReal& v, int digits) {
    return v.is_rational() ? v.rational().get_str() : v.decimal(digits);
}

// A fixed annulus sees a fibre escape only while the sweep passes a level
// tangent to its outer circle; the outer radius doubles from 4R until such a
// level lies strictly inside the swept window.
double sweep_outer_radius(const Analysis& a, double lam, oracle::Side side, const oracle::SweepOptions& o) {
    double s = side == oracle::Side::Below ? -1 : 1;
    double t0 = lam + s * o.delta, t1 = lam + s * std::ldexp(o.delta, -(o.steps - 1));
    double lo = std::min(t0, t1), hi = std::max(t0, t1);
    Rational R = a.report.radius.R;
    for (int k = 0; k <= 6; ++k) {
        Rational ro = 4 * R * (1 << k);
        for (double v : oracle::tangency_levels(a.f, a.h, ro))
            if (v > lo && v < hi) return ro.get_d();
    }
    return 4 * R.get_d();
}

}  // namespace

json algebraic_json(const AlgebraicReal& a, int digits) {
    json mp = json::array();
    UPoly p = a.minpoly();
    for (int i = 0; i <= p.deg(); ++i) mp.push_back(p[i].get_str());
    Interval I = a.isolator();
    std::string err;
    std::string d = a.decimal(digits, &err);
    return {{"minpoly", mp}, {"isolator", {I.lo.get_str(), I.hi.get_str()}}, {"decimal", d}, {"error", err}};
}

int exit_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::SyntaxError:
        case ErrorCode::DegreeLimitExceeded:
        case ErrorCode::ConstantPolynomial:
        case ErrorCode::ZeroPolynomial:
        case ErrorCode::OverrideTooSmall: return 1;
        default: return 2;
    }
}

OracleCheck run_oracle_check(const Analysis& a) {
    OracleCheck oc;
    const auto& r = a.report;
    for (auto& arc : r.arcs) {
        OracleArcCheck c;
        c.arc = arc.sample.index;
        try {
            auto e = oracle::numeric_arc_limit(a.f, a.h, arc.sample, r.radius.R);
            c.estimate = e.estimate;
            c.error = e.error;
            bool ok = finite(arc.limit) && std::fabs(e.estimate - arc.limit.value.approx()) <= e.error;
            c.status = ok ? "agrees" : "disagrees";
        } catch (const oracle::TraceDivergedError& e) {
            c.diverged = e.sign();
            bool ok = !finite(arc.limit) && (arc.limit.kind == LimitValue::Kind::PlusInfinity) == (e.sign() > 0);
            c.status = ok ? "agrees" : "disagrees";
        } catch (const Error&) {
            c.status = "trace-failed";
        }
        if (c.status != "agrees") oc.consistent = false;
        oc.arcs.push_back(c);
    }
    // Gap to the nearest other special value keeps each sweep inside one
    // interval, and away from fibres tangent to the inner circle.
    std::vector<double> special = oracle::tangency_levels(a.f, a.h, r.radius.R);
    for (auto& v : r.bifurcation_set) special.push_back(v.approx());
    for (auto& arc : r.arcs)
        if (finite(arc.limit)) special.push_back(arc.limit.value.approx());
    double R = r.radius.R.get_d();
    for (auto& av : r.atypical_regular_values) {
        double lam = av.value.approx();
        double gap = 1;
        for (double s : special)
            if (std::fabs(s - lam) > 1e-9) gap = std::min(gap, std::fabs(s - lam));
        for (oracle::Side side : {oracle::Side::Below, oracle::Side::Above}) {
            bool used = false;
            for (auto& c : r.clusters) {
                if (!finite(c.value) || c.parity != Parity::Odd || compare(c.value.value, av.value) != 0) continue;
                // arcs increasing to lambda carry values below it
                used |= (c.direction == Monotonicity::Increasing) == (side == oracle::Side::Below);
            }
            if (!used) continue;
            oracle::SweepOptions o;
            o.r_in = R;
            o.delta = std::min(0.25, gap / 4);
            o.r_out = sweep_outer_radius(a, lam, side, o);
            Rational lamq = av.value.is_rational() ? av.value.rational() : Rational(lam);
            auto rep = oracle::sweep_census(a.f, lamq, side, o);
            oc.sweeps.push_back({av.value, side, rep.vanishing, rep.splitting});
        }
    }
    bool any = oc.sweeps.empty();
    for (auto& s : oc.sweeps) any |= s.vanishing || s.splitting;
    if (!any) oc.consistent = false;
    return oc;
}

json report_json(const Analysis& a, const std::string& input_text, int digits, const OracleCheck* oracle) {
    const auto& r = a.report;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = {{"text", input_text}, {"polynomial", a.input.str()}};
    json prim = {{"primitive", r.primitivity.primitive},
                 {"translation", {r.primitivity.translation.first.get_str(), r.primitivity.translation.second.get_str()}},
                 {"analysed_polynomial", a.f.str()}};
    if (r.primitivity.center)
        prim["center"] = {r.primitivity.center->first.get_str(), r.primitivity.center->second.get_str()};
    else
        prim["center"] = nullptr;
    if (r.primitivity.radial_profile) prim["radial_profile"] = r.primitivity.radial_profile->str("r");
    else prim["radial_profile"] = nullptr;
    j["primitivity"] = prim;
    j["milnor_polynomial"] = a.h.str();
    j["milnor_radius"] = {{"R", r.radius.R.get_str()}, {"certified_bound", r.radius.certified_bound.get_str()}};

    json pts = json::array();
    for (auto& p : a.mu.isolated_points) pts.push_back({{"x", elem_json(p.x, digits)}, {"y", elem_json(p.y, digits)}});
    json circ = json::array();
    for (auto& c : a.mu.circle_radii_squared) circ.push_back(algebraic_json(c, digits));
    j["mu_set"] = {{"isolated_points", pts}, {"circle_radii_squared", circ}};

    json inf = json::array();
    for (auto& p : r.infinity_points) {
        json q = {{"point", point_str(p, digits)}, {"horizontal", p.horizontal}};
        q["slope"] = p.horizontal ? json(nullptr) : algebraic_json(p.slope, digits);
        inf.push_back(q);
    }
    j["infinity_points"] = inf;

    json arcs = json::array();
    for (auto& arc : r.arcs) {
        const auto& s = arc.sample;
        json o = {{"index", s.index},
                  {"angle", fixed(s.angle, 12)},
                  {"x", elem_json(s.point.x, digits)},
                  {"y", elem_json(s.point.y, digits)},
                  {"monotonicity", monotonicity_name(arc.monotonicity)},
                  {"rho_type", rho_type_name(arc.rho_type)},
                  {"band_before", sign_name(arc.band_before)},
                  {"band_after", sign_name(arc.band_after)},
                  {"limit", limit_json(arc.limit, digits)}};
        o["t"] = s.at_pi ? json(nullptr) : algebraic_json(AlgebraicReal::from_elem(s.t), digits);
        if (arc.branch >= 0) {
            const auto& b = a.branches.branches[static_cast<size_t>(arc.branch)];
            o["branch"] = {{"infinity_point", b.point},
                           {"z_sign", b.z_sign},
                           {"ramification", b.n},
                           {"truncation_depth", b.trunc_depth}};
        }
        arcs.push_back(o);
    }
    j["arcs"] = arcs;

    json cl = json::array();
    for (auto& c : r.clusters) {
        json o = {{"value", limit_json(c.value, digits)},
                  {"direction", monotonicity_name(c.direction)},
                  {"arcs", c.arc_indices},
                  {"extremal_count", c.extremal_count},
                  {"parity", parity_name(c.parity)}};
        o["phenomenon"] = c.phenomenon ? json(phenomenon_name(*c.phenomenon)) : json(nullptr);
        cl.push_back(o);
    }
    j["clusters"] = cl;

    auto list = [&](const std::vector<AlgebraicReal>& v) {
        json out = json::array();
        for (auto& x : v) out.push_back(algebraic_json(x, digits));
        return out;
    };
    j["critical_values"] = list(r.critical_values);
    j["singular_arc_values"] = list(r.singular_arc_values);
    json at = json::array();
    for (auto& v : r.atypical_regular_values) {
        json ph = json::array();
        for (auto p : v.phenomena) ph.push_back(phenomenon_name(p));
        at.push_back({{"value", algebraic_json(v.value, digits)}, {"phenomena", ph}});
    }
    j["atypical_regular_values"] = at;
    j["bifurcation_set"] = list(r.bifurcation_set);

    if (oracle) {
        json oa = json::array();
        for (auto& c : oracle->arcs) {
            json o = {{"arc", c.arc}, {"status", c.status}};
            if (c.diverged) o["diverges_to"] = c.diverged > 0 ? "+infinity" : "-infinity";
            else if (c.status != "trace-failed") o["estimate"] = fixed(c.estimate, 10), o["error"] = fixed(c.error, 3);
            oa.push_back(o);
        }
        json os = json::array();
        for (auto& s : oracle->sweeps)
            os.push_back({{"value", value_str(s.value, digits)},
                          {"side", side_name(s.side)},
                          {"vanishing_signature", s.vanishing},
                          {"splitting_signature", s.splitting}});
        j["oracle"] = {{"consistent", oracle->consistent}, {"arc_limits", oa}, {"sweeps", os}};
    }
    return j;
}

std::string report_text(const Analysis& a, const std::string& input_text, int digits, const OracleCheck* oracle) {
    const auto& r = a.report;
    std::ostringstream os;
    os << "input: " << input_text << "\n";
    os << "f = " << a.input.str() << "\n";
    if (!r.primitivity.primitive) {
        os << "not primitive: f = P((x-a)^2 + (y-b)^2) with center (" << r.primitivity.center->first.get_str() << ", "
           << r.primitivity.center->second.get_str() << ")\n";
    }
    if (r.primitivity.translation != Point2{0, 0})
        os << "analysed f(x + " << r.primitivity.translation.first.get_str() << ", y + "
           << r.primitivity.translation.second.get_str() << ") = " << a.f.str() << "\n";
    os << "Milnor radius R = " << r.radius.R.get_str() << "\n";
    os << "infinity points:";
    for (auto& p : r.infinity_points) os << " " << point_str(p, 6);
    os << "\n";
    os << r.arcs.size() << " arcs on C_R:\n";
    for (auto& arc : r.arcs) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %3d  angle %8.5f  %-10s %-12s limit %s\n", arc.sample.index, arc.sample.angle,
                      monotonicity_name(arc.monotonicity), rho_type_name(arc.rho_type), arc.limit.str(digits).c_str());
        os << buf;
    }
    os << "clusters:\n";
    for (auto& c : r.clusters) {
        os << "  " << c.value.str(digits) << "  " << monotonicity_name(c.direction) << "  {";
        for (size_t k = 0; k < c.arc_indices.size(); ++k) os << (k ? "," : "") << c.arc_indices[k];
        os << "}  " << parity_name(c.parity);
        if (c.phenomenon) os << "  " << phenomenon_name(*c.phenomenon);
        os << "\n";
    }
    auto vals = [&](const std::vector<AlgebraicReal>& v) {
        std::string s = "{";
        for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + value_str(v[k], digits);
        return s + "}";
    };
    os << "critical values: " << vals(r.critical_values) << "\n";
    os << "atypical regular values:";
    if (r.atypical_regular_values.empty()) os << " none";
    for (auto& v : r.atypical_regular_values) {
        os << " " << value_str(v.value, digits) << " (";
        for (size_t k = 0; k < v.phenomena.size(); ++k) os << (k ? ", " : "") << phenomenon_name(v.phenomena[k]);
        os << ")";
    }
    os << "\n";
    os << "bifurcation set: " << vals(r.bifurcation_set) << "\n";
    if (oracle) {
        os << "oracle: " << (oracle->consistent ? "consistent" : "INCONSISTENT") << "\n";
        for (auto& c : oracle->arcs) {
            os << "  arc " << c.arc << ": " << c.status;
            if (c.diverged) os << " (diverges to " << (c.diverged > 0 ? "+inf)" : "-inf)");
            else if (c.status != "trace-failed") os << " (" << fixed(c.estimate, 10) << " +- " << fixed(c.error, 3) << ")";
            os << "\n";
        }
        for (auto& s : oracle->sweeps)
            os << "  sweep toward " << value_str(s.value, digits) << " from " << side_name(s.side)
               << ": vanishing " << (s.vanishing ? "yes" : "no") << ", splitting " << (s.splitting ? "yes" : "no") << "\n";
    }
    return os.str();
}

}  // namespace bif
