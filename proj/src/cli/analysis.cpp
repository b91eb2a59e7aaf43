#include "bif/analysis.hpp"
#include "bif/error.hpp"

namespace bif {

Analysis analyze(const BiPoly& input, const AnalysisOptions& opt) {
    if (input.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "constant input has no Milnor arcs");
    Analysis A;
    A.input = input;
    PrimitiveInput pi = ensure_primitive(input);
    A.f = pi.f;
    BifurcationReport& r = A.report;
    r.primitivity = pi.info;

    A.mu = mu_set(A.f);
    r.radius = milnor_radius(A.mu, opt.radius_override, isolated_critical_points(A.f));
    const Rational& R = r.radius.R;
    A.J = milnor_poly(A.f);
    A.h = A.mu.h;

    auto samples = circle_arc_points(A.h, R);
    auto bands = band_signs(A.J, samples, R);
    LieTower tower(A.f);
    size_t n = samples.size();
    std::vector<RhoType> types;
    std::vector<Monotonicity> mono;
    for (size_t i = 0; i < n; ++i) {
        MilnorArc a;
        a.sample = samples[i];
        a.band_before = bands[(i + n - 1) % n];
        a.band_after = bands[i];
        a.monotonicity = arc_monotonicity(A.f, a.sample);
        if (a.monotonicity != Monotonicity::Singular) a.rho_type = rho_type(tower, a.sample, a.band_before, a.band_after);
        types.push_back(a.rho_type);
        mono.push_back(a.monotonicity);
        r.arcs.push_back(std::move(a));
    }
    auto bad = alternation_violations(types, mono);
    if (!bad.empty())
        throw Error(ErrorCode::ClassifierDisagreement,
                    "consecutive extremal arcs of one type ending at arc " + std::to_string(bad[0] + 1));

    A.branches = all_branches(A.h, A.f.total_degree(), opt.trunc_extra);
    r.infinity_points = A.branches.points;
    A.matching = match_arcs(A.h, samples, R, A.branches);
    Germ fg;
    int last_point = -1;
    for (size_t i = 0; i < n; ++i) {
        auto& a = r.arcs[i];
        a.branch = A.matching.branch_of_arc[i];
        const auto& b = A.branches.branches[static_cast<size_t>(a.branch)];
        if (b.point != last_point) {
            last_point = b.point;
            fg = chart_germ(A.f, A.branches.points[static_cast<size_t>(b.point)], A.branches.slopes[static_cast<size_t>(b.point)]);
        }
        a.limit = branch_limit(fg, A.f.total_degree(), b);
        // f is strictly monotone along the arc, so the limit lies on the side it moves toward
        if (a.monotonicity == Monotonicity::Singular) continue;
        bool inc = a.monotonicity == Monotonicity::Increasing;
        bool ok;
        if (a.limit.kind == LimitValue::Kind::Finite)
            ok = compare(eval_at(A.f, a.sample.point.x, a.sample.point.y), a.limit.value) == (inc ? -1 : 1);
        else
            ok = (a.limit.kind == LimitValue::Kind::PlusInfinity) == inc;
        if (!ok)
            throw Error(ErrorCode::Internal, "arc " + std::to_string(i + 1) + ": limit " + a.limit.str() +
                                                 " contradicts its monotonicity");
    }
    r.critical_values = critical_values(A.f);
    verdict(r);
    return A;
}

}  // namespace bif
