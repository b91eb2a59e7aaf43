#include "bif/milnor.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace bif {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly rho() { return X * X + Y * Y; }

// Solves a1*A + a2*B = L coefficientwise. Returns nothing when inconsistent.
std::optional<Point2> solve_matching(const BiPoly& A, const BiPoly& B, const BiPoly& L) {
    std::set<Exp2> keys;
    for (auto* p : {&A, &B, &L})
        for (auto& [e, c] : p->terms()) keys.insert(e);
    std::vector<std::array<Rational, 3>> rows;
    for (auto& e : keys) rows.push_back({A.coeff(e.first, e.second), B.coeff(e.first, e.second), L.coeff(e.first, e.second)});

    std::array<int, 2> pivot_row{-1, -1};
    size_t next = 0;
    for (int col = 0; col < 2; ++col) {
        size_t p = next;
        while (p < rows.size() && sgn(rows[p][static_cast<size_t>(col)]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == next || sgn(rows[r][static_cast<size_t>(col)]) == 0) continue;
            Rational k = rows[r][static_cast<size_t>(col)] / rows[next][static_cast<size_t>(col)];
            for (size_t c = 0; c < 3; ++c) rows[r][c] -= k * rows[next][c];
        }
        pivot_row[static_cast<size_t>(col)] = static_cast<int>(next);
        ++next;
    }
    for (size_t r = next; r < rows.size(); ++r)
        if (sgn(rows[r][2]) != 0) return std::nullopt;
    Point2 a{0, 0};
    if (pivot_row[0] >= 0) {
        auto& row = rows[static_cast<size_t>(pivot_row[0])];
        a.first = row[2] / row[0];
    }
    if (pivot_row[1] >= 0) {
        auto& row = rows[static_cast<size_t>(pivot_row[1])];
        a.second = row[2] / row[1];
    }
    return a;
}

// P with g = P(x^2 + y^2), if g is radial about the origin.
std::optional<UPoly> radial_profile(const BiPoly& g) {
    UPoly g0 = g.eval_var(Var::Y, 0);
    std::vector<Rational> c;
    for (int i = 0; i <= g0.deg(); ++i) {
        if (i % 2 == 1) {
            if (sgn(g0[i]) != 0) return std::nullopt;
        } else {
            c.push_back(g0[i]);
        }
    }
    UPoly P(c);
    BiPoly r = rho(), acc;
    for (int i = P.deg(); i >= 0; --i) acc = acc * r + BiPoly(P[i]);
    if (!(acc == g)) return std::nullopt;
    return P;
}

void require_nonconstant(const BiPoly& f) {
    if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "polynomial is constant");
}

}  // namespace

std::optional<Point2> nonprimitive_center(const BiPoly& f, UPoly* profile) {
    require_nonconstant(f);
    BiPoly fx = differentiate(f, Var::X), fy = differentiate(f, Var::Y);
    // x f_y - y f_x = a1 f_y - a2 f_x
    auto a = solve_matching(fy, -fx, X * fy - Y * fx);
    if (!a) return std::nullopt;
    auto P = radial_profile(f.translate(a->first, a->second));
    if (!P) return std::nullopt;
    if (profile) *profile = *P;
    return a;
}

PrimitiveInput ensure_primitive(const BiPoly& f) {
    PrimitiveInput out{f, {}};
    UPoly P;
    auto a = nonprimitive_center(f, &P);
    if (!a) return out;
    out.info.primitive = false;
    out.info.center = a;
    out.info.radial_profile = P;
    out.info.translation = {a->first + 1, a->second};
    out.f = f.translate(a->first + 1, a->second);
    return out;
}

std::vector<CircleComponent> circle_components(const BiPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "circle_components of zero");
    // Reduce modulo y^2 = c - x^2 with c symbolic: coefficients are polynomials in c,
    // stored as BiPoly in (x, c) using the y slot for c.
    BiPoly C = Y;
    BiPoly w = C - X * X;
    auto gy = g.as_poly_in_y();
    BiPoly r0, r1, wp(1);
    for (size_t j = 0; j < gy.size(); ++j) {
        if (j > 0 && j % 2 == 0) wp = wp * w;
        BiPoly term = BiPoly::from_upoly(gy[j], Var::X) * wp;
        if (j % 2 == 0) r0 += term;
        else r1 += term;
    }
    UPoly G;
    for (auto* r : {&r0, &r1}) {
        // coefficient of x^i as a polynomial in c
        std::map<int, BiPoly> byx;
        for (auto& [e, a] : r->terms()) byx[e.first].add_term(a, 0, e.second);
        for (auto& [i, p] : byx) G = gcd(G, p.eval_var(Var::X, 0));
    }
    std::vector<CircleComponent> out;
    if (G.deg() < 1) return out;
    UPoly Gs = squarefree(G);
    UPoly irrational = Gs;
    std::vector<AlgebraicReal> roots;
    for (auto& c : isolate_real_roots(Gs)) {
        if (c.is_rational()) irrational = irrational / UPoly(std::vector<Rational>{-c.rational(), 1});
        if (compare(c, AlgebraicReal(Rational(0))) > 0) roots.push_back(c);
    }
    BiPoly r = rho(), irr_factor;
    for (int i = irrational.deg(); i >= 0; --i) irr_factor = irr_factor * r + BiPoly(irrational[i]);
    for (auto& c : roots) {
        BiPoly factor = c.is_rational() ? r - BiPoly(c.rational()) : irr_factor;
        out.push_back({c, factor, exact_div(g, factor)});
    }
    return out;
}

std::vector<PlaneBox> radial_sample_points(const BiPoly& s) {
    std::vector<PlaneBox> pts;
    BiPoly comp = X * differentiate(s, Var::Y) - Y * differentiate(s, Var::X);
    if (sgn(s.eval(0, 0)) == 0) pts.push_back(PlaneBox{Elem(0), Elem(0), s, comp});
    if (s.is_constant()) return pts;
    for (auto& cc : circle_components(s)) {
        EPoly q{-cc.c.elem(), Elem(0), Elem(1)};
        auto rts = real_roots(q);
        pts.push_back(PlaneBox{rts.back(), Elem(0), s, comp});
    }
    return pts;
}

MuSet mu_set(const BiPoly& f) {
    require_nonconstant(f);
    BiPoly J = milnor_poly(f);
    if (J.is_zero()) throw Error(ErrorCode::NotPrimitive, "Milnor polynomial vanishes identically");
    MuSet mu;
    mu.h = squarefree_part(J);
    BiPoly comp = X * differentiate(mu.h, Var::Y) - Y * differentiate(mu.h, Var::X);
    BiPoly shared = mu.h;
    if (!comp.is_zero()) {
        auto sol = solve_bivariate(mu.h, comp);
        mu.isolated_points = sol.points;
        shared = sol.shared;
    }
    if (!shared.is_constant()) {
        if (sgn(shared.eval(0, 0)) == 0) mu.isolated_points.push_back(PlaneBox{Elem(0), Elem(0), mu.h, comp});
        for (auto& cc : circle_components(shared)) mu.circle_radii_squared.push_back(cc.c);
    }
    return mu;
}

namespace {

// Rational upper bound on sqrt(q), tight to about 2^-30 relative.
Rational sqrt_upper(const Rational& q) {
    if (sgn(q) <= 0) return 0;
    Rational s = round_up(Rational(std::sqrt(q.get_d())), 32);
    while (s * s < q) s += ldexp(Rational(1), -30) * (s + 1);
    return s;
}

Rational norm2_upper(const PlaneBox& p, long prec) {
    return (p.x * p.x + p.y * p.y).enclose(prec).hi_q();
}

}  // namespace

MilnorRadius milnor_radius(const MuSet& mu, const std::optional<Rational>& override_R,
                           const std::vector<PlaneBox>& critical) {
    auto bound_at = [&](long prec) {
        Rational b2 = 0;
        for (auto& p : mu.isolated_points) b2 = std::max(b2, norm2_upper(p, prec));
        for (auto& p : critical) b2 = std::max(b2, norm2_upper(p, prec));
        for (auto& c : mu.circle_radii_squared) b2 = std::max(b2, c.enclose(prec).hi_q());
        return sqrt_upper(b2);
    };
    MilnorRadius out;
    out.certified_bound = bound_at(64);
    if (!override_R) {
        out.R = Rational(floor(out.certified_bound) + 1);
        return out;
    }
    const Rational& R = *override_R;
    if (sgn(R) <= 0) throw Error(ErrorCode::OverrideTooSmall, "radius must be positive");
    Rational R2 = R * R;
    for (auto& p : mu.isolated_points)
        if ((Elem(R2) - p.x * p.x - p.y * p.y).sign() <= 0)
            throw Error(ErrorCode::OverrideTooSmall, "radius " + to_string(R) + " does not enclose the mu-set");
    for (auto& p : critical)
        if ((Elem(R2) - p.x * p.x - p.y * p.y).sign() <= 0)
            throw Error(ErrorCode::OverrideTooSmall,
                        "radius " + to_string(R) + " does not enclose an isolated critical point");
    for (auto& c : mu.circle_radii_squared)
        if (compare(AlgebraicReal(R2), c) <= 0)
            throw Error(ErrorCode::OverrideTooSmall, "radius " + to_string(R) + " does not enclose a circle component");
    for (long prec = 128; out.certified_bound >= R; prec *= 2) out.certified_bound = bound_at(prec);
    out.R = R;
    return out;
}

MilnorRadius milnor_radius(const BiPoly& f, const std::optional<Rational>& override_R) {
    return milnor_radius(mu_set(f), override_R);
}

std::vector<PlaneBox> isolated_critical_points(const BiPoly& f) {
    BiPoly fx = differentiate(f, Var::X), fy = differentiate(f, Var::Y);
    if (fx.is_zero() || fy.is_zero()) return {};
    return solve_bivariate(fx, fy).points;
}

std::vector<AlgebraicReal> critical_values(const BiPoly& f) {
    BiPoly fx = differentiate(f, Var::X), fy = differentiate(f, Var::Y);
    std::vector<PlaneBox> pts;
    BiPoly G;
    if (fx.is_zero() && fy.is_zero()) return {};
    if (fx.is_zero() || fy.is_zero()) {
        G = fx.is_zero() ? fy : fx;
    } else {
        auto sol = solve_bivariate(fx, fy);
        pts = sol.points;
        G = sol.shared;
    }
    if (!G.is_constant()) {
        // f is constant on each real component of {G = 0}; every component
        // carries a point where the norm restricted to it is critical.
        BiPoly Gs = squarefree_part(G);
        BiPoly comp = X * differentiate(Gs, Var::Y) - Y * differentiate(Gs, Var::X);
        BiPoly radial = Gs;
        if (!comp.is_zero()) {
            auto sol = solve_bivariate(Gs, comp);
            pts.insert(pts.end(), sol.points.begin(), sol.points.end());
            radial = sol.shared;
        }
        auto rp = radial_sample_points(radial);
        pts.insert(pts.end(), rp.begin(), rp.end());
    }
    std::vector<AlgebraicReal> vals;
    for (auto& p : pts) {
        AlgebraicReal v = AlgebraicReal::from_elem(eval_at(f, p.x, p.y));
        if (std::none_of(vals.begin(), vals.end(), [&](const AlgebraicReal& w) { return w == v; })) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace bif
