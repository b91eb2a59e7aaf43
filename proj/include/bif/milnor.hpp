#pragma once

#include "bif/bipoly.hpp"
#include "bif/realroots.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bif {

using Point2 = std::pair<Rational, Rational>;

struct PrimitivityInfo {
    bool primitive = true;
    std::optional<Point2> center;       // a with f = P(rho_a)
    std::optional<UPoly> radial_profile;  // P
    Point2 translation{0, 0};           // analysed polynomial is f(x + t1, y + t2)
};

// The unique a with f = P((x-a1)^2 + (y-a2)^2), if any; P is stored in *profile.
std::optional<Point2> nonprimitive_center(const BiPoly& f, UPoly* profile = nullptr);

struct PrimitiveInput {
    BiPoly f;
    PrimitivityInfo info;
};
// Moves a degenerate center to (-1, 0) so that the origin is a good center.
PrimitiveInput ensure_primitive(const BiPoly& f);

struct CircleComponent {
    AlgebraicReal c;  // squared radius, > 0
    BiPoly factor;    // x^2+y^2-c, or m(x^2+y^2) for the minpoly m of an irrational c
    BiPoly cofactor;  // g / factor
};
std::vector<CircleComponent> circle_components(const BiPoly& g);

struct MuSet {
    BiPoly h;  // squarefree part of the Milnor polynomial
    std::vector<PlaneBox> isolated_points;
    std::vector<AlgebraicReal> circle_radii_squared;
};
MuSet mu_set(const BiPoly& f);

struct MilnorRadius {
    Rational R;
    Rational certified_bound;  // >= every norm in the mu-set, < R
};
// `critical` lists isolated critical points of f, which must also lie inside
// C_R: an arc through one would not be monotone.
MilnorRadius milnor_radius(const MuSet& mu, const std::optional<Rational>& override_R = std::nullopt,
                           const std::vector<PlaneBox>& critical = {});
MilnorRadius milnor_radius(const BiPoly& f, const std::optional<Rational>& override_R = std::nullopt);

// Isolated real solutions of f_x = f_y = 0.
std::vector<PlaneBox> isolated_critical_points(const BiPoly& f);

// Distinct values of f on {f_x = f_y = 0}, increasing.
std::vector<AlgebraicReal> critical_values(const BiPoly& f);

// Points where circles centred at the origin meet the radial curve {s = 0}:
// the origin when s(0,0) = 0 and (sqrt(c), 0) for every circle factor.
std::vector<PlaneBox> radial_sample_points(const BiPoly& s);

}  // namespace bif
