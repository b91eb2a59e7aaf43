#pragma once

#include "bif/bipoly.hpp"
#include "bif/realroots.hpp"

#include <vector>

namespace bif {

enum class Monotonicity { Increasing, Decreasing, Singular };
enum class RhoType { Max, Min, Inflectional };

const char* monotonicity_name(Monotonicity m);
const char* rho_type_name(RhoType r);

// Intersection of the Milnor curve with C_R.  Points are parametrized by
// t = tan(angle/2): (R(1-t^2)/(1+t^2), 2Rt/(1+t^2)); the point at angle pi has no t.
struct ArcSample {
    int index = 0;  // 1-based, counterclockwise from the positive x-axis
    PlaneBox point;
    bool at_pi = false;
    Elem t;
    double angle = 0;  // in [0, 2*pi), for display
};

std::vector<ArcSample> circle_arc_points(const BiPoly& h, const Rational& R);

Monotonicity arc_monotonicity(const BiPoly& f, const ArcSample& s);

// bands[i] is the sign of J on the open arc of C_R from sample i to sample i+1 (cyclic, 0-based).
std::vector<Sign> band_signs(const BiPoly& J, const std::vector<ArcSample>& samples, const Rational& R);

// Order of tangency of the fibre with the circle through the Lie-derivative
// tower S_m = L^m(J), L(g) = f_x g_y - f_y g_x; checked against the adjacent band signs.
RhoType rho_type(const BiPoly& f, const ArcSample& s, Sign band_before, Sign band_after);

// Lazily extended tower S_1, S_2, ... shared across arcs of one polynomial.
class LieTower {
public:
    explicit LieTower(const BiPoly& f);
    const BiPoly& S(int m);  // m >= 1
    int cap() const { return cap_; }

private:
    BiPoly fx_, fy_;
    std::vector<BiPoly> s_;
    int cap_;
};
RhoType rho_type(LieTower& tower, const ArcSample& s, Sign band_before, Sign band_after);

// Within each cyclic run of arcs with one monotonicity, consecutive extremal
// arcs (Inflectional ones skipped) must alternate Max/Min.  Returns the 0-based
// index of the second arc of every offending pair.  Across a change of
// monotonicity no constraint applies: f = x has two consecutive Min arcs.
std::vector<int> alternation_violations(const std::vector<RhoType>& types, const std::vector<Monotonicity>& mono);

}  // namespace bif
