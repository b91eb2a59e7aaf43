#pragma once

// Branches of the Milnor curve at the line at infinity.
//
// Charts: at [a:1] the affine point (x, y) is ((a+u)/z, 1/z); at [1:0] it is
// (1/z, u/z).  A real half-branch is u = sum a_j T^j, z = s T^n with T > 0 and
// s = +1 or -1.  Running the real Newton-Puiseux iteration once for each sign
// of z enumerates the half-branches directly: for n odd the two signs give the
// halves T > 0 and T < 0 of one series, for n even both halves of a series live
// on the same side of z = 0 and appear as two distinct real series.

#include "bif/arcs.hpp"
#include "bif/bipoly.hpp"
#include "bif/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bif {

struct InfinityPoint {
    bool horizontal = false;  // [1:0]
    AlgebraicReal slope;      // a in [a:1] when not horizontal
    std::string str(int digits = 6) const;
};

// Real zeros of the top form of h, slopes in increasing order, then [1:0].
std::vector<InfinityPoint> infinity_points(const BiPoly& h);

// Polynomial in (u, z) over the tower, dense: c[i][j] multiplies u^i z^j.
struct Germ {
    std::vector<std::vector<Elem>> c;
    const Elem& at(int i, int j) const;
    int deg_u() const { return static_cast<int>(c.size()) - 1; }
};

// z^D g(x, y) written in the chart at p, with D = deg g.
Germ chart_germ(const BiPoly& g, const InfinityPoint& p, const Elem& slope);

struct PuiseuxBranch {
    int point = -1;  // index into the infinity points
    int z_sign = 1;
    int n = 1;  // z = z_sign T^n
    // u = sum over (j, a_j) of a_j T^j; exact through T^trunc_depth.
    std::vector<std::pair<int, Elem>> coefficients;
    int trunc_depth = 0;
    bool terminates = false;  // the series is a polynomial in T (exact for every depth)
    // Exponent at which the branch leaves its nearest sibling at the same point and side.
    int separation = 0;
};

// Real half-branches of h at (0,0) with z of the given sign.  Coefficients
// reach T^(d n + extra).  A factor z (the line at infinity) is ignored.
std::vector<PuiseuxBranch> puiseux_branches(const Germ& h, int z_sign, int d, int extra);

struct LimitValue {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };
    Kind kind = Kind::Finite;
    AlgebraicReal value;
    std::string str(int digits = 6) const;
};
bool same_limit(const LimitValue& a, const LimitValue& b);

// lim f along the branch: f = F(T) / (z_sign T^n)^d with F the chart germ of f.
LimitValue branch_limit(const BiPoly& f, const InfinityPoint& p, const PuiseuxBranch& b);
LimitValue branch_limit(const Germ& f_germ, int d, const PuiseuxBranch& b);

// Every real half-branch of h at every infinity point.
struct BranchSet {
    std::vector<InfinityPoint> points;
    std::vector<Elem> slopes;  // tower elements of the slopes (0 for [1:0])
    std::vector<PuiseuxBranch> branches;
};
BranchSet all_branches(const BiPoly& h, int d, int extra);

struct Matching {
    std::vector<int> branch_of_arc;  // per arc sample on C_R
    Rational outer_radius;         // radius where the assignment was read off
    int ray_crossings = 0;         // signed count of arc crossings of the reference ray
};

// Pairs the arc samples on C_R with the half-branches.  The cyclic order of
// arcs is the same on every circle beyond the Milnor radius; the index shift
// between C_R and C_{R*} is the signed number of arc crossings of a ray, counted
// exactly.  On C_{R*} each sample is assigned to the branch with the smallest
// chart residual, which must win by a wide margin on two consecutive radii.
Matching match_arcs(const BiPoly& h, const std::vector<ArcSample>& samples, const Rational& R,
                    const BranchSet& bs);

}  // namespace bif
