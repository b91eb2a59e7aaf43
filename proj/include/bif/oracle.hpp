#pragma once

// Floating-point cross-checks.  Nothing here feeds the certified verdict.

#include "bif/arcs.hpp"
#include "bif/bipoly.hpp"
#include "bif/error.hpp"

#include <vector>

namespace bif::oracle {

// Values of p on the grid x_i = x0 + i*step, y_j = y0 + j*step (0 <= i, j <= n),
// row-major by j.  Each row collapses p to a polynomial in x and runs the Horner kernel.
std::vector<double> grid_values(const BiPoly& p, double x0, double y0, double step, int n, bool simd = true);

struct FiberComponent {
    int points = 0;
    double min_norm = 0, max_norm = 0;
    bool touches_outer = false;
    bool touches_inner = false;
};

struct FiberCensus {
    Rational level;
    double r_in = 0, r_out = 0;
    int grid_n = 0;
    double cell = 0;  // grid spacing
    int saddles = 0, refined = 0, unresolved = 0;
    std::vector<FiberComponent> components;  // sorted by min_norm
};

// Marching squares for {f = t} on the bounding square of the annulus; cells
// entirely inside D_{r_in} or entirely outside D_{r_out} are skipped.
FiberCensus fiber_census(const BiPoly& f, const Rational& t, double r_in, double r_out, int grid_n = 256);

struct Segment {
    double x0, y0, x1, y1;
};
// Contour pieces of {f = t} on [-half, half]^2 for drawing; saddles split by the centre value.
std::vector<Segment> contour_segments(const BiPoly& f, const Rational& t, double half, int grid_n);

enum class Side { Below, Above };

struct SweepOptions {
    double r_in = 1, r_out = 4;
    int grid_n = 1024;
    double delta = 0.25;  // first offset |t_0 - lambda|
    int steps = 8;        // t_k = lambda -+ delta 2^-k
};

struct SweepReport {
    std::vector<Rational> levels;
    std::vector<FiberCensus> censuses;
    bool vanishing = false;  // a detached component whose min_norm keeps growing
    bool splitting = false;  // the component count settles on a new value
};

SweepReport sweep_census(const BiPoly& f, const Rational& lambda, Side side, const SweepOptions& opt = {});

// Levels whose fibres are tangent to C_r: f at the points of {h = 0} on C_r.
// A census over an annulus changes its count at these levels for reasons that
// have nothing to do with infinity, so sweep windows should avoid them.
std::vector<double> tangency_levels(const BiPoly& f, const BiPoly& h, const Rational& r);

struct ArcLimitEstimate {
    double estimate = 0, error = 0;
    std::vector<double> radii, values;
};

// Thrown by numeric_arc_limit; sign is the direction of growth.
class TraceDivergedError : public Error {
public:
    TraceDivergedError(int sign, const std::string& what) : Error(ErrorCode::TraceDiverged, what), sign_(sign) {}
    int sign() const { return sign_; }

private:
    int sign_;
};

// Follows the Milnor curve h = 0 from the arc sample on C_R out to radius
// R * 2^doublings and extrapolates f along it.  Throws TraceDiverged when
// the values grow, TraceFailed when the curve cannot be followed.
ArcLimitEstimate numeric_arc_limit(const BiPoly& f, const BiPoly& h, const ArcSample& arc, const Rational& R,
                                   int doublings = 5);

}  // namespace bif::oracle
