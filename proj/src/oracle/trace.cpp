#include "bif/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace bif::oracle {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& q) {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

struct RealPoly {
    std::vector<std::vector<Real>> c;  // c[j] = coefficients in x of y^j
    explicit RealPoly(const BiPoly& p) {
        for (auto& u : p.as_poly_in_y()) {
            std::vector<Real> row;
            for (int i = 0; i <= u.deg(); ++i) row.push_back(to_real(u[i]));
            c.push_back(std::move(row));
        }
    }
    Real operator()(const Real& x, const Real& y) const {
        Real acc = 0;
        for (size_t j = c.size(); j-- > 0;) {
            Real r = 0;
            for (size_t i = c[j].size(); i-- > 0;) r = r * x + c[j][i];
            acc = acc * y + r;
        }
        return acc;
    }
};

Real midpoint(const Elem& e) {
    Encl E = e.enclose(240);
    return to_real((E.lo_q() + E.hi_q()) / 2);
}

}  // namespace

ArcLimitEstimate numeric_arc_limit(const BiPoly& f, const BiPoly& h, const ArcSample& arc, const Rational& R,
                                   int doublings) {
    RealPoly F(f), H(h), Hx(differentiate(h, Var::X)), Hy(differentiate(h, Var::Y));
    Real x = midpoint(arc.point.x), y = midpoint(arc.point.y);
    Real rho = to_real(R);
    const Real tol = Real(1e-40);

    // Newton on (h, x^2 + y^2 - r^2).
    auto correct = [&](Real& px, Real& py, const Real& r) {
        for (int it = 0; it < 12; ++it) {
            Real g1 = H(px, py), g2 = px * px + py * py - r * r;
            Real a = Hx(px, py), b = Hy(px, py), c = 2 * px, d = 2 * py;
            Real det = a * d - b * c;
            if (det == 0) return false;
            Real dx = (g1 * d - b * g2) / det, dy = (a * g2 - g1 * c) / det;
            px -= dx;
            py -= dy;
            if (abs(dx) + abs(dy) < tol * r) return true;
        }
        return false;
    };
    if (!correct(x, y, rho)) throw Error(ErrorCode::TraceFailed, "arc sample does not refine on the Milnor curve");

    ArcLimitEstimate out;
    const int K = 2 * doublings;
    Real step = rho / 32;
    for (int k = 0; k <= K; ++k) {
        Real target = to_real(R) * pow(Real(2), Real(k) / 2);
        while (rho < target) {
            Real r1 = rho + step > target ? target : rho + step;
            // tangent (-h_y, h_x), oriented outward
            Real tx = -Hy(x, y), ty = Hx(x, y);
            if (tx * x + ty * y < 0) {
                tx = -tx;
                ty = -ty;
            }
            Real radial = (tx * x + ty * y) / rho;
            if (radial <= 0) throw Error(ErrorCode::TraceFailed, "Milnor curve tangent to a circle during the trace");
            Real s = (r1 - rho) / radial;
            Real px = x + s * tx, py = y + s * ty;
            if (correct(px, py, r1) && abs(px - x - s * tx) + abs(py - y - s * ty) < (r1 - rho) / 4) {
                x = px;
                y = py;
                rho = r1;
                step *= Real(1.5);
            } else {
                step /= 2;
                if (step < rho * Real(1e-12)) throw Error(ErrorCode::TraceFailed, "step size underflow");
            }
        }
        out.radii.push_back(static_cast<double>(rho));
        out.values.push_back(static_cast<double>(F(x, y)));
    }

    const auto& v = out.values;
    auto d = [&](int k) { return v[static_cast<size_t>(k)] - v[static_cast<size_t>(k - 1)]; };
    if (std::fabs(d(K)) > std::fabs(d(K - 1)) && std::fabs(d(K - 1)) > std::fabs(d(K - 2)) &&
        std::fabs(v[static_cast<size_t>(K)]) > std::fabs(v[static_cast<size_t>(K - 2)])) {
        int sg = v[static_cast<size_t>(K)] > 0 ? 1 : -1;
        throw TraceDivergedError(sg, std::string("f grows to ") + (sg > 0 ? "+" : "-") + "infinity along the arc");
    }
    // Aitken's delta-squared on the last triples.
    auto aitken = [&](int k) {
        double a = d(k), b = d(k - 1), den = a - b;
        if (den == 0) return v[static_cast<size_t>(k)];
        return v[static_cast<size_t>(k)] - a * a / den;
    };
    out.estimate = aitken(K);
    // Spread of the last Aitken values, with a safety factor.
    out.error = 4 * std::max(std::fabs(out.estimate - aitken(K - 1)), std::fabs(out.estimate - aitken(K - 2)));
    out.error = std::max(out.error, 1e-12 * std::fabs(v[static_cast<size_t>(K)]));
    return out;
}

}  // namespace bif::oracle
