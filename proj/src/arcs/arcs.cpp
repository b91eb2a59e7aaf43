#include "bif/arcs.hpp"
#include "bif/error.hpp"

#include <cmath>
#include <numbers>

namespace bif {

const char* monotonicity_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "Increasing";
        case Monotonicity::Decreasing: return "Decreasing";
        case Monotonicity::Singular: return "Singular";
    }
    return "?";
}

const char* rho_type_name(RhoType r) {
    switch (r) {
        case RhoType::Max: return "Max";
        case RhoType::Min: return "Min";
        case RhoType::Inflectional: return "Inflectional";
    }
    return "?";
}

namespace {

UPoly upow(const UPoly& p, int e) {
    UPoly r(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// (1+t^2)^d h(R(1-t^2)/(1+t^2), 2Rt/(1+t^2)) with d = deg h.
UPoly circle_restriction(const BiPoly& h, const Rational& R) {
    int d = h.total_degree();
    const UPoly a(std::vector<Rational>{1, 0, -1}), b(std::vector<Rational>{0, 2}), c(std::vector<Rational>{1, 0, 1});
    UPoly H;
    for (auto& [e, coef] : h.terms()) {
        auto [i, j] = e;
        H = H + (coef * pow(R, static_cast<unsigned>(i + j))) * upow(a, i) * upow(b, j) * upow(c, d - i - j);
    }
    return H;
}

std::pair<Rational, Rational> circle_point(const Rational& t, const Rational& R) {
    Rational den = 1 + t * t;
    return {R * (1 - t * t) / den, 2 * R * t / den};
}

// Disjoint enclosures of two distinct reals, which may live in unrelated towers.
// Returns (hi(a), lo(b)) when a < b and (lo(a), hi(b)) when a > b.
std::pair<Rational, Rational> separating_window_any(const Elem& a, const Elem& b) {
    for (long prec = 16; prec <= (1L << 16); prec *= 2) {
        Encl ea = a.enclose(prec), eb = b.enclose(prec);
        if (ea.hi_q() < eb.lo_q()) return {ea.hi_q(), eb.lo_q()};
        if (eb.hi_q() < ea.lo_q()) return {ea.lo_q(), eb.hi_q()};
    }
    throw Error(ErrorCode::Internal, "arc samples do not separate");
}

std::pair<Rational, Rational> separating_window(const Elem& a, const Elem& b) {
    auto w = separating_window_any(a, b);
    if (!(w.first < w.second)) throw Error(ErrorCode::Internal, "arc samples out of order");
    return w;
}

}  // namespace

std::vector<ArcSample> circle_arc_points(const BiPoly& h, const Rational& R) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "circle_arc_points of zero");
    UPoly H = circle_restriction(h, R);
    if (H.is_zero()) throw Error(ErrorCode::TangentialIntersection, "the circle of radius " + to_string(R) + " lies on the curve");
    int drop = 2 * h.total_degree() - H.deg();
    if (drop > 1) throw Error(ErrorCode::TangentialIntersection, "tangential intersection at angle pi");
    UPoly G = gcd(H, H.derivative());
    if (G.deg() > 0 && !real_roots(G).empty())
        throw Error(ErrorCode::TangentialIntersection, "tangential intersection with the circle of radius " + to_string(R));

    BiPoly circle = BiPoly::x() * BiPoly::x() + BiPoly::y() * BiPoly::y() - BiPoly(R * R);
    std::vector<ArcSample> pos, neg;
    for (auto& t : real_roots(H)) {
        ArcSample s;
        s.t = t;
        Elem den = (Elem(1) + t * t).inv();
        s.point = PlaneBox{Elem(R) * (Elem(1) - t * t) * den, Elem(2 * R) * t * den, h, circle};
        double a = 2 * std::atan(t.approx());
        s.angle = a < 0 ? a + 2 * std::numbers::pi : a;
        (t.sign() >= 0 ? pos : neg).push_back(std::move(s));
    }
    std::vector<ArcSample> out = std::move(pos);
    if (drop == 1) {
        ArcSample s;
        s.at_pi = true;
        s.point = PlaneBox{Elem(-R), Elem(0), h, circle};
        s.angle = std::numbers::pi;
        out.push_back(std::move(s));
    }
    for (auto& s : neg) out.push_back(std::move(s));
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i) + 1;
    return out;
}

Monotonicity arc_monotonicity(const BiPoly& f, const ArcSample& s) {
    BiPoly g = BiPoly::x() * differentiate(f, Var::X) + BiPoly::y() * differentiate(f, Var::Y);
    switch (certified_sign(g, s.point)) {
        case Sign::Positive: return Monotonicity::Increasing;
        case Sign::Negative: return Monotonicity::Decreasing;
        case Sign::Zero: return Monotonicity::Singular;
    }
    return Monotonicity::Singular;
}

std::vector<Sign> band_signs(const BiPoly& J, const std::vector<ArcSample>& samples, const Rational& R) {
    size_t n = samples.size();
    std::vector<Sign> out;
    if (n == 0) {
        int s = sgn(J.eval(R, 0));
        if (s == 0) throw Error(ErrorCode::DegenerateBand, "Jacobian vanishes on a circle without arc samples");
        out.push_back(static_cast<Sign>(s));
        return out;
    }
    // Position on the extended t-line, with the angle-pi sample as +infinity.
    auto later = [](const ArcSample& a, const ArcSample& b) {
        if (a.at_pi) return false;
        if (b.at_pi) return true;
        auto [lo, hi] = separating_window_any(a.t, b.t);
        return lo < hi;
    };
    for (size_t i = 0; i < n; ++i) {
        const ArcSample& a = samples[i];
        const ArcSample& b = samples[(i + 1) % n];
        std::vector<Rational> candidates;
        if (n > 1 && later(a, b)) {
            if (b.at_pi) {
                Rational base = Rational(floor(a.t.enclose(8).hi_q()) + 1);
                candidates = {base, base + 1, base + 2};
            } else {
                auto [lo, hi] = separating_window(a.t, b.t);
                Rational w = hi - lo;
                candidates = {simplest_between(lo + w / 4, hi - w / 4), lo + w / 3, lo + 2 * w / 3};
            }
        } else if (!a.at_pi) {
            // the gap runs through angle pi
            Rational base = Rational(floor(a.t.enclose(8).hi_q()) + 1);
            candidates = {base, base + 1, base + 2};
        } else {
            Rational base = Rational(ceil(b.t.enclose(8).lo_q()) - 1);
            candidates = {base, base - 1, base - 2};
        }
        if (n == 1 && a.at_pi) candidates = {0, 1, -1};
        int s = 0;
        for (auto& t : candidates) {
            auto [x, y] = circle_point(t, R);
            s = sgn(J.eval(x, y));
            if (s != 0) break;
        }
        if (s == 0) throw Error(ErrorCode::DegenerateBand, "Jacobian vanishes at every probe of band " + std::to_string(i + 1));
        out.push_back(static_cast<Sign>(s));
    }
    return out;
}

LieTower::LieTower(const BiPoly& f)
    : fx_(differentiate(f, Var::X)), fy_(differentiate(f, Var::Y)), cap_(2 * f.total_degree() * f.total_degree()) {
    s_.push_back(milnor_poly(f));
}

const BiPoly& LieTower::S(int m) {
    while (static_cast<int>(s_.size()) <= m) {
        const BiPoly& g = s_.back();
        s_.push_back(fx_ * differentiate(g, Var::Y) - fy_ * differentiate(g, Var::X));
    }
    return s_[static_cast<size_t>(m)];
}

RhoType rho_type(LieTower& tower, const ArcSample& s, Sign band_before, Sign band_after) {
    bool extremal_by_bands = band_before != band_after;
    for (int m = 1; m <= tower.cap(); ++m) {
        Sign sm = certified_sign(tower.S(m), s.point);
        if (sm == Sign::Zero) continue;
        RhoType r = (m % 2 == 0) ? RhoType::Inflectional : (sm == Sign::Negative ? RhoType::Max : RhoType::Min);
        if ((r != RhoType::Inflectional) != extremal_by_bands)
            throw Error(ErrorCode::ClassifierDisagreement,
                        "arc " + std::to_string(s.index) + ": tangency order " + std::to_string(m + 1) +
                            " disagrees with adjacent band signs");
        return r;
    }
    throw Error(ErrorCode::ClassifierDisagreement, "arc " + std::to_string(s.index) + ": tangency order exceeds the cap");
}

RhoType rho_type(const BiPoly& f, const ArcSample& s, Sign band_before, Sign band_after) {
    LieTower tower(f);
    return rho_type(tower, s, band_before, band_after);
}

std::vector<int> alternation_violations(const std::vector<RhoType>& types, const std::vector<Monotonicity>& mono) {
    std::vector<int> bad;
    size_t n = types.size();
    if (mono.size() != n) throw Error(ErrorCode::Internal, "alternation_violations: size mismatch");
    if (n == 0) return bad;
    // Start right after a change of monotonicity so that no run is split by the wrap.
    size_t start = 0;
    for (size_t i = 0; i < n; ++i)
        if (mono[i] != mono[(i + n - 1) % n]) {
            start = i;
            break;
        }
    bool uniform = start == 0 && mono[0] == mono[n - 1];
    int last = -1;  // previous extremal type in the current run
    size_t steps = uniform ? n + 1 : n;  // a single cyclic run closes on itself
    for (size_t k = 0; k < steps; ++k) {
        size_t i = (start + k) % n;
        if (k > 0 && mono[i] != mono[(i + n - 1) % n]) last = -1;
        if (mono[i] == Monotonicity::Singular || types[i] == RhoType::Inflectional) continue;
        if (last == static_cast<int>(types[i])) bad.push_back(static_cast<int>(i));
        last = static_cast<int>(types[i]);
    }
    return bad;
}

}  // namespace bif
