#include "bif/error.hpp"
#include "bif/puiseux.hpp"

#include <algorithm>
#include <optional>

namespace bif {

namespace {

// angle(P) < angle(D) with angles in [0, 2pi), P and D nonzero.
bool angle_below(const Elem& px, const Elem& py, const Rational& dx, const Rational& dy) {
    auto half = [](int sx, int sy) { return (sy > 0 || (sy == 0 && sx > 0)) ? 0 : 1; };
    int hp = half(px.sign(), py.sign()), hd = half(sgn(dx), sgn(dy));
    if (hp != hd) return hp < hd;
    return (px * Elem(dy) - py * Elem(dx)).sign() > 0;
}

int count_below(const std::vector<ArcSample>& s, const Rational& dx, const Rational& dy) {
    int k = 0;
    for (auto& a : s) k += angle_below(a.point.x, a.point.y, dx, dy);
    return k;
}

const std::vector<std::pair<int, int>> kRays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1},
                                                {1, -1}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2},
                                                {1, -2}, {2, -1}, {3, 1}, {1, 3}, {-3, 2}, {2, -3}};

// outer index of each inner arc, from the signed crossings of one ray between the two circles.
std::vector<int> radial_shift(const BiPoly& h, const std::vector<ArcSample>& inner, const std::vector<ArcSample>& outer,
                              const Rational& R, const Rational& Rs, int& crossings) {
    BiPoly hx = differentiate(h, Var::X), hy = differentiate(h, Var::Y);
    int N = static_cast<int>(inner.size());
    for (auto [p, q] : kRays) {
        Rational dx(p), dy(q), n2 = dx * dx + dy * dy;
        UPoly g = h.compose(dx * BiPoly::x(), dy * BiPoly::x()).eval_var(Var::Y, 0);
        if (g.is_zero()) continue;
        bool ok = true;
        int net = 0;
        if (g.deg() >= 1)
            for (auto& s : isolate_real_roots(g)) {
                Elem e = s.elem();
                if (e.sign() <= 0) continue;
                Elem r2 = e * e * Elem(n2);
                int lo = (r2 - Elem(R * R)).sign(), hi = (r2 - Elem(Rs * Rs)).sign();
                if (lo == 0 || hi == 0) {
                    ok = false;
                    break;
                }
                if (lo < 0 || hi > 0) continue;
                Elem x = e * Elem(dx), y = e * Elem(dy);
                Elem gx = eval_at(hx, x, y), gy = eval_at(hy, x, y);
                int radial = (x * gx + y * gy).sign();
                int orient = (y * gx - x * gy).sign();
                if (radial == 0) {
                    ok = false;
                    break;
                }
                if (orient == 0) throw Error(ErrorCode::Internal, "Milnor curve tangent to a circle beyond the radius");
                net += radial * orient;
            }
        if (!ok) continue;
        int k0 = count_below(inner, dx, dy), k1 = count_below(outer, dx, dy);
        std::vector<int> idx(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) idx[static_cast<size_t>(i)] = (((i - k0 + net + k1) % N) + N) % N;
        crossings = net;
        return idx;
    }
    throw Error(ErrorCode::MatchingUnresolved, "no admissible reference ray");
}

// |u - u_b(T)| in the chart of branch b at the point (X, Y), or nothing when
// the point lies on the other side of the line at infinity.
std::optional<Encl> chart_residual(const Encl& X, const Encl& Y, const PuiseuxBranch& b, bool horizontal,
                                   const Encl& slope, const std::vector<Encl>& coef, long bits) {
    const Encl& zinv = horizontal ? X : Y;
    if (zinv.sign() != b.z_sign) return std::nullopt;
    Encl z = zinv.inv();
    Encl u = horizontal ? Y * z : X * z - slope;
    Encl T = z.abs().root(static_cast<unsigned long>(b.n));
    Encl ub(0, bits), Tp(1, bits);
    int e = 0;
    for (size_t j = 0; j < b.coefficients.size(); ++j) {
        for (; e < b.coefficients[j].first; ++e) Tp = Tp * T;
        ub = ub + coef[j] * Tp;
    }
    return (u - ub).abs();
}

// Branch index for every outer sample, or empty when the margins are too thin.
std::vector<int> residual_assignment(const std::vector<ArcSample>& outer, const BranchSet& bs, const Rational& Rs) {
    int depth = 0;
    for (auto& b : bs.branches) depth = std::max(depth, b.trunc_depth);
    long bits = 128 + 4L * (depth + 2) * static_cast<long>(mpz_sizeinbase(Integer(ceil(Rs)).get_mpz_t(), 2));
    std::vector<Encl> slope;
    for (auto& a : bs.slopes) slope.push_back(a.enclose(bits));
    std::vector<std::vector<Encl>> coef;
    for (auto& b : bs.branches) {
        std::vector<Encl> c;
        for (auto& t : b.coefficients) c.push_back(t.second.enclose(bits));
        coef.push_back(std::move(c));
    }
    const Rational margin = 256;
    std::vector<int> out;
    std::vector<bool> used(bs.branches.size(), false);
    for (auto& s : outer) {
        Encl X = s.point.x.enclose(bits), Y = s.point.y.enclose(bits);
        // Only the charts of the infinity point nearest to the sample's direction
        // apply: a branch curve may satisfy its chart equation globally (xy = 1 is
        // u = z^2 at both [0:1] and [1:0]).
        Encl n2 = X.sqr() + Y.sqr();
        std::vector<std::pair<Rational, Rational>> dist;  // |sin| of the angle to each point, squared
        for (size_t k = 0; k < bs.points.size(); ++k) {
            Encl vx = bs.points[k].horizontal ? Encl(1, bits) : slope[k];
            Encl vy = bs.points[k].horizontal ? Encl(0, bits) : Encl(1, bits);
            Encl c = X * vy - Y * vx;
            Encl d = c.sqr() * (n2 * (vx.sqr() + vy.sqr())).inv();
            dist.push_back({d.lo_q(), d.hi_q()});
        }
        size_t near = 0;
        for (size_t k = 1; k < dist.size(); ++k)
            if (dist[k].second < dist[near].second) near = k;
        for (size_t k = 0; k < dist.size(); ++k)
            if (k != near && !(dist[near].second * 16 < dist[k].first)) return {};
        std::vector<std::pair<Rational, Rational>> res;  // (lo, hi) per branch
        std::vector<int> who;
        for (size_t k = 0; k < bs.branches.size(); ++k) {
            const auto& b = bs.branches[k];
            size_t pt = static_cast<size_t>(b.point);
            if (pt != near) continue;
            auto r = chart_residual(X, Y, b, bs.points[pt].horizontal, slope[pt], coef[k], bits);
            if (!r) continue;
            res.push_back({r->lo_q(), r->hi_q()});
            who.push_back(static_cast<int>(k));
        }
        if (res.empty()) return {};
        size_t best = 0;
        for (size_t k = 1; k < res.size(); ++k)
            if (res[k].second < res[best].second) best = k;
        for (size_t k = 0; k < res.size(); ++k)
            if (k != best && !(res[best].second * margin < res[k].first)) return {};
        size_t bi = static_cast<size_t>(who[best]);
        if (used[bi]) return {};
        used[bi] = true;
        out.push_back(who[best]);
    }
    return out;
}

}  // namespace

Matching match_arcs(const BiPoly& h, const std::vector<ArcSample>& samples, const Rational& R, const BranchSet& bs) {
    size_t N = samples.size();
    if (bs.branches.size() != N)
        throw Error(ErrorCode::CountMismatch, std::to_string(N) + " arcs but " + std::to_string(bs.branches.size()) +
                                                  " real half-branches at infinity");
    Matching m;
    if (N == 0) {
        m.outer_radius = R;
        return m;
    }
    Rational Rs = 4 * R;
    std::vector<int> prev;
    for (int attempt = 0; attempt < 14; ++attempt, Rs *= 4) {
        std::vector<ArcSample> outer;
        try {
            outer = circle_arc_points(h, Rs);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TangentialIntersection) throw;
            prev.clear();
            continue;
        }
        if (outer.size() != N) throw Error(ErrorCode::Internal, "arc count changes beyond the Milnor radius");
        int crossings = 0;
        std::vector<int> idx = radial_shift(h, samples, outer, R, Rs, crossings);
        std::vector<int> assign = residual_assignment(outer, bs, Rs);
        if (assign.empty()) {
            prev.clear();
            continue;
        }
        std::vector<int> cand(N);
        for (size_t i = 0; i < N; ++i) cand[i] = assign[static_cast<size_t>(idx[i])];
        if (cand == prev) {
            m.branch_of_arc = cand;
            m.outer_radius = Rs;
            m.ray_crossings = crossings;
            return m;
        }
        prev = cand;
    }
    throw Error(ErrorCode::MatchingUnresolved, "arc/branch assignment did not stabilize up to radius " + Rs.get_str());
}

}  // namespace bif
