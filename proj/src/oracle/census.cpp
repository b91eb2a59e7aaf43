#include "bif/error.hpp"
#include "bif/kernels.hpp"
#include "bif/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace bif::oracle {

namespace {

// Coefficients of p in x, each a polynomial in y, as doubles.
std::vector<std::vector<double>> double_rows(const BiPoly& p) {
    int dx = std::max(0, p.degree_in(Var::X)), dy = std::max(0, p.degree_in(Var::Y));
    std::vector<std::vector<double>> c(static_cast<size_t>(dx) + 1, std::vector<double>(static_cast<size_t>(dy) + 1, 0));
    for (auto& [e, a] : p.terms()) c[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = a.get_d();
    return c;
}

double horner1(const std::vector<double>& c, double v) {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

struct Evaluator {
    std::vector<std::vector<double>> c, cabs;
    explicit Evaluator(const BiPoly& p) : c(double_rows(p)), cabs(c) {
        for (auto& row : cabs)
            for (auto& v : row) v = std::fabs(v);
    }
    double operator()(double x, double y) const {
        std::vector<double> a(c.size());
        for (size_t i = 0; i < c.size(); ++i) a[i] = horner1(c[i], y);
        return horner1(a, x);
    }
    // Size of the terms, for a rounding-noise threshold.
    double magnitude(double x, double y) const {
        std::vector<double> a(cabs.size());
        for (size_t i = 0; i < cabs.size(); ++i) a[i] = horner1(cabs[i], std::fabs(y));
        return horner1(a, std::fabs(x));
    }
};

struct DSU {
    std::vector<int> p;
    explicit DSU(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[static_cast<size_t>(a)] != a) a = p[static_cast<size_t>(a)] = p[static_cast<size_t>(p[static_cast<size_t>(a)])];
        return a;
    }
    void unite(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<double> grid_values(const BiPoly& p, double x0, double y0, double step, int n, bool simd) {
    auto c = double_rows(p);
    size_t m = static_cast<size_t>(n) + 1;
    std::vector<double> xs(m), out(m * m), a(c.size());
    for (size_t i = 0; i < m; ++i) xs[i] = x0 + static_cast<double>(i) * step;
    int deg = static_cast<int>(c.size()) - 1;
    for (size_t j = 0; j < m; ++j) {
        double y = y0 + static_cast<double>(j) * step;
        for (size_t i = 0; i < c.size(); ++i) a[i] = horner1(c[i], y);
        if (simd) kernels::horner(a.data(), deg, xs.data(), out.data() + j * m, m);
        else kernels::horner_scalar(a.data(), deg, xs.data(), out.data() + j * m, m);
    }
    return out;
}

FiberCensus fiber_census(const BiPoly& f, const Rational& t, double r_in, double r_out, int grid_n) {
    if (grid_n < 64) throw Error(ErrorCode::ResolutionTooCoarse, "grid_n must be at least 64");
    FiberCensus fc;
    fc.level = t;
    fc.r_in = r_in;
    fc.r_out = r_out;
    fc.grid_n = grid_n;
    const int N = grid_n;
    const size_t M = static_cast<size_t>(N) + 1;
    const double h = 2 * r_out / N, x0 = -r_out;
    fc.cell = h;
    BiPoly g = f - BiPoly(t);
    Evaluator ev(g);
    std::vector<double> v = grid_values(g, x0, x0, h, N);
    auto at = [&](int i, int j) { return v[static_cast<size_t>(j) * M + static_cast<size_t>(i)]; };
    auto X = [&](int i) { return x0 + i * h; };

    // Edge ids: horizontal (i,j)-(i+1,j) then vertical (i,j)-(i,j+1).
    const int H = N * (N + 1);
    auto hid = [&](int i, int j) { return j * N + i; };
    auto vid = [&](int i, int j) { return H + j * (N + 1) + i; };
    DSU dsu(static_cast<size_t>(2 * H));
    std::vector<char> used(static_cast<size_t>(2 * H), 0);
    std::vector<std::array<double, 2>> pt(static_cast<size_t>(2 * H));
    auto cross = [](double a, double b) { return a / (a - b); };

    int contour_cells = 0;
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) {
            double xa = X(i), xb = X(i + 1), ya = X(j), yb = X(j + 1);
            double far = std::max(std::hypot(xa, ya), std::max(std::hypot(xb, ya), std::max(std::hypot(xa, yb), std::hypot(xb, yb))));
            if (far < r_in) continue;
            double nx = std::clamp(0.0, xa, xb), ny = std::clamp(0.0, ya, yb);
            if (std::hypot(nx, ny) > r_out) continue;
            double v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            bool s00 = v00 > 0, s10 = v10 > 0, s01 = v01 > 0, s11 = v11 > 0;
            int ebot = hid(i, j), etop = hid(i, j + 1), elef = vid(i, j), erig = vid(i + 1, j);
            std::vector<int> es;
            if (s00 != s10) {
                es.push_back(ebot);
                pt[static_cast<size_t>(ebot)] = {xa + cross(v00, v10) * h, ya};
            }
            if (s10 != s11) {
                es.push_back(erig);
                pt[static_cast<size_t>(erig)] = {xb, ya + cross(v10, v11) * h};
            }
            if (s01 != s11) {
                es.push_back(etop);
                pt[static_cast<size_t>(etop)] = {xa + cross(v01, v11) * h, yb};
            }
            if (s00 != s01) {
                es.push_back(elef);
                pt[static_cast<size_t>(elef)] = {xa, ya + cross(v00, v01) * h};
            }
            if (es.empty()) continue;
            ++contour_cells;
            for (int e : es) used[static_cast<size_t>(e)] = 1;
            if (es.size() == 2) {
                dsu.unite(es[0], es[1]);
                continue;
            }
            // Saddle: corners 00 and 11 share a sign.  Decide whether that sign
            // connects them through the cell.
            ++fc.saddles;
            double cx = (xa + xb) / 2, cy = (ya + yb) / 2;
            double c = ev(cx, cy);
            double noise = 64 * 2.220446049250313e-16 * ev.magnitude(cx, cy);
            bool diag;  // the 00/11 sign connects across the centre
            if (std::fabs(c) > noise) {
                diag = (c > 0) == s00;
            } else {
                // 4x refinement: sign lattice on the 5x5 sub-grid, 4-connectivity for
                // the 00/11 sign from corner 00 to corner 11.
                ++fc.refined;
                std::array<std::array<int, 5>, 5> s{};
                bool clear = false;
                for (int b = 0; b <= 4; ++b)
                    for (int a = 0; a <= 4; ++a) {
                        double w = ev(xa + a * h / 4, ya + b * h / 4);
                        s[static_cast<size_t>(b)][static_cast<size_t>(a)] = (w > 0) == s00;
                        if ((a == 2 || b == 2) && std::fabs(w) > noise) clear = true;
                    }
                if (!clear) ++fc.unresolved;
                std::array<std::array<bool, 5>, 5> seen{};
                std::vector<std::pair<int, int>> st{{0, 0}};
                seen[0][0] = true;
                while (!st.empty()) {
                    auto [a, b] = st.back();
                    st.pop_back();
                    const int d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                    for (auto& dd : d) {
                        int na = a + dd[0], nb = b + dd[1];
                        if (na < 0 || nb < 0 || na > 4 || nb > 4) continue;
                        auto ua = static_cast<size_t>(na), ub = static_cast<size_t>(nb);
                        if (seen[ub][ua] || !s[ub][ua]) continue;
                        seen[ub][ua] = true;
                        st.push_back({na, nb});
                    }
                }
                diag = seen[4][4];
            }
            if (diag) {  // cut off corners 10 and 01
                dsu.unite(ebot, erig);
                dsu.unite(elef, etop);
            } else {  // cut off corners 00 and 11
                dsu.unite(elef, ebot);
                dsu.unite(erig, etop);
            }
        }
    if (contour_cells > 0 && fc.unresolved * 20 > contour_cells)
        throw Error(ErrorCode::ResolutionTooCoarse,
                    std::to_string(fc.unresolved) + " unresolved saddle cells out of " + std::to_string(contour_cells));

    std::vector<int> comp_of(static_cast<size_t>(2 * H), -1);
    for (int e = 0; e < 2 * H; ++e) {
        if (!used[static_cast<size_t>(e)]) continue;
        int r = dsu.find(e);
        if (comp_of[static_cast<size_t>(r)] < 0) {
            comp_of[static_cast<size_t>(r)] = static_cast<int>(fc.components.size());
            fc.components.push_back({0, INFINITY, 0, false, false});
        }
        auto& c = fc.components[static_cast<size_t>(comp_of[static_cast<size_t>(r)])];
        double n = std::hypot(pt[static_cast<size_t>(e)][0], pt[static_cast<size_t>(e)][1]);
        ++c.points;
        c.min_norm = std::min(c.min_norm, n);
        c.max_norm = std::max(c.max_norm, n);
    }
    for (auto& c : fc.components) {
        c.touches_outer = c.max_norm >= r_out - h;
        c.touches_inner = c.min_norm <= r_in + 1.5 * h;
    }
    std::sort(fc.components.begin(), fc.components.end(), [](const FiberComponent& a, const FiberComponent& b) {
        if (a.min_norm != b.min_norm) return a.min_norm < b.min_norm;
        return a.points < b.points;
    });
    return fc;
}

std::vector<Segment> contour_segments(const BiPoly& f, const Rational& t, double half, int grid_n) {
    const int N = grid_n;
    const size_t M = static_cast<size_t>(N) + 1;
    const double h = 2 * half / N, x0 = -half;
    BiPoly g = f - BiPoly(t);
    Evaluator ev(g);
    std::vector<double> v = grid_values(g, x0, x0, h, N);
    auto at = [&](int i, int j) { return v[static_cast<size_t>(j) * M + static_cast<size_t>(i)]; };
    std::vector<Segment> out;
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) {
            double xa = x0 + i * h, ya = x0 + j * h;
            double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            double px[4] = {xa, xa + h, xa + h, xa}, py[4] = {ya, ya, ya + h, ya + h};
            // crossing on edge k between corners k and k+1
            std::vector<std::pair<int, std::array<double, 2>>> e;
            for (int k = 0; k < 4; ++k) {
                int l = (k + 1) % 4;
                if ((c[k] > 0) == (c[l] > 0)) continue;
                double s = c[k] / (c[k] - c[l]);
                e.push_back({k, {px[k] + s * (px[l] - px[k]), py[k] + s * (py[l] - py[k])}});
            }
            if (e.size() == 2) {
                out.push_back({e[0].second[0], e[0].second[1], e[1].second[0], e[1].second[1]});
            } else if (e.size() == 4) {
                bool diag = (ev(xa + h / 2, ya + h / 2) > 0) == (c[0] > 0);
                // edges 0..3 = bottom, right, top, left
                int p1[2][2] = {{0, 1}, {2, 3}}, p2[2][2] = {{3, 0}, {1, 2}};
                auto& pr = diag ? p1 : p2;
                for (auto& q : pr)
                    out.push_back({e[static_cast<size_t>(q[0])].second[0], e[static_cast<size_t>(q[0])].second[1],
                                   e[static_cast<size_t>(q[1])].second[0], e[static_cast<size_t>(q[1])].second[1]});
            }
        }
    return out;
}

SweepReport sweep_census(const BiPoly& f, const Rational& lambda, Side side, const SweepOptions& opt) {
    SweepReport rep;
    Rational off(opt.delta);
    for (int k = 0; k < opt.steps; ++k, off /= 2) {
        Rational t = side == Side::Below ? Rational(lambda - off) : Rational(lambda + off);
        rep.levels.push_back(t);
        rep.censuses.push_back(fiber_census(f, t, opt.r_in, opt.r_out, opt.grid_n));
    }
    size_t K = rep.censuses.size();
    // Components that never leave the boundary layer of either circle are
    // clipping debris.
    auto significant = [](const FiberCensus& c, const FiberComponent& q) {
        return q.max_norm >= c.r_in + 2 * c.cell && q.min_norm <= c.r_out - 2 * c.cell;
    };
    std::vector<size_t> count(K, 0);
    std::vector<double> m(K, 0);  // largest min_norm of a detached component
    for (size_t k = 0; k < K; ++k)
        for (auto& q : rep.censuses[k].components) {
            if (!significant(rep.censuses[k], q)) continue;
            ++count[k];
            if (!q.touches_inner) m[k] = std::max(m[k], q.min_norm);
        }
    // The count must settle on a value different from the first one.
    rep.splitting = K >= 3 && count[K - 1] == count[K - 2] && count[K - 1] != count[0];
    int run = 0;
    for (size_t k = 1; k < K; ++k) {
        if (m[k - 1] > 0 && m[k] > m[k - 1] * 1.05) {
            if (++run >= 2) rep.vanishing = true;
        } else {
            run = 0;
        }
    }
    return rep;
}

std::vector<double> tangency_levels(const BiPoly& f, const BiPoly& h, const Rational& r) {
    std::vector<double> out;
    for (auto& s : circle_arc_points(h, r)) out.push_back(eval_at(f, s.point.x, s.point.y).approx());
    return out;
}

}  // namespace bif::oracle
