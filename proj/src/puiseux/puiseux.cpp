#include "bif/puiseux.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <numeric>

namespace bif {

namespace {

const Elem kZero(0);

Integer binom(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool nz(const Germ& P, int i, int j) { return !P.at(i, j).is_zero(); }

int max_j(const Germ& P) {
    int m = -1;
    for (auto& col : P.c) m = std::max(m, static_cast<int>(col.size()) - 1);
    return m;
}

// Truncated power series over the tower; s[k] multiplies T^k.
using Series = std::vector<Elem>;

Series s_mul(const Series& a, const Series& b, size_t len) {
    Series r(std::min(len, a.size() + b.size() - 1), kZero);
    for (size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_syntactic_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < len; ++j)
            if (!b[j].is_syntactic_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series s_inv(const Series& a, size_t len) {
    Series b(len, kZero);
    Elem a0 = a[0].inv();
    b[0] = a0;
    for (size_t k = 1; k < len; ++k) {
        Elem acc(0);
        for (size_t l = 1; l <= k && l < a.size(); ++l)
            if (!a[l].is_syntactic_zero()) acc += a[l] * b[k - l];
        b[k] = -(acc * a0);
    }
    return b;
}

// P(u(w), w) mod w^len, with column i of P read as a series in w (step: exponent scale).
Series s_eval(const Germ& P, const Series& u, size_t len) {
    Series acc;
    for (int i = P.deg_u(); i >= 0; --i) {
        acc = acc.empty() ? Series{} : s_mul(acc, u, len);
        acc.resize(len, kZero);
        const auto& col = P.c[static_cast<size_t>(i)];
        for (size_t j = 0; j < col.size() && j < len; ++j) acc[j] += col[j];
    }
    acc.resize(len, kZero);
    return acc;
}

Germ d_du(const Germ& P) {
    Germ D;
    for (int i = 1; i <= P.deg_u(); ++i) {
        std::vector<Elem> col = P.c[static_cast<size_t>(i)];
        for (auto& e : col) e = e * Elem(Rational(i));
        D.c.push_back(std::move(col));
    }
    if (D.c.empty()) D.c.push_back({});
    return D;
}

struct Stage {
    int n = 1;
    int E = 0;  // u = sum(terms) + T^E u_k
    std::vector<std::pair<int, Elem>> terms;
    int sep = 0;

    void ramify(int q) {
        n *= q;
        E *= q;
        sep *= q;
        for (auto& t : terms) t.first *= q;
    }
};

struct Ctx {
    int z_sign, d, extra;
    std::vector<PuiseuxBranch>* out;
};

int target_depth(const Ctx& ctx, const Stage& st) { return std::max(ctx.d * st.n + ctx.extra, st.E + ctx.extra); }

PuiseuxBranch make_branch(const Ctx& ctx, const Stage& st) {
    PuiseuxBranch b;
    b.z_sign = ctx.z_sign;
    b.n = st.n;
    b.coefficients = st.terms;
    b.separation = st.sep;
    return b;
}

// P regular: P(0,0) = 0, P_u(0,0) != 0.  Solves u_k as a power series by Newton doubling.
void regular_branch(const Germ& P, Stage st, const Ctx& ctx, bool zero_sibling) {
    int N = target_depth(ctx, st);
    size_t K = static_cast<size_t>(std::max(N - st.E, 1)) + 1;
    Germ Pu = d_du(P);
    Series u(1, kZero);
    for (size_t prec = 1; prec < K;) {
        prec = std::min(2 * prec, K);
        u.resize(prec, kZero);
        Series r = s_eval(P, u, prec);
        Series dp = s_eval(Pu, u, prec);
        Series corr = s_mul(r, s_inv(dp, prec), prec);
        for (size_t k = 0; k < prec && k < corr.size(); ++k) u[k] -= corr[k];
    }
    if (zero_sibling) {
        size_t v = 1;
        while (v < u.size() && u[v].is_zero()) ++v;
        if (v == u.size()) throw Error(ErrorCode::DepthInsufficient, "branch does not separate from u = 0 within the depth");
        st.sep = st.E + static_cast<int>(v);
    }
    for (size_t l = 1; l < u.size(); ++l)
        if (!u[l].is_zero()) st.terms.push_back({st.E + static_cast<int>(l), u[l]});
    PuiseuxBranch b = make_branch(ctx, st);
    b.trunc_depth = st.E + static_cast<int>(u.size()) - 1;
    ctx.out->push_back(std::move(b));
}

// P(w^p (c + u1), w^q) / w^M.
Germ substitute(const Germ& P, int p, int q, const Elem& c, int M) {
    Germ R;
    int du = P.deg_u(), mj = max_j(P);
    R.c.assign(static_cast<size_t>(du + 1), std::vector<Elem>(static_cast<size_t>(p * du + q * mj - M + 1), kZero));
    std::vector<Elem> cp{Elem(1)};
    for (int k = 1; k <= du; ++k) cp.push_back(cp.back() * c);
    for (int i = 0; i <= du; ++i) {
        const auto& col = P.c[static_cast<size_t>(i)];
        for (size_t j = 0; j < col.size(); ++j) {
            if (col[j].is_syntactic_zero()) continue;
            int e = p * i + q * static_cast<int>(j) - M;
            if (e < 0) continue;  // only vanishing terms lie below the edge
            for (int k = 0; k <= i; ++k)
                R.c[static_cast<size_t>(k)][static_cast<size_t>(e)] +=
                    col[j] * cp[static_cast<size_t>(i - k)] * Elem(Rational(binom(i, k)));
        }
    }
    return R;
}

struct Kid {
    int p, q;
    Elem c;
    int M;
};

void explore(Germ P, Stage st, const Ctx& ctx, int steps) {
    if (steps > 64) throw Error(ErrorCode::DepthInsufficient, "Newton polygon iteration does not become regular");
    bool zero_branch = true;
    for (size_t j = 0; j < P.c[0].size() && zero_branch; ++j) zero_branch = P.c[0][j].is_zero();
    if (zero_branch) {
        P.c.erase(P.c.begin());
        if (P.c.empty()) throw Error(ErrorCode::Internal, "germ vanishes identically");
    }
    std::vector<Kid> kids;
    bool regular = false;
    if (P.at(0, 0).is_zero()) {
        int istar = -1;
        for (int i = 1; i <= P.deg_u(); ++i)
            if (nz(P, i, 0)) {
                istar = i;
                break;
            }
        if (istar < 0) throw Error(ErrorCode::Internal, "germ divisible by z");
        if (istar == 1) regular = true;
        else {
            std::vector<int> jmin(static_cast<size_t>(istar + 1), -1);
            for (int i = 0; i <= istar; ++i) {
                const auto& col = P.c[static_cast<size_t>(i)];
                for (size_t j = 0; j < col.size(); ++j)
                    if (!col[j].is_zero()) {
                        jmin[static_cast<size_t>(i)] = static_cast<int>(j);
                        break;
                    }
            }
            int ic = 0, jc = jmin[0];
            if (jc < 0) throw Error(ErrorCode::Internal, "germ divisible by u after stripping");
            while (ic < istar) {
                // steepest descent: minimize (j - jc)/(i - ic), ties to the farthest point
                int in = -1, jn = 0;
                for (int i = ic + 1; i <= istar; ++i) {
                    int j = jmin[static_cast<size_t>(i)];
                    if (j < 0) continue;
                    if (in < 0 || static_cast<long>(j - jc) * (in - ic) <= static_cast<long>(jn - jc) * (i - ic)) {
                        in = i;
                        jn = j;
                    }
                }
                int num = jc - jn, den = in - ic, g = std::gcd(num, den);
                int p = num / g, q = den / g;
                int M = p * ic + q * jc;
                EPoly phi(static_cast<size_t>(in - ic + 1), kZero);
                for (int i = ic; i <= in; ++i) {
                    int j = jmin[static_cast<size_t>(i)];
                    if (j >= 0 && p * i + q * j == M) phi[static_cast<size_t>(i - ic)] = P.at(i, j);
                }
                for (auto& c : real_roots(phi))
                    if (!c.is_zero()) kids.push_back({p, q, c, M});
                ic = in;
                jc = jn;
            }
        }
    }
    int count = static_cast<int>(kids.size()) + (regular ? 1 : 0) + (zero_branch ? 1 : 0);
    if (zero_branch) {
        Stage z = st;
        if (count > 1) z.sep = st.E + 1;
        PuiseuxBranch b = make_branch(ctx, z);
        b.terminates = true;
        b.trunc_depth = target_depth(ctx, z);
        ctx.out->push_back(std::move(b));
    }
    if (regular) regular_branch(P, st, ctx, zero_branch);
    for (auto& k : kids) {
        Stage s = st;
        s.ramify(k.q);
        s.E += k.p;
        s.terms.push_back({s.E, k.c});
        if (count > 1) s.sep = s.E;
        explore(substitute(P, k.p, k.q, k.c, k.M), s, ctx, steps + 1);
    }
}

}  // namespace

const Elem& Germ::at(int i, int j) const {
    if (i < 0 || j < 0 || i > deg_u()) return kZero;
    const auto& col = c[static_cast<size_t>(i)];
    return static_cast<size_t>(j) < col.size() ? col[static_cast<size_t>(j)] : kZero;
}

std::string InfinityPoint::str(int digits) const {
    if (horizontal) return "[1:0]";
    return "[" + slope.decimal(digits) + ":1]";
}

std::vector<InfinityPoint> infinity_points(const BiPoly& h) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "infinity_points of zero");
    BiPoly top = h.top_form();
    std::vector<InfinityPoint> out;
    UPoly s = top.eval_var(Var::Y, 1);
    if (s.deg() >= 1)
        for (auto& a : isolate_real_roots(s)) out.push_back(InfinityPoint{false, a});
    if (sgn(top.coeff(top.total_degree(), 0)) == 0) out.push_back(InfinityPoint{true, AlgebraicReal(0)});
    return out;
}

Germ chart_germ(const BiPoly& g, const InfinityPoint& p, const Elem& slope) {
    int D = g.total_degree();
    Germ G;
    int du = p.horizontal ? g.degree_in(Var::Y) : g.degree_in(Var::X);
    G.c.assign(static_cast<size_t>(std::max(du, 0) + 1), std::vector<Elem>(static_cast<size_t>(D + 1), kZero));
    std::vector<Elem> ap{Elem(1)};
    for (int k = 1; k <= D; ++k) ap.push_back(ap.back() * slope);
    for (auto& [e, coef] : g.terms()) {
        auto [i, j] = e;
        size_t l = static_cast<size_t>(D - i - j);
        if (p.horizontal) {
            G.c[static_cast<size_t>(j)][l] += Elem(coef);
            continue;
        }
        for (int k = 0; k <= i; ++k)
            G.c[static_cast<size_t>(k)][l] += Elem(coef * Rational(binom(i, k))) * ap[static_cast<size_t>(i - k)];
    }
    return G;
}

std::vector<PuiseuxBranch> puiseux_branches(const Germ& h, int z_sign, int d, int extra) {
    if (z_sign != 1 && z_sign != -1) throw Error(ErrorCode::Internal, "z_sign must be +1 or -1");
    Germ P = h;
    if (z_sign < 0)
        for (auto& col : P.c)
            for (size_t j = 1; j < col.size(); j += 2) col[j] = -col[j];
    // strip the line at infinity
    int mz = 0;
    for (;; ++mz) {
        bool any = false;
        for (int i = 0; i <= P.deg_u() && !any; ++i) any = nz(P, i, mz);
        if (any) break;
        if (mz > max_j(P)) throw Error(ErrorCode::ZeroPolynomial, "puiseux_branches of zero germ");
    }
    if (mz > 0)
        for (auto& col : P.c) col.erase(col.begin(), col.begin() + std::min<size_t>(static_cast<size_t>(mz), col.size()));
    std::vector<PuiseuxBranch> out;
    if (!P.at(0, 0).is_zero()) return out;
    Ctx ctx{z_sign, d, extra, &out};
    explore(P, Stage{}, ctx, 0);
    return out;
}

std::string LimitValue::str(int digits) const {
    switch (kind) {
        case Kind::PlusInfinity: return "+inf";
        case Kind::MinusInfinity: return "-inf";
        case Kind::Finite: return value.is_rational() ? value.rational().get_str() : value.decimal(digits);
    }
    return "?";
}

bool same_limit(const LimitValue& a, const LimitValue& b) {
    if (a.kind != b.kind) return false;
    return a.kind != LimitValue::Kind::Finite || compare(a.value, b.value) == 0;
}

LimitValue branch_limit(const Germ& F, int d, const PuiseuxBranch& b) {
    int dn = d * b.n;
    if (!b.terminates && b.trunc_depth < dn)
        throw Error(ErrorCode::DepthInsufficient, "branch truncated below T^" + std::to_string(dn));
    size_t len = static_cast<size_t>(dn) + 1;
    Series u(len, kZero);
    for (auto& [j, a] : b.coefficients)
        if (static_cast<size_t>(j) < len) u[static_cast<size_t>(j)] = a;
    // columns of F as series in T with z = z_sign T^n
    Germ Ft;
    for (auto& col : F.c) {
        std::vector<Elem> s(len, kZero);
        for (size_t j = 0; j < col.size(); ++j) {
            size_t e = j * static_cast<size_t>(b.n);
            if (e >= len) break;
            s[e] = (b.z_sign < 0 && j % 2 == 1) ? -col[j] : col[j];
        }
        Ft.c.push_back(std::move(s));
    }
    Series v = s_eval(Ft, u, len);
    int sd = (b.z_sign < 0 && d % 2 == 1) ? -1 : 1;  // (z_sign)^d
    LimitValue L;
    for (size_t k = 0; k < len; ++k) {
        int s = v[k].sign();
        if (s == 0) continue;
        if (static_cast<int>(k) == dn) {
            L.value = AlgebraicReal::from_elem(sd > 0 ? v[k] : -v[k]);
            return L;
        }
        L.kind = s * sd > 0 ? LimitValue::Kind::PlusInfinity : LimitValue::Kind::MinusInfinity;
        return L;
    }
    return L;  // Finite(0)
}

LimitValue branch_limit(const BiPoly& f, const InfinityPoint& p, const PuiseuxBranch& b) {
    Elem a = p.horizontal ? Elem(0) : p.slope.elem();
    return branch_limit(chart_germ(f, p, a), f.total_degree(), b);
}

BranchSet all_branches(const BiPoly& h, int d, int extra) {
    BranchSet bs;
    bs.points = infinity_points(h);
    for (size_t k = 0; k < bs.points.size(); ++k) {
        Elem a = bs.points[k].horizontal ? Elem(0) : bs.points[k].slope.elem();
        bs.slopes.push_back(a);
        Germ g = chart_germ(h, bs.points[k], a);
        for (int s : {1, -1})
            for (auto& b : puiseux_branches(g, s, d, extra)) {
                b.point = static_cast<int>(k);
                bs.branches.push_back(std::move(b));
            }
    }
    return bs;
}

}  // namespace bif
