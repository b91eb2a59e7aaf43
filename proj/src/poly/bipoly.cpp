#include "bif/bipoly.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bif {

BiPoly BiPoly::monomial(const Rational& a, int i, int j) {
    BiPoly p;
    p.add_term(a, i, j);
    return p;
}

BiPoly BiPoly::from_upoly(const UPoly& p, Var v) {
    BiPoly r;
    for (int i = 0; i <= p.deg(); ++i) {
        if (v == Var::X) r.add_term(p[i], i, 0);
        else r.add_term(p[i], 0, i);
    }
    return r;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Rational& a, int i, int j) {
    if (sgn(a) == 0) return;
    auto [it, inserted] = t_.try_emplace({i, j}, a);
    if (inserted) it->second.canonicalize();
    if (!inserted) {
        it->second += a;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

int BiPoly::total_degree() const {
    int d = -1;
    for (auto& [e, a] : t_) d = std::max(d, e.first + e.second);
    return d;
}

int BiPoly::degree_in(Var v) const {
    int d = -1;
    for (auto& [e, a] : t_) d = std::max(d, v == Var::X ? e.first : e.second);
    return d;
}

Exp2 BiPoly::leading_exp() const {
    if (t_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
    Exp2 best = t_.begin()->first;
    for (auto& [e, a] : t_) {
        int d = e.first + e.second, bd = best.first + best.second;
        if (d > bd || (d == bd && e.first > best.first)) best = e;
    }
    return best;
}

BiPoly BiPoly::top_form() const {
    int d = total_degree();
    BiPoly r;
    for (auto& [e, a] : t_)
        if (e.first + e.second == d) r.t_.emplace(e, a);
    return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    return eval_var(Var::X, x).eval(y);
}

UPoly BiPoly::eval_var(Var v, const Rational& value) const {
    int d = std::max(0, total_degree());
    std::vector<Rational> pw(static_cast<size_t>(d) + 1);
    pw[0] = 1;
    for (size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * value;
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& [e, a] : t_) {
        if (v == Var::X) c[static_cast<size_t>(e.second)] += a * pw[static_cast<size_t>(e.first)];
        else c[static_cast<size_t>(e.first)] += a * pw[static_cast<size_t>(e.second)];
    }
    return UPoly(std::move(c));
}

BiPoly BiPoly::compose(const BiPoly& px, const BiPoly& py) const {
    int dx = std::max(0, degree_in(Var::X)), dy = std::max(0, degree_in(Var::Y));
    std::vector<BiPoly> powx{BiPoly(1)}, powy{BiPoly(1)};
    for (int k = 1; k <= dx; ++k) powx.push_back(powx.back() * px);
    for (int k = 1; k <= dy; ++k) powy.push_back(powy.back() * py);
    BiPoly r;
    for (auto& [e, a] : t_) r += a * (powx[static_cast<size_t>(e.first)] * powy[static_cast<size_t>(e.second)]);
    return r;
}

BiPoly BiPoly::translate(const Rational& a, const Rational& b) const {
    return compose(x() + BiPoly(a), y() + BiPoly(b));
}

BiPoly BiPoly::swap_xy() const {
    BiPoly r;
    for (auto& [e, a] : t_) r.t_.emplace(Exp2{e.second, e.first}, a);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, a] : r.t_) a = -a;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (auto& [e, a] : o.t_) add_term(a, e.first, e.second);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (auto& [e, a] : o.t_) add_term(-a, e.first, e.second);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return r;
}

BiPoly operator*(const Rational& s, const BiPoly& a) {
    if (sgn(s) == 0) return {};
    Rational k = s;
    k.canonicalize();
    BiPoly r = a;
    for (auto& [e, c] : r.t_) c *= k;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

std::vector<UPoly> BiPoly::as_poly_in_y() const {
    int dy = degree_in(Var::Y);
    std::vector<std::vector<Rational>> c(static_cast<size_t>(std::max(dy + 1, 0)));
    for (auto& [e, a] : t_) {
        auto& v = c[static_cast<size_t>(e.second)];
        if (v.size() <= static_cast<size_t>(e.first)) v.resize(static_cast<size_t>(e.first) + 1);
        v[static_cast<size_t>(e.first)] = a;
    }
    std::vector<UPoly> out;
    for (auto& v : c) out.emplace_back(std::move(v));
    return out;
}

BiPoly BiPoly::from_poly_in_y(const std::vector<UPoly>& c) {
    BiPoly r;
    for (size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].deg(); ++i) r.add_term(c[j][i], i, static_cast<int>(j));
    return r;
}

BiPoly BiPoly::normalized() const {
    if (is_zero()) return {};
    Integer l = 1, g = 0;
    for (auto& [e, a] : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    for (auto& [e, a] : t_) {
        Rational b = a * Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_num_mpz_t());
    }
    Rational s = Rational(l) / Rational(g);
    if (sgn(lc()) < 0) s = -s;
    return s * *this;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    // descending graded-lex order for readability
    std::vector<std::pair<Exp2, Rational>> v(t_.begin(), t_.end());
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [e, a] : v) {
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        Rational m = abs(a);
        bool mono = e.first + e.second > 0;
        bool need_coeff = !mono || m != 1;
        if (need_coeff) {
            if (m.get_den() != 1 && mono) os << "(" << m.get_str() << ")";
            else os << m.get_str();
        }
        if (mono) {
            bool star = need_coeff;
            if (e.first > 0) {
                os << (star ? "*" : "") << "x";
                if (e.first > 1) os << "^" << e.first;
                star = true;
            }
            if (e.second > 0) {
                os << (star ? "*" : "") << "y";
                if (e.second > 1) os << "^" << e.second;
            }
        }
        first = false;
    }
    return os.str();
}

BiPoly differentiate(const BiPoly& p, Var v) {
    BiPoly r;
    for (auto& [e, a] : p.terms()) {
        if (v == Var::X && e.first > 0) r.add_term(a * e.first, e.first - 1, e.second);
        if (v == Var::Y && e.second > 0) r.add_term(a * e.second, e.first, e.second - 1);
    }
    return r;
}

BiPoly jacobian_det(const BiPoly& f, const BiPoly& g) {
    return differentiate(f, Var::X) * differentiate(g, Var::Y) - differentiate(f, Var::Y) * differentiate(g, Var::X);
}

BiPoly milnor_poly(const BiPoly& f, const Rational& a1, const Rational& a2) {
    BiPoly dx = BiPoly::x() - BiPoly(a1), dy = BiPoly::y() - BiPoly(a2);
    return jacobian_det(f, dx * dx + dy * dy);
}

namespace {

using YPoly = std::vector<UPoly>;  // coefficients in Q[x] by power of y

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly content_x(const YPoly& p) {
    UPoly g;
    for (auto& c : p) {
        g = gcd(g, c);
        if (g.deg() == 0) break;
    }
    return g;
}

YPoly primitive_y(const YPoly& p) {
    UPoly c = content_x(p);
    YPoly r;
    for (auto& a : p) r.push_back(a / c);
    return r;
}

// lc(b)^(da-db+1) * a mod b, over Q[x].
YPoly pseudo_rem(YPoly a, const YPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        UPoly la = a.back();
        for (auto& c : a) c = lb * c;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] = a[static_cast<size_t>(da - db + i)] - la * b[static_cast<size_t>(i)];
        trim(a);
    }
    return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    YPoly A = a.as_poly_in_y(), B = b.as_poly_in_y();
    UPoly c = gcd(content_x(A), content_x(B));
    A = primitive_y(A);
    B = primitive_y(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        if (B.size() == 1) {
            A = {UPoly(1)};
            break;
        }
        YPoly R = pseudo_rem(A, B);
        A = std::move(B);
        B = R.empty() ? R : primitive_y(R);
    }
    YPoly G = A;
    for (auto& coef : G) coef = c * coef;
    return BiPoly::from_poly_in_y(G).normalized();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "exact_div by zero");
    BiPoly rem = a, q;
    Exp2 lb = b.leading_exp();
    Rational inv = 1 / b.lc();
    while (!rem.is_zero()) {
        Exp2 lr = rem.leading_exp();
        if (lr.first < lb.first || lr.second < lb.second) throw Error(ErrorCode::Internal, "inexact bivariate division");
        BiPoly t = BiPoly::monomial(rem.lc() * inv, lr.first - lb.first, lr.second - lb.second);
        q += t;
        rem -= t * b;
    }
    return q;
}

bool divides(const BiPoly& b, const BiPoly& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

BiPoly squarefree_part(const BiPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_part of zero");
    if (g.is_constant()) return BiPoly(1);
    BiPoly d = gcd(gcd(g, differentiate(g, Var::X)), differentiate(g, Var::Y));
    return exact_div(g, d).normalized();
}

UPoly resultant_y(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    YPoly A = a.as_poly_in_y(), B = b.as_poly_in_y();
    int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
    if (m == 0 && n == 0) return UPoly(1);
    if (m == 0) {
        UPoly r(1);
        for (int k = 0; k < n; ++k) r = r * A[0];
        return r;
    }
    if (n == 0) {
        UPoly r(1);
        for (int k = 0; k < m; ++k) r = r * B[0];
        return r;
    }
    int dxa = a.degree_in(Var::X), dxb = b.degree_in(Var::X);
    int bound = std::min(n * dxa + m * dxb, a.total_degree() * b.total_degree());
    std::vector<Rational> xs, ys;
    for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        Rational x0((k % 2) ? (k + 1) / 2 : -(k / 2));
        if (sgn(A.back().eval(x0)) == 0 || sgn(B.back().eval(x0)) == 0) continue;
        xs.push_back(x0);
        ys.push_back(resultant(a.eval_var(Var::X, x0), b.eval_var(Var::X, x0)));
    }
    return interpolate(xs, ys);
}

TriPoly homogenize(const BiPoly& p) {
    TriPoly q;
    q.degree = std::max(0, p.total_degree());
    for (auto& [e, a] : p.terms()) q.terms[{e.first, e.second, q.degree - e.first - e.second}] = a;
    return q;
}

BiPoly dehomogenize(const TriPoly& q) {
    BiPoly r;
    for (auto& [e, a] : q.terms) r.add_term(a, std::get<0>(e), std::get<1>(e));
    return r;
}

BiPoly chart_x(const TriPoly& q) {
    BiPoly r;
    for (auto& [e, a] : q.terms) r.add_term(a, std::get<1>(e), std::get<2>(e));
    return r;
}

BiPoly chart_y(const TriPoly& q, const Rational& a) {
    BiPoly r;
    for (auto& [e, c] : q.terms) r.add_term(c, std::get<0>(e), std::get<2>(e));
    return r.compose(BiPoly::x() + BiPoly(a), BiPoly::y());
}

}  // namespace bif
