#include "bif/realroots.hpp"
#include "bif/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bif {

AlgebraicReal::AlgebraicReal(const Rational& q) : rational_(true), q_(q) {
    p_ = UPoly(std::vector<Rational>{-q, 1}).primitive();
    iso_ = {q, q};
}

AlgebraicReal::AlgebraicReal(const UPoly& p, const Interval& iso) {
    p_ = squarefree(p);
    if (iso.lo == iso.hi) {
        *this = AlgebraicReal(iso.lo);
        return;
    }
    if (p_.deg() == 1) {
        *this = AlgebraicReal(-p_[0] / p_[1]);
        return;
    }
    rational_ = false;
    iso_ = iso;
    lv_ = std::make_shared<const Level>(nullptr, to_epoly(p_.monic()), iso.lo, iso.hi, p_.sign_at(iso.lo),
                                        p_.sign_at(iso.hi));
}

Interval AlgebraicReal::isolator() const {
    if (rational_) return {q_, q_};
    return lv_->isolator();
}

Elem AlgebraicReal::elem() const {
    if (rational_) return Elem(q_);
    return Elem::generator(lv_);
}

Elem AlgebraicReal::elem_over(const LevelPtr& base) const {
    if (rational_) return Elem(q_);
    if (!base) return elem();
    Interval I = lv_->isolator();
    if (I.lo == I.hi) return Elem(I.lo);
    auto L = std::make_shared<const Level>(base, to_epoly(p_.monic()), I.lo, I.hi, p_.sign_at(I.lo), p_.sign_at(I.hi));
    return Elem::generator(L);
}

namespace {

bool overlaps(const Encl& a, const Encl& b) {
    return !(mpfr_less_p(a.hi(), b.lo()) || mpfr_less_p(b.hi(), a.lo()));
}

AlgebraicReal from_root_elem(const Elem& r) {
    if (r.is_rational()) return AlgebraicReal(r.rational());
    std::vector<Rational> c;
    for (auto& m : r.level()->modulus()) c.push_back(m.rational());
    return AlgebraicReal(UPoly(std::move(c)), r.level()->isolator());
}

}  // namespace

AlgebraicReal AlgebraicReal::from_elem(const Elem& e) {
    if (e.is_rational()) return AlgebraicReal(e.rational());
    UPoly cp = squarefree(tower_charpoly(e));
    std::vector<Elem> roots = real_roots(cp);
    for (long prec = 32; prec < (1L << 20); prec *= 2) {
        Encl E = e.enclose(prec);
        int hits = 0;
        size_t which = 0;
        for (size_t i = 0; i < roots.size(); ++i)
            if (overlaps(E, roots[i].enclose(prec))) {
                ++hits;
                which = i;
            }
        if (hits == 1) return from_root_elem(roots[which]);
        if (hits == 0) throw Error(ErrorCode::Internal, "element value is not a root of its characteristic polynomial");
    }
    throw Error(ErrorCode::Internal, "could not isolate element value");
}

std::string AlgebraicReal::decimal(int digits, std::string* err) const {
    long bits = static_cast<long>(digits * 3.33) + 16;
    Encl E = enclose(bits);
    Rational lo = E.lo_q(), hi = E.hi_q();
    Rational scale = pow(Rational(10), static_cast<unsigned>(digits));
    Rational m = (lo + hi) / 2 * scale;
    Integer n = floor(m + Rational(1, 2));
    Rational r = Rational(n) / scale;
    if (err) {
        Rational e = std::max(Rational(hi - r), Rational(r - lo));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", e.get_d());
        *err = buf;
    }
    bool neg = n < 0;
    Integer a = abs(n);
    std::string s = a.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) s = std::string(static_cast<size_t>(digits) + 1 - s.size(), '0') + s;
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    return (neg ? "-" : "") + s;
}

std::string AlgebraicReal::str() const {
    if (rational_) return q_.get_str();
    Interval I = isolator();
    std::ostringstream os;
    os << "root of " << p_.str() << " in [" << I.lo.get_str() << ", " << I.hi.get_str() << "]";
    return os.str();
}

int compare(const Elem& e, const AlgebraicReal& a) {
    if (a.is_rational()) return (e - Elem(a.rational())).sign();
    return (e - a.elem_over(e.level())).sign();
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) return cmp(a.rational(), b.rational()) < 0 ? -1 : (a.rational() == b.rational() ? 0 : 1);
    if (b.is_rational()) return -compare(b, a);
    return compare(a.elem(), b);
}

std::vector<AlgebraicReal> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_real_roots of zero");
    std::vector<AlgebraicReal> out;
    for (auto& r : real_roots(p)) out.push_back(from_root_elem(r));
    return out;
}

Elem eval_at(const BiPoly& p, const Elem& x, const Elem& y) {
    auto cy = p.as_poly_in_y();
    Elem acc(0);
    for (size_t j = cy.size(); j-- > 0;) {
        Elem c(0);
        for (int i = cy[j].deg(); i >= 0; --i) c = c * x + Elem(cy[j][i]);
        acc = acc * y + c;
    }
    return acc;
}

std::pair<Interval, Interval> PlaneBox::box(long bits) const {
    Encl ex = x.enclose(bits), ey = y.enclose(bits);
    return {{ex.lo_q(), ex.hi_q()}, {ey.lo_q(), ey.hi_q()}};
}

Sign certified_sign(const BiPoly& p, const PlaneBox& b) {
    return static_cast<Sign>(eval_at(p, b.x, b.y).sign());
}

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::Negative: return "Negative";
        case Sign::Zero: return "Zero";
        case Sign::Positive: return "Positive";
    }
    return "?";
}

namespace {

// Coefficients (s0, s1) of the first subresultant s1*y + s0 of A, B in y.
void first_subresultant(const BiPoly& A, const BiPoly& B, UPoly& s0, UPoly& s1) {
    int m = A.degree_in(Var::Y), n = B.degree_in(Var::Y);
    if (m == 1 || n == 1) {
        const BiPoly& L = (n == 1) ? B : A;
        auto c = L.as_poly_in_y();
        s0 = c[0];
        s1 = c[1];
        return;
    }
    int bound = A.total_degree() * B.total_degree();
    std::vector<Rational> xs, y0, y1;
    for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        Rational x0((k % 2) ? (k + 1) / 2 : -(k / 2));
        auto sr = subresultant(A.eval_var(Var::X, x0), B.eval_var(Var::X, x0), 1);
        xs.push_back(x0);
        y0.push_back(sr[0]);
        y1.push_back(sr[1]);
    }
    s0 = interpolate(xs, y0);
    s1 = interpolate(xs, y1);
}

}  // namespace

BivariateSolution solve_bivariate(const BiPoly& g1, const BiPoly& g2) {
    if (g1.is_zero() || g2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "solve_bivariate with zero input");
    BivariateSolution sol;
    sol.shared = gcd(g1, g2);
    BiPoly a = exact_div(g1, sol.shared), b = exact_div(g2, sol.shared);
    if (a.is_constant() || b.is_constant()) return sol;
    for (int k = 0; k < 64; ++k) {
        BiPoly sx = BiPoly::x() + Rational(k) * BiPoly::y();
        BiPoly A = k ? a.compose(sx, BiPoly::y()) : a;
        BiPoly B = k ? b.compose(sx, BiPoly::y()) : b;
        // leading coefficients in y must be constants
        if (A.degree_in(Var::Y) != A.total_degree() || B.degree_in(Var::Y) != B.total_degree()) continue;
        UPoly r = resultant_y(A, B);
        if (r.is_zero()) continue;
        if (r.deg() < 1) {
            sol.shear = k;
            return sol;
        }
        UPoly rs = squarefree(r);
        UPoly s0, s1;
        first_subresultant(A, B, s0, s1);
        // Roots where s1 vanishes carry several intersections (or a tangential
        // one) above them; they are resolved by an exact gcd in the tower.
        UPoly tangled = gcd(s1, rs);
        UPoly clean = rs / tangled;
        std::vector<std::pair<Elem, Elem>> found;  // (theta, y)
        if (clean.deg() > 0) {
            UPoly inv = inverse_mod(s1, clean);
            EPoly Ye = to_epoly((-(s0 * inv)) % clean);
            for (auto& th : real_roots(clean)) found.push_back({th, epoly_eval(Ye, th)});
        }
        if (tangled.deg() > 0) {
            auto ay = A.as_poly_in_y(), by = B.as_poly_in_y();
            for (auto& th : real_roots(tangled)) {
                EPoly ea, eb;
                for (auto& c : ay) ea.push_back(epoly_eval(to_epoly(c), th));
                for (auto& c : by) eb.push_back(epoly_eval(to_epoly(c), th));
                for (auto& yv : real_roots(epoly_gcd(ea, eb))) found.push_back({th, yv});
            }
        }
        for (auto& [th, yv] : found) sol.points.push_back(PlaneBox{th + Elem(Rational(k)) * yv, yv, g1, g2});
        sol.shear = k;
        return sol;
    }
    throw Error(ErrorCode::Internal, "no shear gives constant leading coefficients");
}

}  // namespace bif
