#include "bif/upoly.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <sstream>

namespace bif {

UPoly UPoly::monomial(const Rational& a, int k) {
    if (sgn(a) == 0) return {};
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c[static_cast<size_t>(k)] = a;
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (int i = deg(); i >= 0; --i) {
        acc *= x;
        acc += c_[static_cast<size_t>(i)];
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (deg() < 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / lc();
    return inv * *this;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UPoly UPoly::primitive() const {
    if (is_zero()) return {};
    Integer l = 1, g = 0;
    for (auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (auto& a : c_) {
        Rational b = a * Rational(l);
        out.push_back(b);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_num_mpz_t());
    }
    if (sgn(out.back()) < 0) g = -g;
    for (auto& b : out) b /= Rational(g);
    return UPoly(std::move(out));
}

Integer UPoly::lc_primitive_abs() const {
    UPoly p = primitive();
    return is_zero() ? Integer(0) : Integer(abs(p.lc().get_num()));
}

UPoly UPoly::compose_linear(const Rational& a, const Rational& b) const {
    UPoly lin(std::vector<Rational>{b, a});
    return compose(lin);
}

UPoly UPoly::compose(const UPoly& q) const {
    UPoly acc;
    for (int i = deg(); i >= 0; --i) acc = acc * q + UPoly(c_[static_cast<size_t>(i)]);
    return acc;
}

UPoly UPoly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UPoly(std::move(r));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

namespace {

// p = num / den with integer num coefficients.
Integer integer_form(const std::vector<Rational>& c, std::vector<Integer>& num) {
    Integer den = 1;
    for (auto& a : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
    num.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) num[i] = c[i].get_num() * (den / c[i].get_den());
    return den;
}

}  // namespace

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> na, nb;
    Integer den = integer_form(a.c_, na) * integer_form(b.c_, nb);
    std::vector<Integer> c(na.size() + nb.size() - 1);
    for (size_t i = 0; i < na.size(); ++i) {
        if (sgn(na[i]) == 0) continue;
        for (size_t j = 0; j < nb.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
    std::vector<Rational> r(c.size());
    for (size_t k = 0; k < c.size(); ++k) r[k] = Rational(c[k], den);
    return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    if (sgn(s) == 0) return {};
    UPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string UPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rational& a = c_[static_cast<size_t>(i)];
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        Rational m = abs(a);
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) {
            if (i == 0 || m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    int db = b.deg(), da = a.deg();
    if (da < db) {
        q = UPoly();
        r = a;
        return;
    }
    // Pseudo-division over Z: L^e * A = Q * B + R, then scale back.
    std::vector<Integer> A, B;
    Integer dena = integer_form(a.coeffs(), A), denb = integer_form(b.coeffs(), B);
    const Integer L = B[static_cast<size_t>(db)];
    std::vector<Integer> Q(static_cast<size_t>(da - db + 1));
    Integer scale = 1;
    for (int k = da - db; k >= 0; --k) {
        Integer t = A[static_cast<size_t>(k + db)];
        if (sgn(t) == 0) continue;
        for (int i = 0; i < k + db; ++i) A[static_cast<size_t>(i)] *= L;
        for (auto& c : Q) c *= L;
        scale *= L;
        Q[static_cast<size_t>(k)] = t;
        for (int i = 0; i < db; ++i) A[static_cast<size_t>(k + i)] -= t * B[static_cast<size_t>(i)];
        A[static_cast<size_t>(k + db)] = 0;
    }
    std::vector<Rational> quo(Q.size()), rem(static_cast<size_t>(db));
    Integer qden = scale * dena;
    for (size_t k = 0; k < Q.size(); ++k) quo[k] = Rational(Q[k] * denb, qden);
    for (int i = 0; i < db; ++i) rem[static_cast<size_t>(i)] = Rational(A[static_cast<size_t>(i)], qden);
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly operator/(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return q;
}

UPoly operator%(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        UPoly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
    // Monic remainders keep the cofactors at their canonical sizes.
    UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    auto normalize = [](UPoly& r, UPoly& x, UPoly& y) {
        if (r.is_zero()) return;
        Rational inv = 1 / r.lc();
        r = inv * r;
        x = inv * x;
        y = inv * y;
    };
    normalize(r0, s0, t0);
    normalize(r1, s1, t1);
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        normalize(r, s2, t2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    s = s0;
    t = t0;
    return r0;
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = a % m, s0, s1(1);
    while (!r1.is_zero()) {
        Rational inv = 1 / r1.lc();
        r1 = inv * r1;
        s1 = inv * s1;
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.deg() != 0) throw Error(ErrorCode::Internal, "inverse_mod of a non-unit");
    return (1 / r0.lc()) * s0 % m;
}

UPoly squarefree(const UPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree of zero");
    if (p.deg() < 1) return UPoly(1);
    UPoly g = gcd(p, p.derivative());
    return (p / g).primitive();
}

Rational resultant(const UPoly& a0, const UPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return 0;
    UPoly a = a0, b = b0;
    Rational acc = 1;
    while (true) {
        int m = a.deg(), n = b.deg();
        if (n == 0) return acc * pow(b.lc(), static_cast<unsigned>(m));
        if (m == 0) return acc * pow(a.lc(), static_cast<unsigned>(n));
        UPoly r = a % b;
        if (r.is_zero()) return 0;
        // Res(a,b) = (-1)^{mn} lc(b)^{m-deg r} Res(b,r)
        if ((m % 2) && (n % 2)) acc = -acc;
        acc *= pow(b.lc(), static_cast<unsigned>(m - r.deg()));
        a = std::move(b);
        b = std::move(r);
    }
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (sgn(m[i][k]) != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rational inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (sgn(m[i][k]) == 0) continue;
            Rational f = m[i][k] * inv;
            for (size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

std::vector<Rational> subresultant(const UPoly& a, const UPoly& b, int j) {
    int m = a.deg(), n = b.deg();
    int cols = m + n - j;
    int size = m + n - 2 * j;
    std::vector<std::vector<Rational>> rows;
    for (int k = n - j - 1; k >= 0; --k) {
        std::vector<Rational> row(static_cast<size_t>(cols));
        for (int i = 0; i <= m; ++i) row[static_cast<size_t>(cols - 1 - (i + k))] = a[i];
        rows.push_back(std::move(row));
    }
    for (int k = m - j - 1; k >= 0; --k) {
        std::vector<Rational> row(static_cast<size_t>(cols));
        for (int i = 0; i <= n; ++i) row[static_cast<size_t>(cols - 1 - (i + k))] = b[i];
        rows.push_back(std::move(row));
    }
    std::vector<Rational> out(static_cast<size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) {
        std::vector<std::vector<Rational>> sq(static_cast<size_t>(size), std::vector<Rational>(static_cast<size_t>(size)));
        for (int r = 0; r < size; ++r) {
            for (int c = 0; c < size - 1; ++c) sq[static_cast<size_t>(r)][static_cast<size_t>(c)] = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            sq[static_cast<size_t>(r)][static_cast<size_t>(size - 1)] = rows[static_cast<size_t>(r)][static_cast<size_t>(cols - 1 - i)];
        }
        out[static_cast<size_t>(i)] = determinant(std::move(sq));
    }
    return out;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    UPoly acc;
    for (size_t i = n; i-- > 0;) acc = acc * UPoly(std::vector<Rational>{-xs[i], 1}) + UPoly(dd[i]);
    return acc;
}

UPoly charpoly(const std::vector<std::vector<Rational>>& m0) {
    auto h = m0;
    size_t n = h.size();
    // similarity reduction to upper Hessenberg form
    for (size_t k = 0; k + 2 < n; ++k) {
        size_t piv = n;
        for (size_t i = k + 1; i < n; ++i)
            if (sgn(h[i][k]) != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][k + 1]);
        }
        Rational inv = 1 / h[k + 1][k];
        for (size_t i = k + 2; i < n; ++i) {
            if (sgn(h[i][k]) == 0) continue;
            Rational f = h[i][k] * inv;
            for (size_t j = 0; j < n; ++j) h[i][j] -= f * h[k + 1][j];
            for (size_t r = 0; r < n; ++r) h[r][k + 1] += f * h[r][i];
        }
    }
    std::vector<UPoly> p(n + 1);
    p[0] = UPoly(1);
    UPoly T = UPoly::x();
    for (size_t mm = 1; mm <= n; ++mm) {
        p[mm] = (T - UPoly(h[mm - 1][mm - 1])) * p[mm - 1];
        Rational prod = 1;
        for (size_t i = mm - 1; i-- > 0;) {
            prod *= h[i + 1][i];
            if (sgn(prod) == 0) break;
            p[mm] = p[mm] - (prod * h[i][mm - 1]) * p[i];
        }
    }
    return p[n];
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> s{p, p.derivative()};
    while (!s.back().is_zero()) {
        UPoly r = -(s[s.size() - 2] % s.back());
        if (r.is_zero()) break;
        // positive rescaling keeps sign variations intact
        s.push_back(sgn(r.lc()) > 0 ? r.primitive() : -r.primitive());
    }
    if (s.back().is_zero()) s.pop_back();
    return s;
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
    std::vector<int> s;
    for (auto& p : seq) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int sign_variations_at_pos_inf(const std::vector<UPoly>& seq) {
    std::vector<int> s;
    for (auto& p : seq) s.push_back(p.is_zero() ? 0 : sgn(p.lc()));
    return count_variations(s);
}

int sign_variations_at_neg_inf(const std::vector<UPoly>& seq) {
    std::vector<int> s;
    for (auto& p : seq) s.push_back(p.is_zero() ? 0 : sgn(p.lc()) * ((p.deg() % 2) ? -1 : 1));
    return count_variations(s);
}

Rational root_bound(const UPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.deg(); ++i) m = std::max(m, Rational(abs(p[i] / p.lc())));
    Rational b = 1 + m;
    Rational pw = 1;
    while (pw <= b) pw *= 2;
    return pw;
}

}  // namespace bif
