#include "bif/tower.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <functional>

namespace bif {

namespace {

void reduce_by(const EPoly& q, std::vector<Elem>& c) {
    size_t d = q.size() - 1;
    for (size_t k = c.size(); k-- > d;) {
        Elem t = c[k];
        if (t.is_syntactic_zero()) continue;
        for (size_t i = 0; i < d; ++i) c[k - d + i] -= t * q[i];
    }
    if (c.size() > d) c.resize(d);
}

void trim_syntactic(std::vector<Elem>& c) {
    while (!c.empty() && c.back().is_syntactic_zero()) c.pop_back();
}

const Level* level_of(const Elem& e) { return e.level().get(); }

// Fast path for levels directly over Q: coefficients are rationals.
bool all_rational(const std::vector<Elem>& c) {
    return std::all_of(c.begin(), c.end(), [](const Elem& e) { return e.is_rational(); });
}

UPoly as_upoly(const std::vector<Elem>& c) {
    std::vector<Rational> r;
    r.reserve(c.size());
    for (auto& e : c) r.push_back(e.rational());
    return UPoly(std::move(r));
}

std::vector<Elem> as_elems(const UPoly& p) {
    std::vector<Elem> c;
    c.reserve(p.coeffs().size());
    for (auto& a : p.coeffs()) c.emplace_back(a);
    return c;
}

// p mod q through an integer pseudo-remainder, avoiding rational gcds in the inner loop.
UPoly reduce_rational(const UPoly& p, const UPoly& q) {
    int n = p.deg(), d = q.deg();
    if (n < d) return p;
    Integer dp = 1, dq = 1;
    for (auto& a : p.coeffs()) mpz_lcm(dp.get_mpz_t(), dp.get_mpz_t(), a.get_den_mpz_t());
    for (auto& a : q.coeffs()) mpz_lcm(dq.get_mpz_t(), dq.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Integer> r(static_cast<size_t>(n + 1)), Q(static_cast<size_t>(d + 1));
    for (int i = 0; i <= n; ++i) r[static_cast<size_t>(i)] = p[i].get_num() * (dp / p[i].get_den());
    for (int i = 0; i <= d; ++i) Q[static_cast<size_t>(i)] = q[i].get_num() * (dq / q[i].get_den());
    const Integer& L = Q[static_cast<size_t>(d)];
    Integer scale = 1;
    for (int k = n; k >= d; --k) {
        Integer t = r[static_cast<size_t>(k)];
        if (sgn(t) != 0) {
            for (int i = 0; i < k; ++i) r[static_cast<size_t>(i)] *= L;
            for (int i = 0; i < d; ++i) r[static_cast<size_t>(k - d + i)] -= t * Q[static_cast<size_t>(i)];
            scale *= L;
        }
        r[static_cast<size_t>(k)] = 0;
    }
    Integer den = scale * dp;
    std::vector<Rational> out(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        out[static_cast<size_t>(i)] = Rational(r[static_cast<size_t>(i)], den);
    }
    return UPoly(std::move(out));
}

void check_chain(const Elem& deep, const Elem& shallow) {
    if (shallow.is_rational()) return;
    if (!shallow.level()->is_ancestor_of(level_of(deep)))
        throw Error(ErrorCode::Internal, "mixing elements of unrelated algebraic towers");
}

}  // namespace

// ---------------------------------------------------------------- Level

Level::Level(LevelPtr parent, EPoly monic_modulus, Rational lo, Rational hi, int sign_lo, int sign_hi)
    : parent_(std::move(parent)), q_(std::move(monic_modulus)), lo_(std::move(lo)), hi_(std::move(hi)),
      slo_(sign_lo), shi_(sign_hi) {
    depth_ = parent_ ? parent_->depth() + 1 : 1;
    rational_modulus_ = std::all_of(q_.begin(), q_.end(), [](const Elem& e) { return e.is_rational(); });
    if (rational_modulus_) {
        std::vector<Rational> c;
        for (auto& e : q_) c.push_back(e.rational());
        q_rational_ = UPoly(std::move(c));
    }
    if (q_.size() < 2) throw Error(ErrorCode::Internal, "level modulus must have degree >= 1");
    if (lo_ == hi_) exact_ = true;
    else if (slo_ == 0 || shi_ == 0 || slo_ == shi_) throw Error(ErrorCode::Internal, "invalid isolator for level");
}

int Level::modulus_sign_at(const Rational& x) const {
    if (rational_modulus_) return q_rational_.sign_at(x);
    return epoly_eval(q_, Elem(x)).sign();
}

void Level::refine_once() const {
    Rational mid = (lo_ + hi_) / 2;
    int s = modulus_sign_at(mid);
    if (s == 0) {
        lo_ = hi_ = mid;
        exact_ = true;
    } else if (s == slo_) {
        lo_ = mid;
    } else {
        hi_ = mid;
    }
}

Interval Level::isolator(long bits) const {
    std::lock_guard<std::mutex> lock(mu_);
    Rational w = ldexp(Rational(1), -bits);
    while (!exact_ && hi_ - lo_ > w) refine_once();
    return {lo_, hi_};
}

Interval Level::isolator() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {lo_, hi_};
}

bool Level::exact() const {
    std::lock_guard<std::mutex> lock(mu_);
    return exact_;
}

bool Level::is_ancestor_of(const Level* other) const {
    for (const Level* o = other; o; o = o->parent_.get())
        if (o == this) return true;
    return false;
}

// ---------------------------------------------------------------- Elem

int Elem::depth() const { return lv_ ? lv_->depth() : 0; }

Elem Elem::generator(const LevelPtr& L) {
    return from_coeffs(L, {Elem(0), Elem(1)});
}

Elem Elem::from_coeffs(const LevelPtr& L, std::vector<Elem> c) {
    if (!L) {
        if (c.empty()) return Elem(0);
        if (c.size() == 1) return c[0];
        throw Error(ErrorCode::Internal, "polynomial coefficients without a level");
    }
    if (c.size() > L->modulus().size() - 1) {
        const UPoly* q = L->rational_modulus();
        if (q && all_rational(c)) c = as_elems(reduce_rational(as_upoly(c), *q));
        else reduce_by(L->modulus(), c);
    }
    trim_syntactic(c);
    if (c.empty()) return Elem(0);
    if (c.size() == 1) return c[0];
    Elem e;
    e.lv_ = L;
    e.c_ = std::move(c);
    return e;
}

Elem operator+(const Elem& a, const Elem& b) {
    if (a.is_rational() && b.is_rational()) return Elem(a.q_ + b.q_);
    int da = a.depth(), db = b.depth();
    if (da > db) {
        check_chain(a, b);
        Elem r = a;
        r.c_[0] = r.c_[0] + b;
        return r;
    }
    if (db > da) return b + a;
    if (a.lv_ != b.lv_) throw Error(ErrorCode::Internal, "mixing elements of unrelated algebraic towers");
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Elem::from_coeffs(a.lv_, std::move(c));
}

Elem Elem::operator-() const {
    if (is_rational()) return Elem(-q_);
    Elem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
    if (a.is_rational() && b.is_rational()) return Elem(a.q_ * b.q_);
    if (a.is_syntactic_zero() || b.is_syntactic_zero()) return Elem(0);
    int da = a.depth(), db = b.depth();
    if (da > db) {
        check_chain(a, b);
        std::vector<Elem> c = a.c_;
        for (auto& x : c) x = x * b;
        return Elem::from_coeffs(a.lv_, std::move(c));
    }
    if (db > da) return b * a;
    if (a.lv_ != b.lv_) throw Error(ErrorCode::Internal, "mixing elements of unrelated algebraic towers");
    if (const UPoly* q = a.lv_->rational_modulus(); q && da == 1)
        return Elem::from_coeffs(a.lv_, as_elems(reduce_rational(as_upoly(a.c_) * as_upoly(b.c_), *q)));
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_syntactic_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Elem::from_coeffs(a.lv_, std::move(c));
}

Elem Elem::pow(unsigned e) const {
    Elem r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Elem Elem::inv() const {
    if (is_rational()) {
        if (::sgn(q_) == 0) throw Error(ErrorCode::Internal, "inverse of zero");
        return Elem(1 / q_);
    }
    const Level& L = *lv_;
    if (L.exact()) return epoly_eval(c_, Elem(L.isolator().lo)).inv();
    if (sign() == 0) throw Error(ErrorCode::Internal, "inverse of an element vanishing at the point");
    if (const UPoly* q = L.rational_modulus(); q && all_rational(c_)) {
        UPoly a = as_upoly(c_), qc = *q;
        while (true) {
            UPoly g = gcd(a, qc);
            if (g.deg() == 0) return from_coeffs(lv_, as_elems(inverse_mod(a, qc)));
            qc = qc / g;
            a = a % qc;
        }
    }
    EPoly qc = L.modulus();
    while (true) {
        EPoly s;
        EPoly g = epoly_ext_gcd(c_, qc, s);
        if (g.size() == 1) return from_coeffs(lv_, std::move(s));
        // u_L is not a root of g (g divides this element), so it stays a root of qc / g
        EPoly quo, rem;
        epoly_divmod(qc, g, quo, rem);
        qc = std::move(quo);
    }
}

bool Elem::exact_zero_test() const {
    const Level& L = *lv_;
    if (L.exact()) return epoly_eval(c_, Elem(L.isolator().lo)).sign() == 0;
    EPoly g;
    if (const UPoly* q = L.rational_modulus(); q && all_rational(c_)) g = to_epoly(gcd(as_upoly(c_), *q));
    else g = epoly_gcd(c_, L.modulus());
    if (g.size() <= 1) return false;
    Interval I = L.isolator();
    if (I.lo == I.hi) return epoly_eval(c_, Elem(I.lo)).sign() == 0;
    int s1 = epoly_eval(g, Elem(I.lo)).sign();
    int s2 = epoly_eval(g, Elem(I.hi)).sign();
    return s1 * s2 < 0;
}

int Elem::sign() const {
    if (is_rational()) return ::sgn(q_);
    for (long p : {48L, 112L}) {
        int s = enclose_raw(p).sign();
        if (s != 0) return s;
    }
    if (exact_zero_test()) return 0;
    for (long p = 224; p < (1L << 24); p *= 2) {
        int s = enclose_raw(p).sign();
        if (s != 0) return s;
    }
    throw Error(ErrorCode::Internal, "sign refinement did not terminate");
}

Encl Elem::enclose_raw(long bits) const {
    long work = bits + 64;
    if (is_rational()) return Encl(q_, work);
    Interval I = lv_->isolator(bits);
    Encl u(I.lo, I.hi, work);
    Encl acc = c_.back().enclose_raw(bits);
    for (size_t k = c_.size() - 1; k-- > 0;) acc = acc * u + c_[k].enclose_raw(bits);
    return acc;
}

Encl Elem::enclose(long prec) const {
    if (is_rational()) return Encl(q_, prec + 64);
    Rational target = ldexp(Rational(1), -prec);
    long bits = prec;
    for (int it = 0; it < 64; ++it) {
        Encl e = enclose_raw(bits);
        Rational w = e.hi_q() - e.lo_q();
        if (w <= target) return e;
        // Horner amplifies the isolator width; ask for the missing bits plus a margin.
        long missing = static_cast<long>(mpz_sizeinbase(Integer(w / target + 1).get_mpz_t(), 2));
        bits += missing + 8;
    }
    throw Error(ErrorCode::Internal, "enclosure did not tighten");
}

double Elem::approx() const {
    if (is_rational()) return q_.get_d();
    return enclose(60).mid_d();
}

// ---------------------------------------------------------------- EPoly

void epoly_trim_exact(EPoly& p) {
    while (!p.empty() && p.back().sign() == 0) p.pop_back();
}

EPoly epoly_add(const EPoly& a, const EPoly& b) {
    EPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim_syntactic(c);
    return c;
}

EPoly epoly_sub(const EPoly& a, const EPoly& b) {
    EPoly c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim_syntactic(c);
    return c;
}

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty()) return {};
    EPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_syntactic_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim_syntactic(c);
    return c;
}

EPoly epoly_scale(const EPoly& a, const Elem& s) {
    EPoly c = a;
    for (auto& x : c) x = x * s;
    trim_syntactic(c);
    return c;
}

EPoly epoly_derivative(const EPoly& a) {
    EPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Elem(static_cast<long>(i)));
    trim_syntactic(d);
    return d;
}

Elem epoly_eval(const EPoly& a, const Elem& x) {
    Elem acc(0);
    for (size_t k = a.size(); k-- > 0;) acc = acc * x + a[k];
    return acc;
}

static bool is_one(const Elem& e) { return e.is_rational() && e.rational() == 1; }

void epoly_divmod(EPoly a, EPoly b, EPoly& q, EPoly& r) {
    epoly_trim_exact(b);
    if (b.empty()) throw Error(ErrorCode::ZeroPolynomial, "division by a polynomial vanishing at the point");
    epoly_trim_exact(a);
    size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        q.clear();
        r = std::move(a);
        return;
    }
    Elem inv = is_one(b.back()) ? Elem(1) : b.back().inv();
    q.assign(a.size() - db, Elem(0));
    for (size_t k = a.size() - b.size() + 1; k-- > 0;) {
        Elem t = a[k + db] * inv;
        q[k] = t;
        a[k + db] = Elem(0);
        if (t.is_syntactic_zero()) continue;
        for (size_t i = 0; i < db; ++i) a[k + i] -= t * b[i];
    }
    a.resize(db);
    epoly_trim_exact(a);
    r = std::move(a);
}

static EPoly make_monic(EPoly p) {
    if (p.empty() || is_one(p.back())) return p;
    Elem inv = p.back().inv();
    for (auto& c : p) c = c * inv;
    p.back() = Elem(1);
    return p;
}

EPoly epoly_gcd(EPoly a, EPoly b) {
    epoly_trim_exact(a);
    epoly_trim_exact(b);
    while (!b.empty()) {
        EPoly q, r;
        epoly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

EPoly epoly_ext_gcd(EPoly a, EPoly b, EPoly& s) {
    epoly_trim_exact(a);
    epoly_trim_exact(b);
    EPoly s0{Elem(1)}, s1;
    while (!b.empty()) {
        EPoly q, r;
        epoly_divmod(a, b, q, r);
        EPoly s2 = epoly_sub(s0, epoly_mul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) throw Error(ErrorCode::Internal, "ext_gcd of zero polynomials");
    Elem inv = is_one(a.back()) ? Elem(1) : a.back().inv();
    s = epoly_scale(s0, inv);
    for (auto& c : a) c = c * inv;
    a.back() = Elem(1);
    return a;
}

EPoly epoly_squarefree(const EPoly& p0) {
    EPoly p = p0;
    epoly_trim_exact(p);
    if (p.size() <= 1) return make_monic(p);
    EPoly g = epoly_gcd(p, epoly_derivative(p));
    if (g.size() <= 1) return make_monic(p);
    EPoly q, r;
    epoly_divmod(p, g, q, r);
    return make_monic(q);
}

EPoly to_epoly(const UPoly& p) {
    EPoly r;
    for (auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

LevelPtr common_level(const LevelPtr& a, const LevelPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->is_ancestor_of(b.get())) return b;
    if (b->is_ancestor_of(a.get())) return a;
    throw Error(ErrorCode::Internal, "mixing elements of unrelated algebraic towers");
}

LevelPtr common_level(const EPoly& p) {
    LevelPtr L;
    for (auto& c : p) L = common_level(L, c.level());
    return L;
}

// ---------------------------------------------------------------- roots

namespace {

struct RootCell {
    Rational lo, hi;
    bool exact;
};

using SignAt = std::function<int(const Rational&)>;
using VarAt = std::function<int(const Rational&)>;

void bisect(const SignAt& s, const VarAt& V, Rational a, Rational b, int va, int vb, std::vector<RootCell>& out) {
    int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
        out.push_back({a, b, false});
        return;
    }
    Rational m = (a + b) / 2;
    if (s(m) == 0) {
        Rational d = (b - a) / 4;
        Rational l, r;
        int vl, vr;
        while (true) {
            l = m - d;
            r = m + d;
            if (s(l) != 0 && s(r) != 0) {
                vl = V(l);
                vr = V(r);
                if (vl - vr == 1) break;
            }
            d /= 2;
        }
        bisect(s, V, a, l, va, vl, out);
        out.push_back({m, m, true});
        bisect(s, V, r, b, vr, vb, out);
        return;
    }
    int vm = V(m);
    bisect(s, V, a, m, va, vm, out);
    bisect(s, V, m, b, vm, vb, out);
}

// Shrinks a cell (one sign change of a squarefree polynomial) and tries the
// simplest rational inside it.
void recognize_rational(const SignAt& s, RootCell& c) {
    if (c.exact) return;
    int slo = s(c.lo);
    Rational w = ldexp(Rational(1), -30);
    while (c.hi - c.lo > w) {
        Rational m = (c.lo + c.hi) / 2;
        int sm = s(m);
        if (sm == 0) {
            c.lo = c.hi = m;
            c.exact = true;
            return;
        }
        if (sm == slo) c.lo = m;
        else c.hi = m;
    }
    Rational r = simplest_between(c.lo, c.hi);
    if (r.get_den() <= 32768 && s(r) == 0) {
        c.lo = c.hi = r;
        c.exact = true;
    }
}

}  // namespace

std::vector<Elem> real_roots(const UPoly& p0) {
    if (p0.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real_roots of zero");
    if (p0.deg() < 1) return {};
    UPoly p = squarefree(p0);
    auto seq = sturm_sequence(p);
    Rational B = root_bound(p);
    SignAt s = [&](const Rational& x) { return p.sign_at(x); };
    VarAt V = [&](const Rational& x) { return sign_variations(seq, x); };
    std::vector<RootCell> cells;
    bisect(s, V, -B, B, V(-B), V(B), cells);
    UPoly defl = p;
    for (auto& c : cells) {
        recognize_rational(s, c);
        if (c.exact) defl = defl / UPoly(std::vector<Rational>{-c.lo, 1});
    }
    std::vector<Elem> out;
    EPoly mod = to_epoly(defl.monic());
    for (auto& c : cells) {
        if (c.exact) out.emplace_back(c.lo);
        else if (defl.deg() == 1) out.emplace_back(-defl[0] / defl[1]);
        else {
            auto L = std::make_shared<const Level>(nullptr, mod, c.lo, c.hi, defl.sign_at(c.lo), defl.sign_at(c.hi));
            out.push_back(Elem::generator(L));
        }
    }
    return out;
}

std::vector<Elem> real_roots(const EPoly& p0) {
    EPoly p = p0;
    epoly_trim_exact(p);
    if (p.size() <= 1) return {};
    LevelPtr base = common_level(p);
    if (!base) {
        std::vector<Rational> c;
        for (auto& e : p) c.push_back(e.rational());
        return real_roots(UPoly(std::move(c)));
    }
    EPoly S = epoly_squarefree(p);
    if (S.size() == 2) return {-S[0]};
    std::vector<EPoly> seq{S, epoly_derivative(S)};
    while (true) {
        EPoly q, r;
        epoly_divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    SignAt s = [&](const Rational& x) { return epoly_eval(S, Elem(x)).sign(); };
    VarAt V = [&](const Rational& x) {
        int v = 0, last = 0;
        for (auto& f : seq) {
            int sg = epoly_eval(f, Elem(x)).sign();
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    Rational m = 0;
    for (size_t i = 0; i + 1 < S.size(); ++i) m = std::max(m, S[i].enclose(32).abs().hi_q());
    Rational B = 1;
    while (B <= 1 + m) B *= 2;
    std::vector<RootCell> cells;
    bisect(s, V, -B, B, V(-B), V(B), cells);
    EPoly defl = S;
    for (auto& c : cells) {
        recognize_rational(s, c);
        if (c.exact) {
            EPoly q, r;
            epoly_divmod(defl, EPoly{Elem(-c.lo), Elem(1)}, q, r);
            defl = std::move(q);
        }
    }
    std::vector<Elem> out;
    for (auto& c : cells) {
        if (c.exact) out.emplace_back(c.lo);
        else if (defl.size() == 2) out.push_back(-defl[0] / defl[1]);
        else {
            int slo = epoly_eval(defl, Elem(c.lo)).sign(), shi = epoly_eval(defl, Elem(c.hi)).sign();
            auto L = std::make_shared<const Level>(base, defl, c.lo, c.hi, slo, shi);
            out.push_back(Elem::generator(L));
        }
    }
    return out;
}

// ---------------------------------------------------------------- Q-basis

int tower_dimension(const LevelPtr& L) {
    return L ? L->degree() * tower_dimension(L->parent()) : 1;
}

std::vector<Rational> tower_coords(const Elem& e, const LevelPtr& L) {
    if (!L) {
        if (!e.is_rational()) throw Error(ErrorCode::Internal, "tower_coords: element deeper than target level");
        return {e.rational()};
    }
    int dp = tower_dimension(L->parent());
    std::vector<Rational> out(static_cast<size_t>(dp * L->degree()));
    if (e.depth() < L->depth()) {
        auto c = tower_coords(e, L->parent());
        std::copy(c.begin(), c.end(), out.begin());
        return out;
    }
    if (e.level() != L) throw Error(ErrorCode::Internal, "tower_coords: unrelated level");
    for (size_t k = 0; k < e.coeffs().size(); ++k) {
        auto c = tower_coords(e.coeffs()[k], L->parent());
        std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(k) * dp);
    }
    return out;
}

static Elem basis_element(const LevelPtr& L, int idx) {
    if (!L) return Elem(1);
    int dp = tower_dimension(L->parent());
    std::vector<Elem> c(static_cast<size_t>(idx / dp) + 1);
    c.back() = basis_element(L->parent(), idx % dp);
    return Elem::from_coeffs(L, std::move(c));
}

UPoly tower_charpoly(const Elem& e) {
    const LevelPtr& L = e.level();
    int D = tower_dimension(L);
    std::vector<std::vector<Rational>> M(static_cast<size_t>(D), std::vector<Rational>(static_cast<size_t>(D)));
    for (int j = 0; j < D; ++j) {
        auto col = tower_coords(e * basis_element(L, j), L);
        for (int i = 0; i < D; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    return charpoly(M);
}

}  // namespace bif
