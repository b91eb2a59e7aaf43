#include "bif/interval.hpp"
#include "bif/error.hpp"

#include <algorithm>
#include <utility>

namespace bif {

Encl::Encl(long prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Encl::Encl(const Rational& q, long prec) : Encl(prec) {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Encl::Encl(const Rational& lo, const Rational& hi, long prec) : Encl(prec) {
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Encl::Encl(const Encl& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Encl::Encl(Encl&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Encl& Encl::operator=(const Encl& o) {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Encl& Encl::operator=(Encl&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Encl::~Encl() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

int Encl::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

double Encl::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Encl::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Encl::mid_d() const {
    mpfr_t m;
    mpfr_init2(m, prec_ + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

static Rational to_q(const __mpfr_struct* v) {
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, v);
    Rational r{Integer(m)};
    mpz_clear(m);
    return ldexp(r, e);
}

Rational Encl::lo_q() const { return to_q(lo_); }
Rational Encl::hi_q() const { return to_q(hi_); }

Encl operator+(const Encl& a, const Encl& b) {
    Encl r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Encl operator-(const Encl& a, const Encl& b) {
    Encl r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Encl operator*(const Encl& a, const Encl& b) {
    long p = std::max(a.prec_, b.prec_);
    Encl r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const __mpfr_struct* as[2] = {a.lo_, a.hi_};
    const __mpfr_struct* bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Encl Encl::operator-() const {
    Encl r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Encl Encl::inv() const {
    if (sign() == 0) throw Error(ErrorCode::Internal, "reciprocal of enclosure containing zero");
    Encl r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Encl Encl::abs() const {
    if (sign() >= 0 && mpfr_sgn(lo_) >= 0) return *this;
    if (sign() < 0) return -*this;
    Encl r(prec_);
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmpabs(lo_, hi_) > 0) mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    else mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Encl Encl::sqr() const {
    Encl a = abs();
    Encl r(prec_);
    mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Encl Encl::root(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0) throw Error(ErrorCode::Internal, "root of enclosure with negative part");
    Encl r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

Encl Encl::hull(const Encl& o) const {
    Encl r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

}  // namespace bif
