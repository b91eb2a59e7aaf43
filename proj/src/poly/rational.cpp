#include "bif/rational.hpp"
#include "bif/error.hpp"

#include <stdexcept>

namespace bif {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::PointNotAtInfinity: return "PointNotAtInfinity";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::OverrideTooSmall: return "OverrideTooSmall";
        case ErrorCode::TangentialIntersection: return "TangentialIntersection";
        case ErrorCode::DegenerateBand: return "DegenerateBand";
        case ErrorCode::ClassifierDisagreement: return "ClassifierDisagreement";
        case ErrorCode::DepthInsufficient: return "DepthInsufficient";
        case ErrorCode::TruncationAmbiguous: return "TruncationAmbiguous";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::MatchingUnresolved: return "MatchingUnresolved";
        case ErrorCode::TraceFailed: return "TraceFailed";
        case ErrorCode::TraceDiverged: return "TraceDiverged";
        case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::DegreeLimitExceeded: return "DegreeLimitExceeded";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Rational ldexp(const Rational& q, long k) {
    Rational r;
    if (k >= 0)
        mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    else
        mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

Rational pow(const Rational& q, unsigned e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational round_down(const Rational& q, long bits) {
    if (mpz_sizeinbase(q.get_den_mpz_t(), 2) <= static_cast<size_t>(bits > 0 ? bits : 0) + 1 &&
        mpz_popcount(q.get_den_mpz_t()) == 1)
        return q;
    Rational r(floor(ldexp(q, bits)));
    return ldexp(r, -bits);
}

Rational round_up(const Rational& q, long bits) {
    if (mpz_sizeinbase(q.get_den_mpz_t(), 2) <= static_cast<size_t>(bits > 0 ? bits : 0) + 1 &&
        mpz_popcount(q.get_den_mpz_t()) == 1)
        return q;
    Rational r(ceil(ldexp(q, bits)));
    return ldexp(r, -bits);
}

// Stern-Brocot descent via continued fractions.
Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) return simplest_between(hi, lo);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    // lo and hi share integer part fl; recurse on reciprocals of fractional parts
    Rational a = lo - Rational(fl), b = hi - Rational(fl);
    Rational inner = simplest_between(1 / b, 1 / a);
    Rational r = Rational(fl) + 1 / inner;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }


Integer isqrt_ceil(const Rational& q) {
    if (sgn(q) <= 0) return 0;
    Integer c = ceil(q);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
    while (Rational(s * s) < q) ++s;
    while (s > 0 && Rational((s - 1) * (s - 1)) >= q) --s;
    return s;
}

}  // namespace bif
