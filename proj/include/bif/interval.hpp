#pragma once

#include "bif/rational.hpp"

#include <mpfr.h>

#include <string>

namespace bif {

// Closed interval with rational endpoints (isolators).
struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

// Floating enclosure [lo, hi] with outward rounding at a fixed binary precision.
class Encl {
public:
    explicit Encl(long prec = 64);
    Encl(const Rational& q, long prec);
    Encl(const Rational& lo, const Rational& hi, long prec);
    Encl(const Encl& o);
    Encl(Encl&& o) noexcept;
    Encl& operator=(const Encl& o);
    Encl& operator=(Encl&& o) noexcept;
    ~Encl();

    long prec() const { return prec_; }
    // -1, +1 when the enclosure excludes zero, else 0.
    int sign() const;
    bool contains_zero() const { return sign() == 0; }
    double lo_d() const;
    double hi_d() const;
    double mid_d() const;
    Rational lo_q() const;
    Rational hi_q() const;
    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }

    friend Encl operator+(const Encl& a, const Encl& b);
    friend Encl operator-(const Encl& a, const Encl& b);
    friend Encl operator*(const Encl& a, const Encl& b);
    Encl operator-() const;
    // Reciprocal; requires the enclosure to exclude zero.
    Encl inv() const;
    Encl sqr() const;
    Encl abs() const;
    Encl hull(const Encl& o) const;
    // Real n-th root of a nonnegative enclosure.
    Encl root(unsigned long n) const;

private:
    mpfr_t lo_, hi_;
    long prec_;
};

}  // namespace bif
