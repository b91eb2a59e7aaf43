#pragma once

// Exact arithmetic in towers of real algebraic extensions
//   K_0 = Q,  K_m = K_{m-1}[u_m] / (q_m),
// where q_m is monic and squarefree at the chosen point and u_m is one of its
// real roots, pinned down by a rational isolating interval.  Representatives
// are only meaningful at the chosen point: zero tests decide whether a
// representative vanishes there (gcd with q_m plus a sign change across the
// isolator), so no factorization of q_m is ever needed.

#include "bif/interval.hpp"
#include "bif/rational.hpp"
#include "bif/upoly.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace bif {

class Level;
using LevelPtr = std::shared_ptr<const Level>;

class Elem {
public:
    Elem() = default;
    Elem(const Rational& q) : q_(q) {}
    Elem(long v) : q_(v) {}
    Elem(int v) : q_(v) {}

    static Elem generator(const LevelPtr& L);
    // Element of L with the given coefficients in powers of u_L (reduced, trimmed, demoted).
    static Elem from_coeffs(const LevelPtr& L, std::vector<Elem> c);

    const LevelPtr& level() const { return lv_; }
    int depth() const;
    bool is_rational() const { return !lv_; }
    const Rational& rational() const { return q_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_syntactic_zero() const { return !lv_ && ::sgn(q_) == 0; }

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inv(); }
    Elem operator-() const;
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem pow(unsigned e) const;
    Elem inv() const;

    // Exact sign at the chosen point; zero only after an exact test.
    int sign() const;
    bool is_zero() const { return sign() == 0; }
    // Enclosure of width at most 2^-prec.
    Encl enclose(long prec) const;
    // Single Horner pass with every isolator refined to 2^-bits; width not controlled.
    Encl enclose_raw(long bits) const;
    double approx() const;

private:
    bool exact_zero_test() const;
    LevelPtr lv_;
    Rational q_;
    std::vector<Elem> c_;
};

using EPoly = std::vector<Elem>;  // coefficients by ascending power

class Level {
public:
    Level(LevelPtr parent, EPoly monic_modulus, Rational lo, Rational hi, int sign_lo, int sign_hi);

    const LevelPtr& parent() const { return parent_; }
    int depth() const { return depth_; }
    const EPoly& modulus() const { return q_; }
    int degree() const { return static_cast<int>(q_.size()) - 1; }
    // Current isolator; refines until its width is at most 2^-bits.
    Interval isolator(long bits) const;
    Interval isolator() const;
    // True when bisection landed exactly on the root.
    bool exact() const;
    bool is_ancestor_of(const Level* other) const;  // reflexive
    // The modulus as a rational polynomial, or null when a coefficient is irrational.
    const UPoly* rational_modulus() const { return rational_modulus_ ? &q_rational_ : nullptr; }

private:
    void refine_once() const;
    int modulus_sign_at(const Rational& x) const;

    LevelPtr parent_;
    int depth_;
    EPoly q_;
    UPoly q_rational_;  // q_ when every coefficient is rational
    bool rational_modulus_ = false;
    mutable std::mutex mu_;
    mutable Rational lo_, hi_;
    mutable int slo_, shi_;
    mutable bool exact_ = false;
};

// Polynomials over the tower. All coefficients must lie on one chain of levels.
void epoly_trim_exact(EPoly& p);  // drops leading coefficients that vanish at the point
EPoly epoly_add(const EPoly& a, const EPoly& b);
EPoly epoly_sub(const EPoly& a, const EPoly& b);
EPoly epoly_mul(const EPoly& a, const EPoly& b);
EPoly epoly_scale(const EPoly& a, const Elem& s);
EPoly epoly_derivative(const EPoly& a);
Elem epoly_eval(const EPoly& a, const Elem& x);
// Division at the point; b must have a nonvanishing leading coefficient after trimming.
void epoly_divmod(EPoly a, EPoly b, EPoly& q, EPoly& r);
EPoly epoly_gcd(EPoly a, EPoly b);  // monic
EPoly epoly_ext_gcd(EPoly a, EPoly b, EPoly& s);  // s*a = g mod b, g monic
EPoly epoly_squarefree(const EPoly& p);  // monic
EPoly to_epoly(const UPoly& p);
// Deepest level among coefficients (null when all rational).
LevelPtr common_level(const EPoly& p);
LevelPtr common_level(const LevelPtr& a, const LevelPtr& b);

// Distinct real roots in increasing order.  Rational roots are recognized and
// returned as rationals; every other root becomes the generator of a new level.
std::vector<Elem> real_roots(const EPoly& p);
std::vector<Elem> real_roots(const UPoly& p);

// Q-basis view of the tower.
int tower_dimension(const LevelPtr& L);
std::vector<Rational> tower_coords(const Elem& e, const LevelPtr& L);
UPoly tower_charpoly(const Elem& e);

}  // namespace bif
