#pragma once

#include "bif/bipoly.hpp"
#include "bif/interval.hpp"
#include "bif/tower.hpp"
#include "bif/upoly.hpp"

#include <string>
#include <vector>

namespace bif {

// Real algebraic number: squarefree primitive integer polynomial plus an
// isolating interval.  Rational values carry a linear minpoly and a point
// interval.
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    AlgebraicReal(const Rational& q);
    // iso must contain exactly one root of p and its endpoints must not be roots.
    AlgebraicReal(const UPoly& p, const Interval& iso);
    static AlgebraicReal from_elem(const Elem& e);

    const UPoly& minpoly() const { return p_; }
    Interval isolator() const;
    bool is_rational() const { return rational_; }
    const Rational& rational() const { return q_; }
    // Element of its own one-level tower (or a rational).
    Elem elem() const;
    // Element adjoined on top of an existing level, so it can be combined with its elements.
    Elem elem_over(const LevelPtr& base) const;
    Encl enclose(long prec) const { return elem().enclose(prec); }
    double approx() const { return elem().approx(); }
    // Decimal approximation "d.ddd" with the given fractional digits and a bound on the error.
    std::string decimal(int digits, std::string* err = nullptr) const;
    std::string str() const;

    friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }
    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }

private:
    UPoly p_;
    Interval iso_;
    bool rational_ = true;
    Rational q_;
    LevelPtr lv_;
};

// Exact comparison of a tower element with an algebraic number.
int compare(const Elem& e, const AlgebraicReal& a);

std::vector<AlgebraicReal> isolate_real_roots(const UPoly& p);

// Evaluation of a rational bivariate polynomial at tower elements.
Elem eval_at(const BiPoly& p, const Elem& x, const Elem& y);

// A certified real point: exact coordinates in a real algebraic tower, plus
// the defining pair it was obtained from.
struct PlaneBox {
    Elem x, y;
    BiPoly g1, g2;
    // Rational box around the point with side at most about 2^-bits.
    std::pair<Interval, Interval> box(long bits) const;
    double xd() const { return x.approx(); }
    double yd() const { return y.approx(); }
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
Sign certified_sign(const BiPoly& p, const PlaneBox& b);
const char* sign_name(Sign s);

struct BivariateSolution {
    std::vector<PlaneBox> points;
    BiPoly shared;  // gcd of the inputs; constant 1 when there is no common curve
    int shear = 0;  // k in x -> x + k*y used for the projection
};

// Common real zeros of g1, g2 outside their common factor; the common factor is returned separately.
BivariateSolution solve_bivariate(const BiPoly& g1, const BiPoly& g2);

}  // namespace bif
