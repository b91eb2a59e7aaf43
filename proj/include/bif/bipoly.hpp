#pragma once

#include "bif/rational.hpp"
#include "bif/upoly.hpp"

#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace bif {

enum class Var { X, Y };

using Exp2 = std::pair<int, int>;

// Sparse bivariate polynomial over Q; no zero coefficients are stored.
class BiPoly {
public:
    using Terms = std::map<Exp2, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c) { if (sgn(c) != 0) { t_[{0, 0}] = c; t_[{0, 0}].canonicalize(); } }
    BiPoly(int c) : BiPoly(Rational(c)) {}
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }
    static BiPoly monomial(const Rational& a, int i, int j);
    // Lifts a univariate polynomial in the given variable.
    static BiPoly from_upoly(const UPoly& p, Var v);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp2{0, 0}); }
    Rational coeff(int i, int j) const;
    void add_term(const Rational& a, int i, int j);
    int total_degree() const;  // -1 for zero
    int degree_in(Var v) const;
    // Leading term under graded lex (total degree, then x exponent).
    Exp2 leading_exp() const;
    const Rational& lc() const { return t_.at(leading_exp()); }
    BiPoly top_form() const;

    Rational eval(const Rational& x, const Rational& y) const;
    // Substitute a rational value for one variable.
    UPoly eval_var(Var v, const Rational& value) const;
    BiPoly compose(const BiPoly& px, const BiPoly& py) const;
    BiPoly translate(const Rational& a, const Rational& b) const;  // p(x + a, y + b)
    BiPoly swap_xy() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& s, const BiPoly& a);
    friend BiPoly operator*(int s, const BiPoly& a) { return Rational(s) * a; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    BiPoly pow(unsigned e) const;

    // Coefficients in Q[x] of successive powers of y.
    std::vector<UPoly> as_poly_in_y() const;
    static BiPoly from_poly_in_y(const std::vector<UPoly>& c);

    // Scaled to coprime integer coefficients with positive graded-lex leading coefficient.
    BiPoly normalized() const;

    std::string str() const;

private:
    Terms t_;
};

BiPoly differentiate(const BiPoly& p, Var v);
BiPoly jacobian_det(const BiPoly& f, const BiPoly& g);
// jacobian_det(f, (x-a1)^2 + (y-a2)^2)
BiPoly milnor_poly(const BiPoly& f, const Rational& a1 = 0, const Rational& a2 = 0);
BiPoly gcd(const BiPoly& a, const BiPoly& b);
// Throws Internal when b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& b, const BiPoly& a);
BiPoly squarefree_part(const BiPoly& g);
// Resultant with respect to y, as a polynomial in x.
UPoly resultant_y(const BiPoly& a, const BiPoly& b);

// Homogeneous trivariate polynomial; exponent triples sum to the degree.
struct TriPoly {
    std::map<std::tuple<int, int, int>, Rational> terms;
    int degree = 0;
};

TriPoly homogenize(const BiPoly& p);
BiPoly dehomogenize(const TriPoly& q);  // z = 1
// Chart {x != 0}: (y, z) -> q(1, y, z) written with y as the first variable.
BiPoly chart_x(const TriPoly& q);
// Chart {y != 0} at [a:1:0] for rational a: (u, z) -> q(u + a, 1, z).
BiPoly chart_y(const TriPoly& q, const Rational& a);

}  // namespace bif
