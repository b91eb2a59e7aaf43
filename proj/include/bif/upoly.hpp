#pragma once

#include "bif/rational.hpp"

#include <string>
#include <vector>

namespace bif {

// Dense univariate polynomial over Q; c[i] is the coefficient of x^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) {
        for (auto& a : c_) a.canonicalize();
        trim();
    }
    UPoly(const Rational& constant) { if (sgn(constant) != 0) { c_.push_back(constant); c_.back().canonicalize(); } }
    static UPoly monomial(const Rational& a, int k);
    static UPoly x() { return monomial(1, 1); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational coeff(int i) const { return i >= 0 && i <= deg() ? c_[static_cast<size_t>(i)] : Rational(0); }
    const Rational& lc() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }
    UPoly derivative() const;
    UPoly monic() const;
    UPoly operator-() const;
    // Primitive integer polynomial with positive leading coefficient.
    UPoly primitive() const;
    Integer lc_primitive_abs() const;
    // p(x) -> p(a*x + b)
    UPoly compose_linear(const Rational& a, const Rational& b) const;
    UPoly compose(const UPoly& q) const;
    // x^deg * p(1/x)
    UPoly reversed() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator/(const UPoly& a, const UPoly& b);  // quotient
UPoly operator%(const UPoly& a, const UPoly& b);  // remainder
UPoly gcd(const UPoly& a, const UPoly& b);        // monic, gcd(0,0)=0
// s*a + t*b = g, g monic gcd.
UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);
// b with a*b = 1 mod m; a and m coprime.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
UPoly squarefree(const UPoly& p);  // primitive squarefree part
Rational resultant(const UPoly& a, const UPoly& b);
// Coefficients (as determinant minors) of the j-th subresultant of a, b with formal degrees deg a, deg b.
std::vector<Rational> subresultant(const UPoly& a, const UPoly& b, int j);
// Interpolating polynomial through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
// Determinant by fraction-free elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);
// Characteristic polynomial det(T*I - M).
UPoly charpoly(const std::vector<std::vector<Rational>>& m);

// Sturm sequence of a squarefree polynomial and its sign variation count.
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);
int sign_variations_at_pos_inf(const std::vector<UPoly>& seq);
int sign_variations_at_neg_inf(const std::vector<UPoly>& seq);
// Upper bound B (a power of two) with |root| < B for all complex roots.
Rational root_bound(const UPoly& p);

}  // namespace bif
