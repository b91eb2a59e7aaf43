#include "doctest.h"

#include "bif/bipoly.hpp"
#include "bif/error.hpp"

#include <random>

using namespace bif;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

BiPoly random_poly(std::mt19937& rng, int deg, int terms) {
    std::uniform_int_distribution<int> e(0, deg), c(-9, 9);
    BiPoly p;
    for (int k = 0; k < terms; ++k) {
        int i = e(rng), j = e(rng);
        if (i + j > deg) continue;
        p.add_term(c(rng), i, j);
    }
    return p;
}

}  // namespace

TEST_CASE("differentiate") {
    BiPoly f = X() + X() * X() * Y();
    CHECK(differentiate(f, Var::X) == BiPoly(1) + 2 * X() * Y());
    CHECK(differentiate(BiPoly(5), Var::Y).is_zero());
    BiPoly g = 2 * X().pow(2) * Y().pow(3) - 9 * X() * Y().pow(2) + 12 * Y();
    CHECK(differentiate(g, Var::Y) == 6 * X().pow(2) * Y().pow(2) - 18 * X() * Y() + BiPoly(12));
}

TEST_CASE("jacobian_det row convention") {
    CHECK(jacobian_det(X(), Y()) == BiPoly(1));
    BiPoly f = 2 * X().pow(2) * Y().pow(3) - 9 * X() * Y().pow(2) + 12 * Y();
    CHECK(jacobian_det(f, f).is_zero());
    BiPoly rho = X() * X() + Y() * Y();
    BiPoly printed = 12 * X() - 18 * X().pow(2) * Y() + 6 * X().pow(3) * Y().pow(2) + 9 * Y().pow(3) - 4 * X() * Y().pow(4);
    CHECK(jacobian_det(f, rho) == Rational(-2) * printed);
}

TEST_CASE("milnor_poly examples") {
    CHECK(milnor_poly(X() + X() * X() * Y()) == 2 * (Y() + 2 * X() * Y() * Y() - X().pow(3)));
    BiPoly rho = X() * X() + Y() * Y();
    CHECK(milnor_poly(rho * rho).is_zero());
    BiPoly f = X().pow(3) + X() * Y() * Y() - 4 * X() + BiPoly(5);
    CHECK(milnor_poly(f) == 2 * Y() * (rho - BiPoly(4)));
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(X().pow(2) * Y().pow(3)) == X() * Y());
    BiPoly rho = X() * X() + Y() * Y();
    CHECK(squarefree_part(2 * Y() * (rho - BiPoly(4))) == Y() * (rho - BiPoly(4)));
    BiPoly p = X() * X() - Y() * Y() * Y() + BiPoly(1);
    CHECK(squarefree_part(p) == p.normalized());
    CHECK(squarefree_part(squarefree_part(p)) == squarefree_part(p));
    BiPoly q = (X() - Y()).pow(3) * (X() * Y() + BiPoly(1)).pow(2) * (X() + BiPoly(2));
    CHECK(squarefree_part(q) == ((X() - Y()) * (X() * Y() + BiPoly(1)) * (X() + BiPoly(2))).normalized());
    CHECK_THROWS_AS(squarefree_part(BiPoly()), Error);
}

TEST_CASE("homogenize and charts") {
    BiPoly f = X() + X() * X() * Y();
    TriPoly h = homogenize(f);
    CHECK(h.degree == 3);
    CHECK(h.terms.size() == 2);
    CHECK(h.terms.at({1, 0, 2}) == 1);
    CHECK(h.terms.at({2, 1, 0}) == 1);
    CHECK(dehomogenize(h) == f);
    // chart y = 1 at [0:1:0]: (x, z) -> x z^2 + x^2
    CHECK(chart_y(h, 0) == X() * Y() * Y() + X() * X());
    // chart x = 1: (y, z) -> z^2 + y
    CHECK(chart_x(h) == Y() * Y() + X());
}

TEST_CASE("properties on random polynomials") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 40; ++it) {
        BiPoly f = random_poly(rng, 5, 8), g = random_poly(rng, 4, 6);
        CHECK(jacobian_det(f, g) == -jacobian_det(g, f));
        Rational a1(it % 7 - 3), a2(it % 5 - 2, 3), b1(2 - it % 3), b2(1, 1 + it % 4);
        BiPoly lhs = milnor_poly(f, a1, a2) - milnor_poly(f, b1, b2);
        BiPoly rhs = 2 * (b2 - a2) * differentiate(f, Var::X) - 2 * (b1 - a1) * differentiate(f, Var::Y);
        CHECK(lhs == rhs);
        CHECK(dehomogenize(homogenize(f)) == f);
        if (!f.is_zero() && !g.is_zero()) {
            BiPoly d = gcd(f * g, g * g);
            CHECK(divides(d, f * g));
            CHECK(divides(g.normalized(), d));
        }
    }
}
