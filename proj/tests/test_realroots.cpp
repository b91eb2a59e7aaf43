#include "doctest.h"

#include "bif/error.hpp"
#include "bif/realroots.hpp"

using namespace bif;

namespace {
UPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return UPoly(v);
}
BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
}  // namespace

TEST_CASE("isolate_real_roots") {
    auto r = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].approx() == doctest::Approx(-1.41421356));
    CHECK(r[1].approx() == doctest::Approx(1.41421356));
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
    // (x-1)^3 (x+2)
    UPoly p = P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({2, 1});
    auto q = isolate_real_roots(p);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == AlgebraicReal(Rational(-2)));
    CHECK(q[1] == AlgebraicReal(Rational(1)));
    CHECK_THROWS_AS(isolate_real_roots(UPoly()), Error);
}

TEST_CASE("algebraic comparisons") {
    auto s2 = isolate_real_roots(P({-2, 0, 1}))[1];
    auto s8 = isolate_real_roots(P({-8, 0, 1}))[1];
    // 2*sqrt2 == sqrt8
    Elem e = Elem(2) * s2.elem();
    CHECK(compare(e, s8) == 0);
    CHECK(compare(s2, s8) < 0);
    auto r7 = isolate_real_roots(P({-2, 0, 7}))[1];
    CHECK(compare(r7, s2) < 0);
    CHECK((s2.elem() * s2.elem() - Elem(2)).sign() == 0);
    CHECK((s2.elem().inv() * Elem(2) - s2.elem()).sign() == 0);
    AlgebraicReal back = AlgebraicReal::from_elem(e);
    CHECK(back == s8);
}

TEST_CASE("tower roots") {
    // roots of u^2 - sqrt2 over Q(sqrt2)
    auto s2 = isolate_real_roots(P({-2, 0, 1}))[1];
    EPoly p{-s2.elem(), Elem(0), Elem(1)};
    auto roots = real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[1].depth() == 2);
    Elem u = roots[1];
    CHECK((u * u * u * u - Elem(2)).sign() == 0);
    CHECK(u.approx() == doctest::Approx(1.18920712));
    auto fourth = isolate_real_roots(P({-2, 0, 0, 0, 1}))[1];
    CHECK(compare(u, fourth) == 0);
    CHECK(AlgebraicReal::from_elem(u * u) == s2);
}

TEST_CASE("solve_bivariate") {
    auto s = solve_bivariate(Y(), X());
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].x.sign() == 0);
    CHECK(s.points[0].y.sign() == 0);
    BiPoly c = X() * X() + Y() * Y() - BiPoly(4);
    auto t = solve_bivariate(c, c * X());
    CHECK(t.points.empty());
    CHECK(t.shared == c);
    // circle and hyperbola: 4 points
    auto u = solve_bivariate(c, X() * Y() - BiPoly(1));
    CHECK(u.points.size() == 4);
    for (auto& b : u.points) {
        CHECK(certified_sign(c, b) == Sign::Zero);
        CHECK(certified_sign(X() * Y() - BiPoly(1), b) == Sign::Zero);
    }
    // projections collide without a shear
    auto v = solve_bivariate(X() * X() - BiPoly(1), Y() * Y() - BiPoly(1));
    CHECK(v.points.size() == 4);
    CHECK(v.shear > 0);
}
