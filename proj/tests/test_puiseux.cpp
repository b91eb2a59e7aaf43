#include "doctest.h"

#include "bif/error.hpp"
#include "bif/puiseux.hpp"
#include "corpus.hpp"

#include <string>

using namespace bif;
using namespace corpus;

namespace {

Germ germ_of(const BiPoly& g) {
    Germ G;
    G.c.assign(static_cast<size_t>(g.degree_in(Var::X) + 1), std::vector<Elem>(static_cast<size_t>(g.degree_in(Var::Y) + 1), Elem(0)));
    for (auto& [e, c] : g.terms()) G.c[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = Elem(c);
    return G;
}

// Limit class per arc, in arc order: 'F' finite zero, '+', '-'.
std::string limit_classes(const BiPoly& f, const Rational& R, int extra = 5) {
    BiPoly h = squarefree_part(milnor_poly(f));
    auto samples = circle_arc_points(h, R);
    auto bs = all_branches(h, f.total_degree(), extra);
    auto m = match_arcs(h, samples, R, bs);
    std::string out;
    for (int b : m.branch_of_arc) {
        auto L = branch_limit(f, bs.points[static_cast<size_t>(bs.branches[static_cast<size_t>(b)].point)],
                              bs.branches[static_cast<size_t>(b)]);
        if (L.kind == LimitValue::Kind::Finite) out += L.value.is_rational() && L.value.rational() == 0 ? 'F' : '?';
        else out += L.kind == LimitValue::Kind::PlusInfinity ? '+' : '-';
    }
    return out;
}

}  // namespace

TEST_CASE("infinity_points") {
    auto p = infinity_points(squarefree_part(milnor_poly(example_even())));
    REQUIRE(p.size() == 4);
    CHECK(p[0].slope.minpoly() == UPoly(std::vector<Rational>{-2, 0, 3}));
    CHECK(p[0].slope.approx() < 0);
    CHECK(p[1].slope.is_rational());
    CHECK(p[1].slope.rational() == 0);
    CHECK(p[2].slope.minpoly() == UPoly(std::vector<Rational>{-2, 0, 3}));
    CHECK(p[3].horizontal);

    auto q = infinity_points(squarefree_part(milnor_poly(example_splitting())));
    REQUIRE(q.size() == 4);
    CHECK(q[0].slope.minpoly() == UPoly(std::vector<Rational>{-2, 0, 7}));
    CHECK(q[2].slope.minpoly() == UPoly(std::vector<Rational>{-2, 0, 7}));
    CHECK(q[3].horizontal);

    auto r = infinity_points(Y());
    REQUIRE(r.size() == 1);
    CHECK(r[0].horizontal);
    CHECK_THROWS_AS(infinity_points(BiPoly()), Error);
}

TEST_CASE("chart germ of the Broughton curve at [0:1]") {
    BiPoly h = squarefree_part(milnor_poly(broughton()));
    InfinityPoint p{false, AlgebraicReal(0)};
    Germ g = chart_germ(h, p, Elem(0));
    // proportional to z^2 + 2u - u^3
    Elem s = g.at(0, 2);
    CHECK(!s.is_zero());
    CHECK((g.at(1, 0) - Elem(2) * s).is_zero());
    CHECK((g.at(3, 0) + s).is_zero());
    CHECK(g.at(0, 0).is_zero());
    CHECK(g.at(1, 1).is_zero());
}

TEST_CASE("branch of 2(z^2 + 2x - x^3)") {
    BiPoly H = 2 * (Y() * Y() + 2 * X() - X().pow(3));
    auto bs = puiseux_branches(germ_of(H), 1, 3, 5);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].n == 1);
    REQUIRE(bs[0].coefficients.size() >= 2);
    CHECK(bs[0].coefficients[0].first == 2);
    CHECK(bs[0].coefficients[0].second.rational() == Rational(-1, 2));
    CHECK(bs[0].trunc_depth >= 3);
    CHECK(puiseux_branches(germ_of(H), -1, 3, 5).size() == 1);
}

TEST_CASE("cusp x^2 - z^3 has two real halves, both on z > 0") {
    Germ g = germ_of(X() * X() - Y().pow(3));
    auto plus = puiseux_branches(g, 1, 2, 3);
    REQUIRE(plus.size() == 2);
    for (auto& b : plus) {
        CHECK(b.n == 2);
        CHECK(b.coefficients[0].first == 3);
        CHECK(b.separation == 3);
    }
    CHECK(plus[0].coefficients[0].second.rational() == -1);
    CHECK(plus[1].coefficients[0].second.rational() == 1);
    CHECK(puiseux_branches(g, -1, 2, 3).empty());
}

TEST_CASE("the line at infinity is not a branch") {
    Germ g = germ_of(X() * Y());
    for (int s : {1, -1}) {
        auto bs = puiseux_branches(g, s, 1, 2);
        REQUIRE(bs.size() == 1);
        CHECK(bs[0].terminates);
        CHECK(bs[0].coefficients.empty());
    }
}

TEST_CASE("branch_limit on the Broughton branch") {
    BiPoly f = broughton();
    BiPoly h = squarefree_part(milnor_poly(f));
    InfinityPoint p{false, AlgebraicReal(0)};
    for (int s : {1, -1}) {
        auto bs = puiseux_branches(chart_germ(h, p, Elem(0)), s, 3, 5);
        REQUIRE(bs.size() == 1);
        auto L = branch_limit(f, p, bs[0]);
        CHECK(L.kind == LimitValue::Kind::Finite);
        CHECK(L.value.rational() == 0);
    }
}

TEST_CASE("branch_limit for f = x") {
    BiPoly h = squarefree_part(milnor_poly(X()));
    auto bs = all_branches(h, 1, 5);
    REQUIRE(bs.branches.size() == 2);
    CHECK(branch_limit(X(), bs.points[0], bs.branches[0]).kind == LimitValue::Kind::PlusInfinity);
    CHECK(branch_limit(X(), bs.points[0], bs.branches[1]).kind == LimitValue::Kind::MinusInfinity);
}

TEST_CASE("nonzero finite limit") {
    // same Milnor curve as Broughton, limits shifted by 3
    BiPoly f = broughton() + C(3);
    BiPoly h = squarefree_part(milnor_poly(f));
    auto bs = all_branches(h, f.total_degree(), 5);
    int finite = 0;
    for (auto& b : bs.branches) {
        auto L = branch_limit(f, bs.points[static_cast<size_t>(b.point)], b);
        if (L.kind != LimitValue::Kind::Finite) continue;
        ++finite;
        CHECK(L.value.rational() == 3);
    }
    CHECK(finite == 2);
}

TEST_CASE("arc limits match the traced oracle") {
    // frozen from tests/oracles/limit_oracle.py
    CHECK(limit_classes(broughton(), 2) == "+F+-F-");
    CHECK(limit_classes(example_even(), 3) == "FF+++FF---");
    CHECK(limit_classes(example_splitting(), 10) == "-+F+-+F+-F---F-+");
}

TEST_CASE("limits are stable under deeper truncation") {
    CHECK(limit_classes(example_even(), 3, 10) == "FF+++FF---");
    CHECK(limit_classes(broughton(), 2, 12) == "+F+-F-");
}

TEST_CASE("match_arcs rejects a count mismatch") {
    BiPoly h = squarefree_part(milnor_poly(X()));
    auto samples = circle_arc_points(h, 1);
    auto bs = all_branches(h, 1, 5);
    bs.branches.pop_back();
    CHECK_THROWS_AS(match_arcs(h, samples, 1, bs), Error);
}
