#include "doctest.h"

#include "bif/arcs.hpp"
#include "bif/error.hpp"
#include "corpus.hpp"

#include <cmath>
#include <numbers>

using namespace bif;
using namespace corpus;

namespace {

struct ArcTable {
    std::vector<ArcSample> samples;
    std::vector<Sign> bands;
    std::vector<Monotonicity> mono;
    std::vector<RhoType> types;
};

ArcTable classify(const BiPoly& f, const Rational& R) {
    ArcTable t;
    BiPoly J = milnor_poly(f);
    t.samples = circle_arc_points(squarefree_part(J), R);
    t.bands = band_signs(J, t.samples, R);
    LieTower tower(f);
    size_t n = t.samples.size();
    for (size_t i = 0; i < n; ++i) {
        t.mono.push_back(arc_monotonicity(f, t.samples[i]));
        t.types.push_back(rho_type(tower, t.samples[i], t.bands[(i + n - 1) % n], t.bands[i]));
    }
    return t;
}

}  // namespace

TEST_CASE("arcs of f = x") {
    auto t = classify(X(), 1);
    REQUIRE(t.samples.size() == 2);
    CHECK(t.samples[0].angle == doctest::Approx(0));
    CHECK(t.samples[1].at_pi);
    CHECK(t.samples[1].angle == doctest::Approx(std::numbers::pi));
    CHECK(t.bands[0] == Sign::Positive);  // upper half
    CHECK(t.bands[1] == Sign::Negative);
    CHECK(t.mono[0] == Monotonicity::Increasing);
    CHECK(t.mono[1] == Monotonicity::Decreasing);
    CHECK(t.types[0] == RhoType::Min);
    CHECK(t.types[1] == RhoType::Min);
    CHECK(alternation_violations(t.types, t.mono).empty());
}

TEST_CASE("rho_type checks against band signs") {
    auto t = classify(X(), 1);
    CHECK(rho_type(X(), t.samples[0], Sign::Negative, Sign::Positive) == RhoType::Min);
    CHECK_THROWS_AS(rho_type(X(), t.samples[0], Sign::Positive, Sign::Positive), Error);
}

TEST_CASE("inflectional tangency of x - y^3") {
    // On xy = -1/3, S_1 = 2 + 12xy + 18y^4 vanishes at y = 1/sqrt(3), x = -y.
    BiPoly f = X() - Y().pow(3);
    AlgebraicReal s(UPoly(std::vector<Rational>{-1, 0, 3}), {0, 1});
    ArcSample a;
    a.point = PlaneBox{-s.elem(), s.elem(), milnor_poly(f), f};
    LieTower tower(f);
    CHECK(certified_sign(tower.S(1), a.point) == Sign::Zero);
    CHECK(certified_sign(tower.S(2), a.point) != Sign::Zero);
    CHECK(rho_type(tower, a, Sign::Positive, Sign::Positive) == RhoType::Inflectional);
    CHECK_THROWS_AS(rho_type(tower, a, Sign::Positive, Sign::Negative), Error);
}

TEST_CASE("singular arc of x^2") {
    auto f = X() * X();
    auto s = circle_arc_points(squarefree_part(milnor_poly(f)), 2);
    bool singular = false;
    for (auto& a : s) singular |= arc_monotonicity(f, a) == Monotonicity::Singular;
    CHECK(singular);
}

TEST_CASE("tangential circle is rejected") {
    // h = y - 1 touches x^2 + y^2 = 1 at (0, 1)
    CHECK_THROWS_AS(circle_arc_points(Y() - C(1), 1), Error);
    // x = -1 - y^2 touches the unit circle at angle pi
    CHECK_THROWS_AS(circle_arc_points(X() + C(1) + Y() * Y(), 1), Error);
}

TEST_CASE("arcs of the even example at R = 3") {
    auto t = classify(example_even(), 3);
    REQUIRE(t.samples.size() == 10);
    CHECK(t.mono[0] == Monotonicity::Decreasing);
    CHECK(t.mono[1] == Monotonicity::Decreasing);
    CHECK(t.mono[5] == Monotonicity::Increasing);
    CHECK(t.mono[6] == Monotonicity::Increasing);
    // frozen: arcs 1..10
    std::vector<RhoType> want = {RhoType::Max, RhoType::Min, RhoType::Min, RhoType::Max, RhoType::Min,
                                 RhoType::Max, RhoType::Min, RhoType::Min, RhoType::Max, RhoType::Min};
    CHECK(t.types == want);
    CHECK(alternation_violations(t.types, t.mono).empty());
    for (size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i - 1].angle < t.samples[i].angle);
}

TEST_CASE("arcs of the splitting example at R = 10") {
    auto t = classify(example_splitting(), 10);
    REQUIRE(t.samples.size() == 16);
    for (int i : {3, 7, 10, 14}) CHECK(t.mono[i - 1] == Monotonicity::Increasing);
    CHECK(t.types[2] == RhoType::Max);
    CHECK(t.types[6] == RhoType::Max);
    CHECK(t.types[9] == RhoType::Min);
    CHECK(t.types[13] == RhoType::Min);
    CHECK(alternation_violations(t.types, t.mono).empty());
    // the sign of J flips exactly at extremal arcs
    for (size_t i = 0; i < 16; ++i)
        CHECK((t.bands[(i + 15) % 16] != t.bands[i]) == (t.types[i] != RhoType::Inflectional));
}

TEST_CASE("alternation_violations") {
    using M = Monotonicity;
    using T = RhoType;
    CHECK(alternation_violations({T::Max, T::Inflectional, T::Max}, {M::Increasing, M::Increasing, M::Increasing}) ==
          (std::vector<int>{2, 0}));
    CHECK(alternation_violations({T::Max, T::Min}, {M::Increasing, M::Increasing}).empty());
    // a run that wraps around the start
    CHECK(alternation_violations({T::Min, T::Max, T::Min}, {M::Increasing, M::Decreasing, M::Increasing}) ==
          std::vector<int>{0});
    CHECK(alternation_violations({T::Min, T::Min}, {M::Increasing, M::Decreasing}).empty());
}
