#include "doctest.h"

#include "bif/parse.hpp"
#include "bif/report.hpp"
#include "corpus.hpp"

#include <random>

using namespace bif;
using namespace corpus;

namespace {

ErrorCode code_of(std::string_view text, std::size_t* offset = nullptr) {
    try {
        parse_polynomial(text);
    } catch (const ParseError& e) {
        if (offset) *offset = e.offset();
        return e.code();
    }
    FAIL("no error for " << text);
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse: corpus spellings") {
    CHECK(parse_polynomial("x + x^2*y") == broughton());
    CHECK(parse_polynomial("x+x^2y") == broughton());
    CHECK(parse_polynomial("2x^2y^3 - 9xy^2 + 12y") == example_even());
    CHECK(parse_polynomial("x^3 + x y^2 - 4x + 5") == circle_cubic());
    CHECK(parse_polynomial("x^2 y^3 (y^2-25)^2 + 2x y (y^2-25)(y+25) - (y^4+y^3-50y^2-51y+575)") ==
          example_splitting());
    CHECK(parse_polynomial("-x") == -X());
    CHECK(parse_polynomial("3/4 x") == Rational(3, 4) * X());
    CHECK(parse_polynomial("(x)(y)") == X() * Y());
    CHECK(parse_polynomial("2^3 x") == 8 * X());
    CHECK(parse_polynomial("x - x") == BiPoly());
}

TEST_CASE("parse: syntax errors carry the byte offset") {
    std::size_t off = 99;
    CHECK(code_of("", &off) == ErrorCode::SyntaxError);
    CHECK(off == 0);
    CHECK(code_of("x +", &off) == ErrorCode::SyntaxError);
    CHECK(off == 3);
    CHECK(code_of("x + z", &off) == ErrorCode::SyntaxError);
    CHECK(off == 4);
    CHECK(code_of("(x + y", &off) == ErrorCode::SyntaxError);
    CHECK(off == 6);
    CHECK(code_of("x y)", &off) == ErrorCode::SyntaxError);
    CHECK(off == 3);
    CHECK(code_of("x^", &off) == ErrorCode::SyntaxError);
    CHECK(off == 2);
    CHECK(code_of("1/0", &off) == ErrorCode::SyntaxError);
    CHECK(code_of("x^-2", &off) == ErrorCode::SyntaxError);
    CHECK(off == 2);
}

TEST_CASE("parse: degree limit") {
    CHECK(parse_polynomial("x^64").total_degree() == 64);
    CHECK(parse_polynomial("x^32 y^32").total_degree() == 64);
    CHECK(code_of("x^65") == ErrorCode::DegreeLimitExceeded);
    CHECK(code_of("x^33 y^32") == ErrorCode::DegreeLimitExceeded);
    CHECK(code_of("(x+y)^40 (x-y)^30") == ErrorCode::DegreeLimitExceeded);
    CHECK(code_of("x^99999999999") == ErrorCode::SyntaxError);
    // cancellation does not matter: the bound applies to the written expression
    CHECK(parse_polynomial("(x+1)^2 - x^2").total_degree() == 1);
    CHECK(parse_polynomial("x^3", 3).total_degree() == 3);
    CHECK(code_of("x^65 - x^65") == ErrorCode::DegreeLimitExceeded);
}

TEST_CASE("parse: print then parse is the identity on random polynomials") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> deg(0, 9), num(-40, 40), den(1, 12), nterms(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        BiPoly p;
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            int i = deg(rng), j = deg(rng);
            Rational c(num(rng), den(rng));
            c.canonicalize();
            p = p + BiPoly::monomial(c, i, j);
        }
        CAPTURE(p.str());
        CHECK(parse_polynomial(p.str()) == p);
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("10.5") == Rational(21, 2));
    CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("exit status of each failure") {
    for (auto c : {ErrorCode::SyntaxError, ErrorCode::DegreeLimitExceeded, ErrorCode::ConstantPolynomial,
                   ErrorCode::ZeroPolynomial, ErrorCode::OverrideTooSmall})
        CHECK(exit_status(c) == 1);
    for (auto c : {ErrorCode::TangentialIntersection, ErrorCode::DegenerateBand, ErrorCode::ClassifierDisagreement,
                   ErrorCode::DepthInsufficient, ErrorCode::TruncationAmbiguous, ErrorCode::CountMismatch,
                   ErrorCode::MatchingUnresolved, ErrorCode::TraceFailed, ErrorCode::ResolutionTooCoarse,
                   ErrorCode::Internal})
        CHECK(exit_status(c) == 2);
}
