#pragma once

#include "bif/bipoly.hpp"
#include "bif/error.hpp"

#include <cstddef>
#include <string_view>

namespace bif {

class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t offset, const std::string& what)
        : Error(code, "at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// expr := ['+'|'-'] term (('+'|'-') term)*     term := factor (['*'] factor)*
// factor := base ('^' uint)?                   base := rational | x | y | '(' expr ')'
// rational := uint ('/' uint)?
// Whitespace is ignored.  Throws ParseError (SyntaxError or DegreeLimitExceeded).
BiPoly parse_polynomial(std::string_view text, int degree_cap = 64);

// "-3", "7/2" or "-0.125", as an exact rational.  Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace bif
