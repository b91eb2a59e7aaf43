#include "bif/parse.hpp"

#include <cctype>

namespace bif {

namespace {

class Parser {
public:
    Parser(std::string_view s, int cap) : s_(s), cap_(cap) {}

    BiPoly run() {
        skip();
        if (pos_ == s_.size()) fail("empty input");
        BiPoly p = expr();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    std::string_view s_;
    int cap_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(ErrorCode::SyntaxError, pos_, what); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_base() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    std::string digits() {
        skip();
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }

    BiPoly expr() {
        int sign = 1;
        if (peek('+') || peek('-')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        BiPoly acc = term();
        if (sign < 0) acc = -acc;
        while (peek('+') || peek('-')) {
            bool minus = s_[pos_] == '-';
            ++pos_;
            BiPoly t = term();
            if (minus) acc -= t;
            else acc += t;
        }
        return acc;
    }

    BiPoly term() {
        BiPoly acc = factor();
        for (;;) {
            size_t at = pos_;
            if (peek('*')) {
                ++pos_;
                if (!starts_base()) fail("expected a factor after '*'");
            } else if (!starts_base()) {
                break;
            }
            BiPoly b = factor();
            if (acc.total_degree() + b.total_degree() > cap_)
                throw ParseError(ErrorCode::DegreeLimitExceeded, at, "degree above " + std::to_string(cap_));
            acc = acc * b;
        }
        return acc;
    }

    BiPoly factor() {
        BiPoly b = base();
        if (!peek('^')) return b;
        ++pos_;
        size_t at = pos_;
        std::string e = digits();
        if (e.size() > 6) throw ParseError(ErrorCode::SyntaxError, at, "exponent too large");
        long n = std::stol(e);
        long d = b.total_degree();
        if (d > 0 && d * n > cap_)
            throw ParseError(ErrorCode::DegreeLimitExceeded, at, "degree above " + std::to_string(cap_));
        if (d <= 0 && n > 4096) throw ParseError(ErrorCode::SyntaxError, at, "exponent too large");
        return b.pow(static_cast<unsigned>(n));
    }

    BiPoly base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BiPoly::x() : BiPoly::y();
        }
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            if (peek('/')) {
                ++pos_;
                size_t at = pos_;
                den = Integer(digits());
                if (den == 0) throw ParseError(ErrorCode::SyntaxError, at, "zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            return BiPoly(q);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

Integer pow10(size_t n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

}  // namespace

BiPoly parse_polynomial(std::string_view text, int degree_cap) { return Parser(text, degree_cap).run(); }

Rational parse_rational(std::string_view text) {
    size_t i = 0;
    auto fail = [&](const char* what) { throw ParseError(ErrorCode::SyntaxError, i, what); };
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    auto digits = [&]() {
        size_t b = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return std::string(text.substr(b, i - b));
    };
    std::string whole = digits(), frac;
    Rational q;
    if (i < text.size() && text[i] == '.') {
        ++i;
        frac = digits();
        if (whole.empty() && frac.empty()) fail("expected digits");
        q = Rational(Integer(whole.empty() ? "0" : whole) * pow10(frac.size()) +
                         Integer(frac.empty() ? "0" : frac),
                     pow10(frac.size()));
    } else {
        if (whole.empty()) fail("expected digits");
        Integer den(1);
        if (i < text.size() && text[i] == '/') {
            ++i;
            std::string d = digits();
            if (d.empty()) fail("expected a denominator");
            den = Integer(d);
            if (den == 0) fail("zero denominator");
        }
        q = Rational(Integer(whole), den);
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) fail("unexpected trailing characters");
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace bif
