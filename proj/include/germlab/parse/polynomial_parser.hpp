#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/parse/lexer.hpp"
#include "germlab/poly/polynomial.hpp"

namespace germlab::parse {

// Recursive-descent parser for
//   poly   = [sign] term { sign term }
//   term   = factor { "*" factor }
//   factor = rational | var [ "^" nat ] | "(" poly ")"
// Implicit multiplication is rejected.
class PolynomialParser {
public:
    PolynomialParser(TokenStream& ts, RingPtr ring) : ts_(ts), ring_(std::move(ring)) {}

    Polynomial poly() {
        Polynomial sum(ring_);
        bool negative = false;
        if (ts_.at(TokenKind::Plus) || ts_.at(TokenKind::Minus)) negative = ts_.next().kind == TokenKind::Minus;
        Polynomial t = term();
        sum = negative ? sum - t : sum + t;
        while (ts_.at(TokenKind::Plus) || ts_.at(TokenKind::Minus)) {
            negative = ts_.next().kind == TokenKind::Minus;
            t = term();
            sum = negative ? sum - t : sum + t;
        }
        return sum;
    }

private:
    Polynomial term() {
        Polynomial prod = factor();
        while (ts_.accept(TokenKind::Star)) prod *= factor();
        return prod;
    }

    Polynomial factor() {
        const Token& t = ts_.peek();
        switch (t.kind) {
            case TokenKind::Number: return Polynomial::constant(ring_, rational());
            case TokenKind::Identifier: {
                const Token& name = ts_.next();
                auto idx = ring_->index_of(name.text);
                if (!idx) TokenStream::fail_at(name, "unknown identifier '" + name.text + "'");
                int power = 1;
                if (ts_.accept(TokenKind::Caret)) power = natural("exponent");
                return Polynomial::monomial(ring_, Monomial::variable(ring_->arity(), *idx, power));
            }
            case TokenKind::LParen: {
                ts_.next();
                Polynomial inner = poly();
                ts_.expect(TokenKind::RParen);
                return inner;
            }
            default:
                ts_.fail(t.kind == TokenKind::End ? std::string("unexpected end of input")
                                                  : "malformed token '" + t.text + "'");
        }
    }

    Rational rational() {
        const Token& num = ts_.expect(TokenKind::Number);
        Integer n(num.text);
        Integer d(1);
        if (ts_.at(TokenKind::Slash)) {
            ts_.next();
            const Token& den = ts_.expect(TokenKind::Number, "denominator");
            d = Integer(den.text);
            if (d == 0) TokenStream::fail_at(den, "zero denominator");
        }
        return make_rational(n, d);
    }

    int natural(std::string_view what) {
        const Token& t = ts_.expect(TokenKind::Number, what);
        if (t.text.size() > 6) TokenStream::fail_at(t, std::string(what) + " too large");
        return std::stoi(t.text);
    }

    TokenStream& ts_;
    RingPtr ring_;
};

// Signed rational literal, as used in points: [sign] nat [ "/" nat ].
inline Rational parse_signed_rational(TokenStream& ts) {
    bool negative = false;
    if (ts.at(TokenKind::Plus) || ts.at(TokenKind::Minus)) negative = ts.next().kind == TokenKind::Minus;
    const Token& num = ts.expect(TokenKind::Number, "rational number");
    Integer n(num.text);
    Integer d(1);
    if (ts.accept(TokenKind::Slash)) {
        const Token& den = ts.expect(TokenKind::Number, "denominator");
        d = Integer(den.text);
        if (d == 0) TokenStream::fail_at(den, "zero denominator");
    }
    Rational r = make_rational(n, d);
    return negative ? Rational(-r) : r;
}

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    TokenStream ts(tokenize(text));
    if (ts.at(TokenKind::End)) ts.fail("empty polynomial");
    PolynomialParser parser(ts, ring);
    Polynomial p = parser.poly();
    if (!ts.at(TokenKind::End)) ts.fail("trailing input '" + ts.peek().text + "'");
    return p;
}

// Comma-separated polynomial list, e.g. a map's components.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
    TokenStream ts(tokenize(text));
    std::vector<Polynomial> out;
    if (ts.at(TokenKind::End)) return out;
    PolynomialParser parser(ts, ring);
    out.push_back(parser.poly());
    while (ts.accept(TokenKind::Comma)) out.push_back(parser.poly());
    if (!ts.at(TokenKind::End)) ts.fail("trailing input '" + ts.peek().text + "'");
    return out;
}

inline std::vector<Rational> parse_point(std::string_view text) {
    TokenStream ts(tokenize(text));
    std::vector<Rational> out;
    if (ts.at(TokenKind::End)) ts.fail("empty point");
    out.push_back(parse_signed_rational(ts));
    while (ts.accept(TokenKind::Comma)) out.push_back(parse_signed_rational(ts));
    if (!ts.at(TokenKind::End)) ts.fail("trailing input '" + ts.peek().text + "'");
    return out;
}

// Variable names separated by commas and/or whitespace.
inline RingPtr parse_ring(std::string_view text) {
    TokenStream ts(tokenize(text));
    std::vector<std::string> names;
    while (!ts.at(TokenKind::End)) {
        const Token& t = ts.expect(TokenKind::Identifier, "variable name");
        for (const auto& n : names) {
            if (n == t.text) TokenStream::fail_at(t, "duplicate variable '" + t.text + "'");
        }
        names.push_back(t.text);
        ts.accept(TokenKind::Comma);
    }
    if (names.empty()) ts.fail("ring needs at least one variable");
    if (names.size() > kMaxArity) ts.fail("too many variables");
    return make_ring(std::move(names));
}

inline std::string print(const Polynomial& p) { return p.to_string(); }

}  // namespace germlab::parse
