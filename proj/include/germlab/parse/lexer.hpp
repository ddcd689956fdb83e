#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab::parse {

enum class TokenKind { Identifier, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Equals, Semicolon, Colon, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline const char* describe(TokenKind k) {
    switch (k) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Number: return "number";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Equals: return "'='";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Colon: return "':'";
        case TokenKind::End: return "end of input";
    }
    return "token";
}

// Splits UTF-8 text (LF or CRLF) into tokens. '#' starts a comment running
// to the end of the line. Positions are 1-based.
inline std::vector<Token> tokenize(std::string_view text, std::size_t first_line = 1, std::size_t first_column = 1) {
    std::vector<Token> out;
    std::size_t line = first_line;
    std::size_t col = first_column;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        const std::size_t tl = line;
        const std::size_t tc = col;
        if (is_alpha(c)) {
            std::size_t j = i;
            while (j < text.size() && (is_alpha(text[j]) || is_digit(text[j]))) ++j;
            out.push_back({TokenKind::Identifier, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < text.size() && is_digit(text[j])) ++j;
            out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), tl, tc});
            advance(j - i);
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '/': kind = TokenKind::Slash; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            case '=': kind = TokenKind::Equals; break;
            case ';': kind = TokenKind::Semicolon; break;
            case ':': kind = TokenKind::Colon; break;
            default: throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), tl, tc});
        advance(1);
    }
    out.push_back({TokenKind::End, "", line, col});
    return out;
}

// Cursor over a token vector with positioned error reporting.
class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) ++pos_;
        return t;
    }
    bool accept(TokenKind k) {
        if (!at(k)) return false;
        next();
        return true;
    }
    const Token& expect(TokenKind k, std::string_view what = {}) {
        if (!at(k)) {
            fail(std::string("expected ") + (what.empty() ? describe(k) : std::string(what)) + ", found " +
                 (peek().kind == TokenKind::End ? std::string("end of input") : "'" + peek().text + "'"));
        }
        return next();
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(peek().line, peek().column, message); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
        throw ParseError(t.line, t.column, message);
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace germlab::parse
