#pragma once

// Scenario files: a ring declaration, named maps, ideals and points, and an
// ordered task list.
//
//   ring s t;
//   coring x y t;            # optional, names the codomain of every map
//   map f = s^2 - t^2, s*(s^2 - t^2), t;
//   ideal V = t;             # in the source ring
//   coideal W = y;           # in the codomain ring, needs coring
//   point p = 0, 0, 1;
//   task spodzieja f extra=p seed=3;

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gb/ideal.hpp"
#include "germlab/parse/lexer.hpp"
#include "germlab/parse/polynomial_parser.hpp"
#include "germlab/poly/poly_map.hpp"

namespace germlab::parse {

struct ScenarioTask {
    std::string kind;
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> options;  // in file order, keys may repeat
    std::size_t line = 0;

    std::optional<std::string> option(std::string_view key) const {
        for (const auto& [k, v] : options) {
            if (k == key) return v;
        }
        return std::nullopt;
    }
    std::vector<std::string> options_named(std::string_view key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : options) {
            if (k == key) out.push_back(v);
        }
        return out;
    }
};

struct Scenario {
    RingPtr ring;
    RingPtr coring;
    std::map<std::string, PolyMap> maps;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Ideal> coideals;
    std::map<std::string, std::vector<Rational>> points;
    std::vector<ScenarioTask> tasks;

    bool is_bound(const std::string& name) const {
        return maps.contains(name) || ideals.contains(name) || coideals.contains(name) || points.contains(name);
    }
};

namespace detail {

inline RingPtr parse_ring_names(TokenStream& ts) {
    std::vector<std::string> names;
    while (!ts.at(TokenKind::Semicolon)) {
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

inline std::vector<Polynomial> parse_list(TokenStream& ts, const RingPtr& ring) {
    PolynomialParser parser(ts, ring);
    std::vector<Polynomial> out;
    out.push_back(parser.poly());
    while (ts.accept(TokenKind::Comma)) out.push_back(parser.poly());
    return out;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
    TokenStream ts(tokenize(text));
    Scenario sc;

    auto bind_name = [&](Scenario& s) -> std::string {
        const Token& t = ts.expect(TokenKind::Identifier, "name");
        if (s.is_bound(t.text)) TokenStream::fail_at(t, "duplicate binding '" + t.text + "'");
        ts.expect(TokenKind::Equals);
        return t.text;
    };
    auto need_ring = [&](const Token& at) {
        if (!sc.ring) TokenStream::fail_at(at, "ring must be declared before any binding");
    };

    while (!ts.at(TokenKind::End)) {
        const Token& keyword = ts.expect(TokenKind::Identifier, "statement keyword");
        const std::string kw = keyword.text;
        if (kw == "ring") {
            if (sc.ring) TokenStream::fail_at(keyword, "ring declared twice");
            sc.ring = detail::parse_ring_names(ts);
        } else if (kw == "coring") {
            if (sc.coring) TokenStream::fail_at(keyword, "coring declared twice");
            if (!sc.maps.empty()) TokenStream::fail_at(keyword, "coring must precede every map");
            sc.coring = detail::parse_ring_names(ts);
        } else if (kw == "map") {
            need_ring(keyword);
            std::string name = bind_name(sc);
            const Token& start = ts.peek();
            auto comps = detail::parse_list(ts, sc.ring);
            if (sc.coring && sc.coring->arity() != comps.size()) {
                TokenStream::fail_at(start, "map has " + std::to_string(comps.size()) + " components but coring has " +
                                                std::to_string(sc.coring->arity()) + " variables");
            }
            sc.maps.emplace(name, PolyMap(sc.ring, std::move(comps), sc.coring));
        } else if (kw == "ideal") {
            need_ring(keyword);
            std::string name = bind_name(sc);
            sc.ideals.emplace(name, Ideal(sc.ring, detail::parse_list(ts, sc.ring)));
        } else if (kw == "coideal") {
            if (!sc.coring) TokenStream::fail_at(keyword, "coideal needs a coring declaration");
            std::string name = bind_name(sc);
            sc.coideals.emplace(name, Ideal(sc.coring, detail::parse_list(ts, sc.coring)));
        } else if (kw == "point") {
            std::string name = bind_name(sc);
            std::vector<Rational> values{parse_signed_rational(ts)};
            while (ts.accept(TokenKind::Comma)) values.push_back(parse_signed_rational(ts));
            sc.points.emplace(name, std::move(values));
        } else if (kw == "task") {
            ScenarioTask task;
            const Token& kind = ts.expect(TokenKind::Identifier, "task kind");
            task.kind = kind.text;
            task.line = kind.line;
            while (!ts.at(TokenKind::Semicolon)) {
                const Token& word = ts.expect(TokenKind::Identifier, "argument name or key=value");
                if (ts.accept(TokenKind::Equals)) {
                    const Token& value = ts.peek();
                    if (value.kind != TokenKind::Identifier && value.kind != TokenKind::Number) {
                        ts.fail("expected option value");
                    }
                    ts.next();
                    if (word.text == "extra" && !sc.points.contains(value.text)) {
                        TokenStream::fail_at(value, "unbound name '" + value.text + "'");
                    }
                    task.options.emplace_back(word.text, value.text);
                } else {
                    if (!sc.is_bound(word.text)) TokenStream::fail_at(word, "unbound name '" + word.text + "'");
                    task.args.push_back(word.text);
                }
            }
            sc.tasks.push_back(std::move(task));
        } else {
            TokenStream::fail_at(keyword, "unknown statement '" + kw + "'");
        }
        ts.expect(TokenKind::Semicolon);
    }
    return sc;
}

}  // namespace germlab::parse
