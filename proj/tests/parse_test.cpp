#include <gtest/gtest.h>

#include "germlab/parse/scenario.hpp"
#include "support.hpp"

namespace germlab {
namespace {

using parse::parse_polynomial;
using testing::P;

const RingPtr xyt = make_ring({"x", "y", "t"});

ParseError parse_error(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error";
    return ParseError(0, 0, "none");
}

TEST(ParsePolynomial, Examples) {
    Polynomial f = parse_polynomial("y^2 - x^2*(x + t^2)", xyt);
    EXPECT_EQ(f.to_string(), "-x^2*t^2 - x^3 + y^2");
    EXPECT_TRUE(parse_polynomial("0", xyt).is_zero());
    auto e = parse_error([] { parse_polynomial("x^2*y", make_ring({"x"})); });
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
    EXPECT_NE(e.message().find("unknown identifier"), std::string::npos);
}

TEST(ParsePolynomial, Precedence) {
    EXPECT_EQ(parse_polynomial("-x^2", xyt), Polynomial::constant(xyt, Rational(-1)) * P("x*x", xyt));
    EXPECT_EQ(parse_polynomial("2*x^2*3/4", xyt), Polynomial::constant(xyt, make_rational(3, 2)) * P("x^2", xyt));
    EXPECT_EQ(parse_polynomial("x - (y - t)", xyt), P("x - y + t", xyt));
    EXPECT_EQ(parse_polynomial("  1/2\t", xyt), Polynomial::constant(xyt, make_rational(1, 2)));
}

TEST(ParsePolynomial, Errors) {
    EXPECT_THROW(parse_polynomial("2x", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("x y", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("1/0", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("x +", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("x $ y", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("(x + y", xyt), ParseError);
    EXPECT_THROW(parse_polynomial("x^", xyt), ParseError);
    auto e = parse_error([] { parse_polynomial("x +\n  y)", xyt); });
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 4u);
}

TEST(ParsePolynomial, PrintParseRoundTrip) {
    testing::Rng rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial p = testing::random_polynomial(rng, xyt, static_cast<int>(rng.uniform(0, 6)), 0, 5, 40);
        if (rng.coin() && !p.is_zero()) p = Polynomial::constant(xyt, make_rational(rng.uniform(-9, 9), 7)) * p;
        EXPECT_EQ(parse_polynomial(parse::print(p), xyt), p) << parse::print(p);
    }
}

TEST(ParsePoint, SignedRationals) {
    EXPECT_EQ(parse::parse_point("0, -1/2, +3"),
              (std::vector<Rational>{Rational(0), make_rational(-1, 2), Rational(3)}));
    EXPECT_THROW(parse::parse_point("1,"), ParseError);
}

TEST(ParseScenario, CuspFamily) {
    auto sc = parse::parse_scenario(
        "# the projected cusp family\r\n"
        "ring s t;\n"
        "map f = s^2-t^2, s*(s^2-t^2), t;\n"
        "task spodzieja f;\n");
    ASSERT_EQ(sc.tasks.size(), 1u);
    EXPECT_EQ(sc.tasks[0].kind, "spodzieja");
    EXPECT_EQ(sc.tasks[0].args, std::vector<std::string>{"f"});
    EXPECT_EQ(sc.tasks[0].line, 4u);
    const PolyMap& f = sc.maps.at("f");
    EXPECT_EQ(f.codomain()->names(), (std::vector<std::string>{"w1", "w2", "w3"}));
    EXPECT_EQ(f.component(1).to_string(), "s^3 - s*t^2");
}

TEST(ParseScenario, EmptyInputIsValid) {
    EXPECT_TRUE(parse::parse_scenario("").tasks.empty());
    EXPECT_TRUE(parse::parse_scenario("  # nothing\n").tasks.empty());
}

TEST(ParseScenario, BindingsAndOptions) {
    auto sc = parse::parse_scenario(
        "ring x y; coring u v;\n"
        "map F = x^2, y;\n"
        "coideal W = v^2 - u^3;\n"
        "ideal V = y - x^3;\n"
        "point a = 1/2, -1;\n"
        "task pullback F W extra=a extra=a seed=7;\n");
    ASSERT_EQ(sc.tasks.size(), 1u);
    EXPECT_EQ(sc.tasks[0].options_named("extra").size(), 2u);
    EXPECT_EQ(sc.tasks[0].option("seed"), std::optional<std::string>("7"));
    EXPECT_EQ(sc.maps.at("F").codomain()->names(), (std::vector<std::string>{"u", "v"}));
    EXPECT_EQ(sc.coideals.at("W").ring()->names(), (std::vector<std::string>{"u", "v"}));
    EXPECT_EQ(sc.points.at("a")[0], make_rational(1, 2));
}

TEST(ParseScenario, Errors) {
    auto unbound = parse_error([] { parse::parse_scenario("ring x;\ntask mult g;"); });
    EXPECT_NE(unbound.message().find("unbound name"), std::string::npos);
    EXPECT_EQ(unbound.line(), 2u);
    EXPECT_EQ(unbound.column(), 11u);
    auto dup = parse_error([] { parse::parse_scenario("ring x;\nmap f = x;\nideal f = x;"); });
    EXPECT_NE(dup.message().find("duplicate binding"), std::string::npos);
    EXPECT_THROW(parse::parse_scenario("map f = x;"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x; ring y;"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x; coideal W = x;"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x y; coring u; map f = x, y;"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x; map f = z;"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x; task mult"), ParseError);
    EXPECT_THROW(parse::parse_scenario("ring x; frobnicate;"), ParseError);
}

}  // namespace
}  // namespace germlab
