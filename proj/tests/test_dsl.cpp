#include <doctest.h>

#include "helpers.hpp"
#include "riesz/dsl.hpp"

using namespace riesz;
using namespace riesz::test;
using namespace riesz::dsl;

TEST_CASE("piecewise literal") {
    const Value v = parse_value("pp [0: x^2][1: 2*x - 1]");
    REQUIRE(std::holds_alternative<PiecewisePoly>(v));
    CHECK(std::get<PiecewisePoly>(v) == PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)}));
    CHECK(print(v) == "pp [0: x^2][1: 2*x - 1]");
}

TEST_CASE("the counterexample parses to h") {
    const Value v = parse_value("(pp [0: 1]) ox (pp [0: y^2]) /\\ (pp [0: x^2]) ox (pp [0: 1])");
    REQUIRE(std::holds_alternative<LatticeExpr>(v));
    CHECK(std::get<LatticeExpr>(v) == counterexample_h());
    CHECK(std::get<LatticeExpr>(parse_value("h")) == counterexample_h());
    CHECK(print(v) == "(pp [0: 1]) ox (pp [0: y^2]) /\\ (pp [0: x^2]) ox (pp [0: 1])");
}

TEST_CASE("validation errors") {
    CHECK_THROWS_WITH(parse_value("pp [1: x]"), doctest::Contains("first breakpoint must be 0"));
    try {
        parse("let a = pp [0: x]\nlet f = pp [0: x^2][1: x + 5]\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("binding 'f'") != std::string::npos);
        CHECK(std::string(e.what()).find("discontinuity") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("let a = pp [0: x]\nlet b = a +\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 12);
    }
    CHECK_THROWS_AS(parse("let a = pp [0: x]\nlet a = pp [0: x]\n"), ParseError);
    CHECK_THROWS_AS(parse("let h = pp [0: x]\n"), ParseError);
    CHECK_THROWS_AS(parse("let a = b\n"), ParseError);
    CHECK_THROWS_AS(parse_value("pp [0: x + y]"), ParseError);
    CHECK_THROWS_AS(parse_value("(pp [0: y]) ox (pp [0: y])"), ParseError);
    CHECK_THROWS_AS(parse_value("(pp [0: x]) ox (pp [0: x])"), ParseError);
    CHECK_THROWS_AS(parse_value("pp [0: x] + (pp [0: x]) ox (pp [0: y])"), ParseError);
}

TEST_CASE("precedence") {
    const Value v = parse_value("pp [0: x] + pp [0: 1] /\\ pp [0: 2] \\/ pp [0: 0]");
    // ((x + 1) /\ 2) \/ 0
    const PiecewisePoly f = std::get<PiecewisePoly>(v);
    CHECK(f(R(0)) == R(1));
    CHECK(f(R(3)) == R(2));
    const PiecewisePoly g = std::get<PiecewisePoly>(parse_value("-2 * pp [0: x] + pp [0: 3]"));
    CHECK(g(R(1)) == R(1));
    const PiecewisePoly a = std::get<PiecewisePoly>(parse_value("|pp [0: x - 1]|"));
    CHECK(a == PP({P({R(1), R(-1)}), P({R(-1), R(1)})}, {R(0), R(1)}));
    const PiecewisePoly m = std::get<PiecewisePoly>(parse_value("pp [0: x] - pp [0: 1] - pp [0: 2]"));
    CHECK(m == PP(P({R(-3), R(1)})));
}

TEST_CASE("programs and references") {
    const Program p = parse("# comment\nlet f = pp [0: x]\n\nlet t = (pp [0: x]) ox (pp [0: y])\nlet u = t \\/ 2 * t\n");
    REQUIRE(p.bindings().size() == 3);
    CHECK(p.bindings()[2].line == 5);
    CHECK(print(p.at("u")) == "(pp [0: x]) ox (pp [0: y]) \\/ 2 * (pp [0: x]) ox (pp [0: y])");
    CHECK_THROWS_AS(p.at("missing"), Error);
}

TEST_CASE("c00 and finite-dimensional literals") {
    const Value c = parse_value("c00 { a => 1, c => 2 } \\/ ind(b) ox 3");
    const auto m = c00_from_tensor(std::get<C00Expr<Rational>>(c));
    CHECK(print(m) == "c00 { a => 1, b => 3, c => 2 }");
    CHECK(print(c) == "c00 { a => 1, c => 2 } \\/ ind(b) ox 3");
    const Value e = parse_value("c00 pp { }");
    CHECK(std::holds_alternative<C00Expr<PiecewisePoly>>(e));
    CHECK(print(e) == "c00 pp {}");
    CHECK(print(parse_value("ind(a) ox (pp [0: x])")) == "ind(a) ox (pp [0: x])");
    CHECK(print(parse_value("vec [1, -1/2]")) == "vec [1, -1/2]");
    CHECK(print(parse_value("mat [[1, 2], [3, 4]]")) == "mat [[1, 2], [3, 4]]");
    const Value psi = parse_value("psi 1 x 2 { (0, 1) => mat [[1]], (0, 0) => mat [[2]] }");
    CHECK(print(psi) == "psi 1 x 2 { (0, 0) => mat [[2]], (0, 1) => mat [[1]] }");
    CHECK_THROWS_AS(parse_value("c00 { a => 1, b => (pp [0: x]) }"), ParseError);
}

TEST_CASE("sup-inf forms print as expressions that normalize back") {
    const SupInfForm s = normalize(std::get<LatticeExpr>(parse_value("|(pp [0: x]) ox (pp [0: y]) - h|")));
    const SupInfForm back = normalize(std::get<LatticeExpr>(parse_value(print(s))));
    CHECK(back == s);
}

TEST_CASE("print is idempotent") {
    for (const char* text : {"-(2 * (pp [0: x]) ox (pp [0: y]))", "-2 * (pp [0: x]) ox (pp [0: y])",
                             "(pp [0: x]) ox (pp [0: y]) - -(pp [0: x]) ox (pp [0: y])",
                             "1/2 * (h \\/ (pp [0: x]) ox (pp [0: 1/3*y]))", "|h| /\\ (h \\/ h)"}) {
        const std::string once = print(parse_value(text));
        CHECK(print(parse_value(once)) == once);
        CHECK(parse_value(once) == parse_value(text));
    }
}
