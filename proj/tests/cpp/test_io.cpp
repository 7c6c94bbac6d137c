#include <doctest.h>

#include "taugen/io.hpp"

using namespace taugen;

namespace {

const ParseContext kDiff1{GroundField::Q, 1, false, true};
const ParseContext kXU2{GroundField::Q, 2, true, false};

} // namespace

TEST_CASE("expression grammar") {
    CHECK(print_poly(parse_poly("x1^2-x1", kDiff1)) == "x1^2 - x1");
    CHECK(print_poly(parse_poly("-x1 + 2", kDiff1)) == "-x1 + 2");
    CHECK(print_poly(parse_poly("(x1+1)^3", kDiff1)) == "x1^3 + 3*x1^2 + 3*x1 + 1");
    CHECK(print_poly(parse_poly("x1/2", kDiff1)) == "1/2*x1");
    CHECK(print_poly(parse_poly("x1'' - x1'", kDiff1)) == "x1'' - x1'");
    CHECK(print_poly(parse_poly("x1^(3)", kDiff1)) == "x1^(3)");
    CHECK(parse_poly("x1^(1)", kDiff1) == parse_poly("x1'", kDiff1));
    CHECK(print_poly(parse_poly("u2*x1", kXU2)) == "x1*u2");
    CHECK(parse_poly("  x1 \t + 1 ", kDiff1) == parse_poly("x1+1", kDiff1));

    ParseContext qt{GroundField::Qt, 1, false, true};
    CHECK(print_poly(parse_poly("t*x1' - 1/2", qt)) == "t*x1' - 1/2");
}

TEST_CASE("print parse round trip") {
    const char* cases[] = {
        "x1^2 - x1", "-3*x1*x2 + 1/7", "u1^4 - 2*u2*x1", "x2^5", "0", "1", "-1/2",
    };
    for (const char* s : cases) {
        Polynomial p = parse_poly(s, kXU2);
        CHECK(parse_poly(print_poly(p), kXU2) == p);
        CHECK(parse_poly(print_poly(p, PrintStyle::Compact), kXU2) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_poly("x1 + ", kDiff1);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
    CHECK_THROWS_AS(parse_poly("x2", kDiff1), ParseError);     // index out of range
    CHECK_THROWS_AS(parse_poly("u1", kDiff1), ParseError);     // u not allowed here
    CHECK_THROWS_AS(parse_poly("x1'", kXU2), ParseError);      // derivatives not allowed
    CHECK_THROWS_AS(parse_poly("t", kDiff1), ParseError);      // t needs Q(t)
    CHECK_THROWS_AS(parse_poly("x1/x1", kDiff1), ParseError);  // non-ground divisor
    CHECK_THROWS_AS(parse_poly("x1/0", kDiff1), ParseError);   // division by zero
    CHECK_THROWS_AS(parse_poly("x1^^2", kDiff1), ParseError);
    CHECK_THROWS_AS(parse_poly("", kDiff1), ParseError);
}

TEST_CASE("formula grammar and printing") {
    QFFormula phi = parse_formula("x1 = 0 & !(x1' = 1) | x1 = x1'", kDiff1);
    // & binds tighter than |
    CHECK(phi.kind() == QFFormula::Kind::Or);
    CHECK(phi.left().kind() == QFFormula::Kind::And);
    CHECK(print_formula(phi) == "((x1 = 0) & (!(x1' - 1 = 0))) | (-x1' + x1 = 0)");

    // atoms move everything to the left-hand side
    QFFormula atom = parse_formula("x1^2 = x1 + 1", kDiff1);
    CHECK(atom.kind() == QFFormula::Kind::Atom);
    CHECK(print_poly(atom.atom()) == "x1^2 - x1 - 1");

    CHECK(parse_formula(print_formula(phi), kDiff1) == phi);
    CHECK_THROWS_AS(parse_formula("x1 = ", kDiff1), ParseError);
    CHECK_THROWS_AS(parse_formula("x1 = 0 &", kDiff1), ParseError);
}

TEST_CASE("pair manifest round trip") {
    PairManifest m;
    m.field = GroundField::Q;
    m.n = 2;
    m.primality = "constructed:bundle";
    m.v_gens = {parse_poly("x1^2 + x2^2 - 1", kXU2)};
    m.w_gens = {parse_poly("x1^2 + x2^2 - 1", kXU2), parse_poly("x1*u1 + x2*u2", kXU2)};
    PointSpec pt;
    pt.coords = {Rational(0), Rational(1)};
    m.point = pt;
    m.recipe = "test";

    std::string text = format_pair_manifest(m);
    PairManifest back = parse_pair_manifest(text, "manifest");
    CHECK(back.n == 2);
    CHECK(back.primality == m.primality);
    CHECK(back.v_gens == m.v_gens);
    CHECK(back.w_gens == m.w_gens);
    CHECK(back.point.has_value());
    CHECK(back.point->coords == pt.coords);
    CHECK(back.recipe == "test");
    CHECK(format_pair_manifest(back) == text); // byte-identical re-serialization
}

TEST_CASE("pair manifest rejects malformed input") {
    CHECK_THROWS_AS(parse_pair_manifest("nonsense", "m"), ParseError);
    CHECK_THROWS_AS(parse_pair_manifest("taugen-pair 1\nfield: Q\n", "m"), ParseError);
    CHECK_THROWS_AS(
        parse_pair_manifest("taugen-pair 1\nfield: R\nn: 1\n[V]\n[W]\nu1\n", "m"), ParseError);
    CHECK_THROWS_AS(
        parse_pair_manifest("taugen-pair 1\nfield: Q\nn: 0\n[V]\n[W]\nu1\n", "m"), ParseError);
    // position of the offending expression is preserved
    try {
        parse_pair_manifest("taugen-pair 1\nfield: Q\nn: 1\n[V]\n[W]\nu1 - x1^^2\n", "m");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(e.column == 9);
    }
    // a point over Q(t) must set t0
    CHECK_THROWS_AS(parse_pair_manifest("taugen-pair 1\nfield: Q(t)\nn: 1\nprimality: "
                                        "asserted\n[V]\n[W]\nu1\n[point]\nx1 = 1\n",
                                        "m"),
                    ParseError);
}

TEST_CASE("ideal file round trip") {
    IdealFile f;
    f.field = GroundField::Q;
    f.n = 2;
    f.with_u = true;
    f.gens = {parse_poly("x1*u1 + x2*u2", kXU2)};
    std::string text = format_ideal_file(f);
    IdealFile back = parse_ideal_file(text, "ideal");
    CHECK(back.with_u);
    CHECK(back.gens == f.gens);
    CHECK(format_ideal_file(back) == text);
}

TEST_CASE("system file round trip and validation") {
    SystemFile f = parse_system_file("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1'' = x1'\n",
                                     "system");
    CHECK(f.n == 1);
    REQUIRE(f.equations.size() == 1);
    CHECK(f.equations[0].first == Variable::deriv(1, 2));
    CHECK(print_poly(f.equations[0].second) == "x1'");
    CHECK(parse_system_file(format_system_file(f), "system").equations == f.equations);

    // leaders must be derivatives, not base coordinates
    CHECK_THROWS_AS(
        parse_system_file("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1 = x1\n", "system"),
        ParseError);
}

TEST_CASE("report format") {
    Report rep;
    rep.add("command", "demo");
    rep.add("n", "2");
    rep.payload.push_back("line one");
    CHECK(rep.str() == "command: demo\nn: 2\n\nline one\n");
}
