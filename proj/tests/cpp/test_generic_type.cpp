#include <doctest.h>

#include "taugen/generic_type.hpp"
#include "taugen/io.hpp"

using namespace taugen;

namespace {

GoodPair square_graph_pair() {
    VarietyPresentation V = make_v_presentation(GroundField::Q, 1, {}, "constructed:affine");
    ParseContext c{GroundField::Q, 1, true, false};
    CheckResult res = build_graph_pair(V, {RatExpr::of(parse_poly("x1^2", c))}, false, 0);
    REQUIRE(res.accepted);
    return *res.pair;
}

GoodPair circle_pair() {
    ParseContext c{GroundField::Q, 2, true, false};
    VarietyPresentation V = make_v_presentation(
        GroundField::Q, 2, {parse_poly("x1^2 + x2^2 - 1", c)}, "constructed:hypersurface");
    CheckResult res = build_bundle_pair(
        V, {RatExpr::zero(GroundField::Q), RatExpr::zero(GroundField::Q)},
        {{RatExpr::of(parse_poly("-x2", c)), RatExpr::of(parse_poly("x1", c))}}, false, 0);
    REQUIRE(res.accepted);
    return *res.pair;
}

DiffPolynomial DP(const std::string& s, std::uint32_t n) {
    return DiffPolynomial(n, parse_poly(s, ParseContext{GroundField::Q, n, false, true}));
}

} // namespace

TEST_CASE("coordinates realize the forced dynamics of a graph pair") {
    DeltaGenericType type(square_graph_pair());
    CHECK(type.m() == 0);
    CHECK(print_poly(type.coordinate(1, 0).num) == "x1");
    CHECK(print_poly(type.coordinate(1, 1).num) == "x1^2");
    CHECK(print_poly(type.coordinate(1, 2).num) == "2*x1^3");
    CHECK(print_poly(type.coordinate(1, 3).num) == "6*x1^4");
}

TEST_CASE("membership on the square graph") {
    DeltaGenericType type(square_graph_pair());
    CHECK(type.member(DP("x1' - x1^2", 1)));
    CHECK(type.member(DP("x1'' - 2*x1^3", 1)));
    CHECK(type.member(DP("x1^(3) - 6*x1^4", 1)));
    CHECK(type.member(DP("0", 1)));
    CHECK(!type.member(DP("x1", 1)));
    CHECK(!type.member(DP("x1' - x1", 1)));
    CHECK(!type.member(DP("1", 1)));
}

TEST_CASE("membership is closed under the differential ideal operations") {
    DeltaGenericType type(square_graph_pair());
    DiffPolynomial g = DP("x1' - x1^2", 1);
    DiffPolynomial dg = formal_derivative(g);
    CHECK(type.member(dg));
    CHECK(type.member(DiffPolynomial(1, g.body() + dg.body())));
    CHECK(type.member(DiffPolynomial(1, g.body() * DP("x1'' + 7*x1", 1).body())));
}

TEST_CASE("membership on the circle with a free fiber coordinate") {
    DeltaGenericType type(circle_pair());
    CHECK(type.m() == 1);
    DiffPolynomial g0 = DP("x1^2 + x2^2 - 1", 2);
    CHECK(type.member(g0));
    CHECK(type.member(formal_derivative(g0)));
    CHECK(type.member(formal_derivative(formal_derivative(g0))));
    // the fiber coordinate is genuinely transcendental
    CHECK(!type.member(DP("x1'", 2)));
    CHECK(!type.member(DP("x1' - 1", 2)));
    CHECK(!type.member(DP("x1'' ", 2)));
}

TEST_CASE("decide evaluates boolean structure") {
    DeltaGenericType type(square_graph_pair());
    ParseContext c{GroundField::Q, 1, false, true};
    CHECK(type.decide(parse_formula("x1'' - 2*x1^3 = 0 & !(x1 = 0)", c)));
    CHECK(!type.decide(parse_formula("x1'' - 2*x1^3 = 0 & x1 = 0", c)));
    CHECK(type.decide(parse_formula("x1 = 0 | !(x1 = 0)", c)));
    CHECK(type.decide(parse_formula("!(x1 = 1)", c)));
    CHECK(!type.decide(parse_formula("0 = 0 & 1 = 0", c)));
}

TEST_CASE("relations ideal collects the jet kernel") {
    DeltaGenericType type(square_graph_pair());
    Ideal rel1 = type.relations_ideal(1);
    ParseContext c{GroundField::Q, 1, false, true};
    CHECK(rel1.contains(parse_poly("x1' - x1^2", c)));
    CHECK(!rel1.contains(parse_poly("x1", c)));

    Ideal rel2 = type.relations_ideal(2);
    CHECK(rel2.contains(parse_poly("x1'' - 2*x1^3", c)));
    CHECK(rel2.contains(parse_poly("x1' - x1^2", c)));

    DeltaGenericType circle(circle_pair());
    ParseContext c2{GroundField::Q, 2, false, true};
    Ideal rel = circle.relations_ideal(1);
    CHECK(rel.contains(parse_poly("x1^2 + x2^2 - 1", c2)));
    CHECK(rel.contains(parse_poly("x1*x1' + x2*x2'", c2)));
    CHECK(!rel.contains(parse_poly("x1'", c2)));
}
