#include <doctest.h>

#include "support.hpp"
#include "taugen/generic_type.hpp"
#include "taugen/io.hpp"
#include "taugen/oracle.hpp"

using namespace taugen;
using taugen::testsupport::pair_from_fixture;

namespace {

DiffPolynomial DP(const std::string& s, std::uint32_t n, GroundField f = GroundField::Q) {
    return DiffPolynomial(n, parse_poly(s, ParseContext{f, n, false, true}));
}

} // namespace

TEST_CASE("substitution oracle rewrites derivatives on the square graph") {
    GoodPair P = pair_from_fixture("square-graph.pair");
    CHECK(subst_oracle(P, DP("x1' - x1^2", 1)) == Verdict::Zero);
    CHECK(subst_oracle(P, DP("x1'' - 2*x1^3", 1)) == Verdict::Zero);
    CHECK(subst_oracle(P, DP("x1' - x1", 1)) == Verdict::Nonzero);
    CHECK(subst_oracle(P, DP("x1", 1)) == Verdict::Nonzero);
    CHECK(subst_oracle(P, DP("0", 1)) == Verdict::Zero);
}

TEST_CASE("substitution oracle handles the parametric graph over Q(t)") {
    GoodPair P = pair_from_fixture("sqrt-t.pair");
    // x1 = sqrt(t): 2 x1 x1' = 1 and higher consequences
    CHECK(subst_oracle(P, DP("2*x1*x1' - 1", 1, GroundField::Qt)) == Verdict::Zero);
    CHECK(subst_oracle(P, DP("x1^2 - t", 1, GroundField::Qt)) == Verdict::Zero);
    CHECK(subst_oracle(P, DP("4*x1^3*x1'' + 1", 1, GroundField::Qt)) == Verdict::Zero);
    CHECK(subst_oracle(P, DP("x1' - 1", 1, GroundField::Qt)) == Verdict::Nonzero);
}

TEST_CASE("substitution oracle agrees with membership on seeded random queries") {
    GoodPair P = pair_from_fixture("square-graph.pair");
    DeltaGenericType type(P);
    Rng rng(424242);
    int zeros = 0;
    for (int k = 0; k < 60; ++k) {
        Polynomial body = testsupport::random_diff_body(rng, GroundField::Q, 1, 3, 3, 3);
        DiffPolynomial f(1, body);
        bool mem = type.member(f);
        CHECK(mem == (subst_oracle(P, f) == Verdict::Zero));
        if (mem) ++zeros;
        // ideal combinations land in the kernel and must agree as well
        Polynomial g = body * parse_poly("x1' - x1^2", ParseContext{GroundField::Q, 1, false, true});
        DiffPolynomial fg(1, g);
        CHECK(type.member(fg));
        CHECK(subst_oracle(P, fg) == Verdict::Zero);
    }
    (void)zeros;
}

TEST_CASE("series oracle confirms and refutes at the stored point") {
    GoodPair P = pair_from_fixture("square-graph.pair");
    SeriesOutcome ok = series_oracle(P, DP("x1' - x1^2", 1), 12, 7);
    CHECK(!ok.refuted);
    CHECK(ok.order == 12);

    SeriesOutcome bad = series_oracle(P, DP("x1' - x1", 1), 12, 7);
    CHECK(bad.refuted);
    CHECK(bad.order == 1);
    CHECK(rational_str(bad.witness) == "1");

    SeriesOutcome deep = series_oracle(P, DP("x1'' - 2*x1^3", 1), 24, 7);
    CHECK(!deep.refuted);
}

TEST_CASE("series oracle uses the expansion point over Q(t)") {
    GoodPair P = pair_from_fixture("sqrt-t.pair");
    CHECK(!series_oracle(P, DP("2*x1*x1' - 1", 1, GroundField::Qt), 12, 3).refuted);
    CHECK(series_oracle(P, DP("x1' - 1", 1, GroundField::Qt), 12, 3).refuted);
}

TEST_CASE("series oracle requires a stored point") {
    GoodPair P = pair_from_fixture("square-graph.pair");
    P.point.reset();
    CHECK_THROWS_AS(series_oracle(P, DP("x1", 1), 8, 1), PointError);

    GoodPair Q = pair_from_fixture("square-graph.pair");
    Q.point->coords = {rational_of(1), rational_of(2)};
    CHECK_THROWS_AS(series_oracle(Q, DP("x1", 1), 8, 1), PointError);

    GoodPair R = pair_from_fixture("sqrt-t.pair");
    R.point->t0.reset();
    CHECK_THROWS_AS(series_oracle(R, DP("x1", 1, GroundField::Qt), 8, 1), PointError);
}

TEST_CASE("series oracle rejects a point off the variety") {
    GoodPair P = pair_from_fixture("circle.pair");
    P.point->coords = {rational_of(1), rational_of(1)};
    CHECK_THROWS_AS(series_oracle(P, DP("x1", 2), 8, 1), PointError);
}

TEST_CASE("free fiber coordinates are integrated with seeded streams") {
    GoodPair P = pair_from_fixture("circle.pair");
    DiffPolynomial g0 = DP("x1^2 + x2^2 - 1", 2);
    CHECK(!series_oracle(P, g0, 16, 11).refuted);
    CHECK(!series_oracle(P, formal_derivative(g0), 16, 11).refuted);
    SeriesOutcome r = series_oracle(P, DP("x1' - 1", 2), 12, 11);
    CHECK(r.refuted);
    CHECK(r.seed_used >= 11);
}
