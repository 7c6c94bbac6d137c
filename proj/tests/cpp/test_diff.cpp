#include <doctest.h>

#include "taugen/diff.hpp"
#include "taugen/io.hpp"

using namespace taugen;

namespace {

DiffPolynomial DP(const std::string& s, std::uint32_t n = 1,
                  GroundField f = GroundField::Q) {
    return DiffPolynomial(n, parse_poly(s, ParseContext{f, n, false, true}));
}

} // namespace

TEST_CASE("order of a differential polynomial") {
    CHECK(DP("x1").order() == 0);
    CHECK(DP("5").order() == 0);
    CHECK(DP("x1' - x1^2").order() == 1);
    CHECK(DP("x1'' * x1'").order() == 2);
    CHECK(DP("x1^(4) + x1", 1).order() == 4);
}

TEST_CASE("formal derivative over Q") {
    // D is additive, multiplicative (Leibniz) and raises the order by one
    CHECK(formal_derivative(DP("x1")) == DP("x1'"));
    CHECK(formal_derivative(DP("x1^2")) == DP("2*x1*x1'"));
    CHECK(formal_derivative(DP("x1' - x1^2")) == DP("x1'' - 2*x1*x1'"));
    CHECK(formal_derivative(DP("7")).body().is_zero());

    DiffPolynomial f = DP("x1^3 + x1'"), g = DP("x1'' - 1");
    DiffPolynomial fg(1, f.body() * g.body());
    DiffPolynomial expect(1, formal_derivative(f).body() * g.body() +
                                 f.body() * formal_derivative(g).body());
    CHECK(formal_derivative(fg) == expect);
}

TEST_CASE("formal derivative over Q(t) includes the coefficient derivation") {
    // D(t*x1) = x1 + t*x1'
    CHECK(formal_derivative(DP("t*x1", 1, GroundField::Qt)) ==
          DP("t*x1' + x1", 1, GroundField::Qt));
    // D(t^2) = 2t even with no variables present
    CHECK(formal_derivative(DP("t^2", 1, GroundField::Qt)) == DP("2*t", 1, GroundField::Qt));
}

TEST_CASE("solved systems validate their shape") {
    auto mk = [](const std::string& text) {
        return DiffSystem::from_file(parse_system_file(text, "system"));
    };
    DiffSystem S = mk("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1'' = x1'\n");
    CHECK(S.leader_order(1) == 2);
    CHECK(S.max_leader_order() == 2);

    DiffSystem empty = mk("taugen-system 1\nfield: Q\nn: 1\n[equations]\n");
    CHECK(empty.leader_order(1) == 0);
    CHECK(empty.max_leader_order() == 0);

    // the right-hand side must rank strictly below the leader
    CHECK_THROWS_AS(mk("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1' = x1''\n"),
                    NotSolvedFormError);
    CHECK_THROWS_AS(mk("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1' = x1'\n"),
                    NotSolvedFormError);
    // two equations may not share a coordinate
    CHECK_THROWS_AS(
        mk("taugen-system 1\nfield: Q\nn: 1\n[equations]\nx1' = x1\nx1'' = x1\n"),
        NotSolvedFormError);
}

TEST_CASE("tangent ideal of a hypersurface") {
    ParseContext c2{GroundField::Q, 2, true, false};
    Ideal V(GroundField::Q, x_block(2), {parse_poly("x1^2 + x2^2 - 1", c2)});
    Ideal T = tangent_ideal(V, 2);
    CHECK(T.ambient() == xu_block(2));
    CHECK(T.contains(parse_poly("x1*u1 + x2*u2", c2)));
    CHECK(!T.contains(parse_poly("u1", c2)));
}

TEST_CASE("prolongation equals the tangent ideal over Q") {
    ParseContext c2{GroundField::Q, 2, false, false};
    Ideal V(GroundField::Q, x_block(2), {parse_poly("x1^3 - x2", c2), });
    CHECK(prolongation_ideal(V, 2).equals(tangent_ideal(V, 2)));
}

TEST_CASE("prolongation adds the coefficient term over Q(t)") {
    // V: x1^2 = t. Differentiating with d/dt: 2 x1 u1 - 1 in I(tau V)
    ParseContext ct{GroundField::Qt, 1, true, false};
    Ideal V(GroundField::Qt, x_block(1), {parse_poly("x1^2 - t", ct)});
    Ideal tau = prolongation_ideal(V, 1);
    CHECK(tau.contains(parse_poly("2*x1*u1 - 1", ct)));
    // while the plain tangent ideal contains 2 x1 u1 instead
    Ideal T = tangent_ideal(V, 1);
    CHECK(T.contains(parse_poly("2*x1*u1", ct)));
    CHECK(!tau.equals(T));
}
