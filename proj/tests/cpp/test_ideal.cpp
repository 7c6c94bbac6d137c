#include <doctest.h>

#include "taugen/ideal.hpp"
#include "taugen/io.hpp"

using namespace taugen;

namespace {

Polynomial P(const std::string& s, std::uint32_t n = 2, bool u = false) {
    return parse_poly(s, ParseContext{GroundField::Q, n, u, false});
}

Ideal circle_hyperbola() {
    return Ideal(GroundField::Q, x_block(2), {P("x1^2 + x2^2 - 1"), P("x1*x2 - 1")});
}

std::vector<std::string> printed(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(print_poly(p.cleared_primitive()));
    return out;
}

} // namespace

TEST_CASE("reduced grevlex and lex bases of a frozen fixture") {
    Ideal I = circle_hyperbola();
    CHECK(printed(I.groebner_basis()) ==
          std::vector<std::string>{"x1*x2 - 1", "x2^2 + x1^2 - 1", "x2 + x1^3 - x1"});

    // lex basis is derivable by hand: substituting x2 = 1/x1 into the circle
    // gives x1^4 - x1^2 + 1 = 0 and x2 = x1 - x1^3
    MonomialOrder lex = MonomialOrder::lex(x_block(2));
    CHECK(printed(I.groebner_basis(lex)) ==
          std::vector<std::string>{"x1^4 - x1^2 + 1", "x2 + x1^3 - x1"});
}

TEST_CASE("normal forms") {
    Ideal I(GroundField::Q, x_block(1), {P("x1^2 - 1", 1)});
    CHECK(print_poly(I.normal_form(P("x1^3", 1))) == "x1");
    CHECK(I.normal_form(P("x1^2 - 1", 1)).is_zero());
    CHECK(I.contains(P("x1^4 - 1", 1)));
    CHECK(!I.contains(P("x1 - 1", 1)));
}

TEST_CASE("zero and unit ideals") {
    Ideal Z(GroundField::Q, x_block(1), {});
    CHECK(Z.is_zero_ideal());
    CHECK(Z.is_proper());
    CHECK(Z.normal_form(P("x1", 1)) == P("x1", 1));

    Ideal U(GroundField::Q, x_block(1), {P("2", 1)});
    CHECK(!U.is_proper());
    CHECK_THROWS_AS(U.dimension(), UnitIdealError);
}

TEST_CASE("elimination") {
    Ideal I = circle_hyperbola();
    Ideal E = I.eliminate({Variable::x(1)});
    CHECK(E.ambient() == std::vector<Variable>{Variable::x(1)});
    CHECK(printed(E.groebner_basis()) == std::vector<std::string>{"x1^4 - x1^2 + 1"});

    // eliminating everything from a proper ideal leaves the zero ideal
    CHECK(I.eliminate({}).is_zero_ideal());
}

TEST_CASE("saturation") {
    // <x1^2> : x1^inf = <1>
    Ideal A(GroundField::Q, x_block(1), {P("x1^2", 1)});
    CHECK(!A.saturate(P("x1", 1)).is_proper());

    // <x1*u1> : x1^inf = <u1>
    Ideal B(GroundField::Q, xu_block(1), {parse_poly("x1*u1", {GroundField::Q, 1, true, false})});
    Ideal Bs = B.saturate(P("x1", 1));
    CHECK(printed(Bs.groebner_basis()) == std::vector<std::string>{"u1"});
}

TEST_CASE("dimension and independent sets") {
    auto [d0, s0] = circle_hyperbola().dimension();
    CHECK(d0 == 0);
    CHECK(s0.empty());

    Ideal H(GroundField::Q, x_block(2), {P("x1*x2 - 1")});
    auto [d1, s1] = H.dimension();
    CHECK(d1 == 1);
    CHECK(s1 == std::vector<Variable>{Variable::x(1)}); // lexicographically least

    Ideal Z(GroundField::Q, x_block(2), {});
    CHECK(Z.dimension().first == 2);
}

TEST_CASE("equals and basis keys") {
    Ideal A(GroundField::Q, x_block(1), {P("x1^2 - 1", 1)});
    Ideal B(GroundField::Q, x_block(1), {P("2*x1^2 - 2", 1), P("x1^4 - 1", 1)});
    CHECK(A.equals(B));
    CHECK(A.basis_key() == B.basis_key());
    Ideal C(GroundField::Q, x_block(1), {P("x1 - 1", 1)});
    CHECK(!A.equals(C));
    CHECK(A.basis_key() != C.basis_key());
}

TEST_CASE("buchberger reports and idempotence") {
    Ideal I = circle_hyperbola();
    GBReport rep = I.groebner_report(I.default_order());
    CHECK(rep.basis.size() == 3);
    CHECK(rep.pair_count > 0);

    // recomputing from the reduced basis reproduces it
    GBReport again = buchberger(GroundField::Q, rep.basis, I.default_order(), global_limits());
    CHECK(again.basis == rep.basis);

    // every S-polynomial of the basis reduces to zero
    MonomialOrder ord = I.default_order();
    for (std::size_t i = 0; i < rep.basis.size(); ++i)
        for (std::size_t j = i + 1; j < rep.basis.size(); ++j) {
            const Polynomial &f = rep.basis[i], &g = rep.basis[j];
            Monomial lf = f.leading_term(ord).first, lg = g.leading_term(ord).first;
            Monomial lcm = Monomial::lcm(lf, lg);
            Polynomial s = f.mul_term(GroundElement::one(GroundField::Q) / f.leading_term(ord).second,
                                      lcm.divide_by(lf)) -
                           g.mul_term(GroundElement::one(GroundField::Q) / g.leading_term(ord).second,
                                      lcm.divide_by(lg));
            CHECK(reduce_full(s, rep.basis, ord).is_zero());
        }
}

TEST_CASE("resource limits stop runaway computations") {
    ResourceLimits tight;
    tight.max_reduction_steps = 1;
    tight.max_seconds = 60.0;
    Ideal I = circle_hyperbola();
    CHECK_THROWS_AS(I.groebner_report(I.default_order(), tight), ResourceLimitError);
}
