#include <doctest.h>

#include "taugen/io.hpp"
#include "taugen/polynomial.hpp"

using namespace taugen;

namespace {

Polynomial P(const std::string& s, std::uint32_t n = 2, bool u = true, bool derivs = true) {
    return parse_poly(s, ParseContext{GroundField::Q, n, u, derivs});
}

} // namespace

TEST_CASE("arithmetic and normalization") {
    Polynomial x = Polynomial::variable(GroundField::Q, Variable::x(1));
    Polynomial y = Polynomial::variable(GroundField::Q, Variable::x(2));

    Polynomial p = (x + y) * (x - y);
    CHECK(p == P("x1^2 - x2^2"));
    CHECK((p - p).is_zero());
    CHECK(p.term_count() == 2);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(Variable::x(1)) == 2);
    CHECK(-p == P("x2^2 - x1^2"));
    CHECK(p.pow(2) == P("x1^4 - 2*x1^2*x2^2 + x2^4"));
}

TEST_CASE("display order puts later variables first") {
    // global order: x1 < x2 < u1 < derivatives
    CHECK(print_poly(P("x1 + x2 + u1 + x1'")) == "x1' + u1 + x2 + x1");
    CHECK(print_poly(P("x1 + x1^2")) == "x1^2 + x1");
}

TEST_CASE("partial derivatives and coefficient derivation") {
    Polynomial p = P("x1^3*x2 + 2*x2");
    CHECK(p.partial_derivative(Variable::x(1)) == P("3*x1^2*x2"));
    CHECK(p.partial_derivative(Variable::x(2)) == P("x1^3 + 2"));
    CHECK(p.coefficient_derivation().is_zero()); // over Q

    // over Q(t), d/dt passes through to the coefficients
    ParseContext qt{GroundField::Qt, 1, false, false};
    Polynomial q = parse_poly("t^2*x1 + t", qt);
    CHECK(q.coefficient_derivation() == parse_poly("2*t*x1 + 1", qt));
}

TEST_CASE("substitution and renaming") {
    Polynomial p = P("x1^2 + x2");
    std::map<Variable, Polynomial> images{{Variable::x(1), P("x2 + 1")}};
    CHECK(p.substitute(images) == P("x2^2 + 3*x2 + 1"));

    std::map<Variable, Variable> names{{Variable::x(1), Variable::u(1)},
                                       {Variable::x(2), Variable::x(1)}};
    CHECK(p.rename(names) == P("u1^2 + x1"));
}

TEST_CASE("collect groups by selected variables") {
    Polynomial p = P("x1*u1^2 + x2*u1^2 + u1 + 7");
    auto parts = p.collect([](Variable v) { return v.kind == VarKind::Prolong; });
    CHECK(parts.size() == 3);
    CHECK(parts.at(Monomial::var(Variable::u(1), 2)) == P("x2 + x1"));
    CHECK(parts.at(Monomial::var(Variable::u(1))) == P("1"));
    CHECK(parts.at(Monomial::one()) == P("7"));
}

TEST_CASE("cleared primitive and height") {
    CHECK(P("1/2*x1 + 1/3").cleared_primitive() == P("3*x1 + 2"));
    CHECK(P("-2*x1 - 4").cleared_primitive() == P("x1 + 2")); // positive display lead
    CHECK(P("0").cleared_primitive().is_zero());
    CHECK(P("x1").height() == 1);
    CHECK(P("2/3*x1 + 5").height() == 5);
    CHECK(P("0").height() == 1);

    // over Q(t): t-denominators are cleared, t-content stays (the associate
    // is primitive over the integers, not over Q[t])
    ParseContext qt{GroundField::Qt, 1, true, false};
    CHECK(parse_poly("2/t*u1 - 1/t", qt).cleared_primitive() == parse_poly("2*u1 - 1", qt));
    Polynomial q = parse_poly("2*t*u1 - t", qt);
    CHECK(q.cleared_primitive() == q);
}

TEST_CASE("monomial orders") {
    std::vector<Variable> amb = x_block(2);
    MonomialOrder grevlex = MonomialOrder::grevlex(amb);
    MonomialOrder lex = MonomialOrder::lex(amb);

    Monomial x1sq = Monomial::var(Variable::x(1), 2);
    Monomial x2 = Monomial::var(Variable::x(2));
    // degree wins under grevlex, position wins under lex
    CHECK(grevlex.greater(x1sq, x2));
    CHECK(lex.greater(x2, x1sq));

    Polynomial p = P("x2 + x1^3", 2, false, false);
    CHECK(print_poly(p.leading_term(grevlex).first.is_one()
                         ? p
                         : Polynomial::term(GroundField::Q, GroundElement::one(GroundField::Q),
                                            p.leading_term(grevlex).first)) == "x1^3");
    CHECK(p.leading_term(lex).first == x2);

    // block order eliminates its first block before anything else
    MonomialOrder block = MonomialOrder::block({Variable::x(2)}, {Variable::x(1)});
    CHECK(block.greater(x2, x1sq));
}

TEST_CASE("structural compare is a total order") {
    Polynomial a = P("x1"), b = P("x1 + 1"), c = P("x2");
    CHECK(a.cmp(a) == 0);
    CHECK(a.cmp(b) != 0);
    CHECK(a.cmp(b) == -b.cmp(a));
    CHECK(((a.cmp(c) < 0) != (c.cmp(a) < 0)));
}
