#include <doctest.h>

#include "taugen/ground.hpp"

using namespace taugen;

TEST_CASE("rational helpers") {
    CHECK(rational_of(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(rational_of(1, 0), DivisionByZeroError);

    CHECK(rational_height(Rational(0)) == 1);
    CHECK(rational_height(Rational(1)) == 1);
    CHECK(rational_height(Rational(-3)) == 3);
    CHECK(rational_height(Rational(2, 5)) == 5);
    CHECK(rational_height(Rational(-7, 3)) == 7);

    CHECK(rational_str(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("rng determinism and helpers") {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng r(7);
    for (int i = 0; i < 200; ++i) {
        long v = r.nonzero(5);
        CHECK(v != 0);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
    for (int i = 0; i < 200; ++i) {
        long v = r.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("univariate polynomials") {
    UnivPoly t = UnivPoly::monomial(Rational(1), 1);
    UnivPoly p = t * t - UnivPoly(Rational(1)); // t^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(p.derivative() == t.scaled(Rational(2)));

    auto [q, rem] = p.divmod(t - UnivPoly(Rational(1)));
    CHECK(rem.is_zero());
    CHECK(q == t + UnivPoly(Rational(1)));

    CHECK(univ_gcd(p, t - UnivPoly(Rational(1))) == (t - UnivPoly(Rational(1))).monic());
    CHECK(UnivPoly(Rational(0)).degree() == -1);

    UnivPoly half = UnivPoly(std::vector<Rational>{Rational(1, 2), Rational(3, 2)});
    CHECK(half.content() == Rational(1, 2));
    CHECK(half.height() == 3);
}

TEST_CASE("ground elements over Q") {
    GroundElement a(GroundField::Q, Rational(2, 3));
    GroundElement b(GroundField::Q, Rational(3));
    CHECK((a * b).rational_value() == Rational(2));
    CHECK((a + b).rational_value() == Rational(11, 3));
    CHECK((a / b).rational_value() == Rational(2, 9));
    CHECK(a.derive().is_zero()); // the derivation vanishes on Q
    CHECK(a.height() == 3);
}

TEST_CASE("ground elements over Q(t)") {
    GroundElement t = GroundElement::t_element();
    GroundElement one = GroundElement::one(GroundField::Qt);

    GroundElement e = one / t; // 1/t
    CHECK(e.num().is_one());
    CHECK(e.den() == UnivPoly::monomial(Rational(1), 1));

    // d/dt (1/t) = -1/t^2
    GroundElement de = e.derive();
    CHECK(de == -(one / (t * t)));

    // reduction to lowest terms with a monic denominator
    GroundElement f = (t * t - one) / (t - one); // = t + 1
    CHECK(f == t + one);
    CHECK(f.is_polynomial_in_t());

    CHECK(t.derive() == one);
    CHECK_THROWS_AS(one / GroundElement::zero(GroundField::Qt), DivisionByZeroError);
}
