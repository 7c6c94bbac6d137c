#include <doctest.h>

#include <algorithm>

#include "taugen/factor.hpp"
#include "taugen/io.hpp"

using namespace taugen;

namespace {

UnivPoly U(std::vector<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return UnivPoly(std::move(v));
}

Polynomial P(const std::string& s, std::uint32_t n = 2, GroundField f = GroundField::Q) {
    return parse_poly(s, ParseContext{f, n, false, false});
}

} // namespace

TEST_CASE("univariate factorization fixtures") {
    // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
    auto fs = factor_univariate(U({-1, 0, 0, 0, 1}));
    std::sort(fs.begin(), fs.end(), [](const UnivPoly& a, const UnivPoly& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree()
                                        : a.coeff(0) < b.coeff(0);
    });
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == U({-1, 1}));
    CHECK(fs[1] == U({1, 1}));
    CHECK(fs[2] == U({1, 0, 1}));

    // multiplicities are preserved: (x - 2)^2
    auto sq = factor_univariate(U({4, -4, 1}));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == U({-2, 1}));
    CHECK(sq[1] == U({-2, 1}));

    // content is dropped, leading coefficients made positive
    auto neg = factor_univariate(U({0, -6}));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0] == U({0, 1}));

    // a factorization over a larger example recombines correctly
    UnivPoly big = U({1, 1, 1}) * U({-3, 1}) * U({2, 0, 1});
    auto bf = factor_univariate(big);
    CHECK(bf.size() == 3);
    UnivPoly prod(Rational(1));
    for (auto& f : bf) prod = prod * f;
    CHECK(prod == big.scaled(Rational(1) / big.content()));
}

TEST_CASE("univariate irreducibility") {
    CHECK(univariate_irreducible(U({1, 1})) == Irreducibility::Certified);
    CHECK(univariate_irreducible(U({1, 0, 1})) == Irreducibility::Certified);
    CHECK(univariate_irreducible(U({1, 0, -1, 0, 1})) == Irreducibility::Certified);
    CHECK(univariate_irreducible(U({-1, 0, 1})) == Irreducibility::Refuted);
    CHECK(univariate_irreducible(U({5})) == Irreducibility::Refuted); // constants
}

TEST_CASE("multivariate certification") {
    // single support variable goes through the exact path
    CHECK(certify_irreducible(P("x1^2 + 1", 1), 0) == Irreducibility::Certified);
    CHECK(certify_irreducible(P("x1^2 - 1", 1), 0) == Irreducibility::Refuted);
    CHECK(certify_irreducible(P("x1 + 5", 1), 0) == Irreducibility::Certified);

    // genuinely multivariate: seeded line restrictions
    CHECK(certify_irreducible(P("x1^2 + x2^2 - 1"), 0) == Irreducibility::Certified);
    CHECK(certify_irreducible(P("x1*x2 - 1"), 0) == Irreducibility::Certified);

    // over Q(t): t-free goes through the Q path; t-linear via the gcd criterion
    CHECK(certify_irreducible(P("x1^2 + 1", 1, GroundField::Qt), 0) ==
          Irreducibility::Certified);
    CHECK(certify_irreducible(P("x1^2 - t", 1, GroundField::Qt), 0) ==
          Irreducibility::Certified);
}
