#pragma once
// Shared helpers for the test and acceptance binaries: fixture loading and
// seeded random inputs. Kept header-only so both binaries can include it.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "taugen/goodpair.hpp"
#include "taugen/io.hpp"

namespace taugen::testsupport {

inline std::string fixture_dir() {
    const char* d = std::getenv("TAUGEN_FIXTURES");
    if (!d) throw std::runtime_error("TAUGEN_FIXTURES is not set");
    return d;
}

inline GoodPair pair_from_fixture(const std::string& name) {
    PairManifest m = read_pair_manifest(fixture_dir() + "/" + name);
    CheckResult res = check_good_pair(v_from_manifest(m), w_from_manifest(m), false, 0, m.point);
    if (!res.accepted)
        throw std::runtime_error("fixture pair rejected: " + name + " " + res.detail);
    return *res.pair;
}

// Random differential polynomial body in x1..xn with derivatives up to
// max_order, total degree up to max_degree, and integer coefficients of
// height up to max_height. Term count is small to keep oracles fast.
inline Polynomial random_diff_body(Rng& rng, GroundField f, std::uint32_t n,
                                   std::uint32_t max_order, std::uint32_t max_degree,
                                   long max_height, std::uint32_t max_terms = 4) {
    Polynomial p = Polynomial::zero(f);
    std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
    for (std::uint32_t t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::constant(f, Rational(rng.nonzero(max_height)));
        if (f == GroundField::Qt && rng.below(3) == 0)
            mono = mono * Polynomial::constant(f, GroundElement::t_element());
        std::uint32_t deg = static_cast<std::uint32_t>(rng.below(max_degree + 1));
        for (std::uint32_t e = 0; e < deg; ++e) {
            std::uint32_t i = 1 + static_cast<std::uint32_t>(rng.below(n));
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(max_order + 1));
            mono = mono * Polynomial::variable(f, Variable::deriv(i, j));
        }
        p = p + mono;
    }
    return p;
}

// Random polynomial over x1..xn, u1..un (no derivatives), for W-side inputs.
inline Polynomial random_xu_poly(Rng& rng, GroundField f, std::uint32_t n,
                                 std::uint32_t max_degree, long max_height,
                                 std::uint32_t max_terms = 3) {
    Polynomial p = Polynomial::zero(f);
    std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
    for (std::uint32_t t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::constant(f, Rational(rng.nonzero(max_height)));
        if (f == GroundField::Qt && rng.below(3) == 0)
            mono = mono * Polynomial::constant(f, GroundElement::t_element());
        std::uint32_t deg = static_cast<std::uint32_t>(rng.below(max_degree + 1));
        for (std::uint32_t e = 0; e < deg; ++e) {
            std::uint32_t i = 1 + static_cast<std::uint32_t>(rng.below(n));
            Variable v = rng.below(2) ? Variable::x(i) : Variable::u(i);
            mono = mono * Polynomial::variable(f, v);
        }
        p = p + mono;
    }
    return p;
}

// Random algebraic polynomial over x1..xn (no derivatives), for ideal inputs.
inline Polynomial random_x_poly(Rng& rng, GroundField f, std::uint32_t n, std::uint32_t max_degree,
                                long max_height, std::uint32_t max_terms = 3) {
    Polynomial p = Polynomial::zero(f);
    std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
    for (std::uint32_t t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::constant(f, Rational(rng.nonzero(max_height)));
        std::uint32_t deg = static_cast<std::uint32_t>(rng.below(max_degree + 1));
        for (std::uint32_t e = 0; e < deg; ++e) {
            std::uint32_t i = 1 + static_cast<std::uint32_t>(rng.below(n));
            mono = mono * Polynomial::variable(f, Variable::x(i));
        }
        p = p + mono;
    }
    return p;
}

} // namespace taugen::testsupport
