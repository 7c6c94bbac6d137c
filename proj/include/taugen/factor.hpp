#pragma once
// Univariate factorization over Q (finite-field factorization, Hensel
// lifting, recombination) and the irreducibility certification used by the
// constructed variety families. Certification is sound: `Certified` and
// `Refuted` are proofs; probabilistic failures surface as `Unverified`.

#include <cstdint>
#include <vector>

#include "taugen/polynomial.hpp"
#include "taugen/univpoly.hpp"

namespace taugen {

enum class Irreducibility { Certified, Refuted, Unverified };

inline const char* irreducibility_name(Irreducibility s) {
    switch (s) {
        case Irreducibility::Certified: return "certified";
        case Irreducibility::Refuted: return "refuted";
        case Irreducibility::Unverified: return "unverified";
    }
    return "?";
}

// irreducible factors of f (degree >= 1, primitive integer coefficients,
// positive leading coefficient, with multiplicity; content dropped).
// f must be nonzero.
std::vector<UnivPoly> factor_univariate(const UnivPoly& f);

// exact irreducibility over Q; Refuted for constants
Irreducibility univariate_irreducible(const UnivPoly& f);

// Irreducibility of a multivariate polynomial over its ground field.
//   over Q         : exact for one support variable; seeded degree-preserving
//                    line restrictions otherwise (Certified or Unverified)
//   over Q(t)      : t-free input goes through the Q path (valid since Q(t)/Q
//                    is purely transcendental); input of t-degree 1 in one
//                    variable is decided by a gcd criterion; rest Unverified
Irreducibility certify_irreducible(const Polynomial& p, std::uint64_t seed);

} // namespace taugen
