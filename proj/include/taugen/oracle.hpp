#pragma once
// Independent verification oracles for membership verdicts: exact rewriting
// through the graph map for m = 0 pairs, and truncated power-series solutions
// through a stored rational point for arbitrary pairs. The series oracle is
// one-sided: it can refute a Zero verdict, never prove one.

#include <cstdint>

#include "taugen/diff.hpp"
#include "taugen/goodpair.hpp"

namespace taugen {

enum class Verdict { Zero, Nonzero };

// exact oracle for graph pairs (m = 0): rewrite every derivative through the
// fiber forms down to order zero, clear denominators, reduce modulo I(V)
Verdict subst_oracle(const GoodPair& pair, const DiffPolynomial& f);

inline constexpr std::uint32_t kDefaultSeriesOrder = 12;
inline constexpr int kSeriesRetryCap = 5;

struct SeriesOutcome {
    bool refuted = false;
    std::uint32_t order = 0; // witness order when refuted, truncation order otherwise
    Rational witness;        // the nonzero witness coefficient (refuted only)
    std::uint64_t seed_used = 0;
};

// integrate the fiber dynamics from the stored point with seeded random
// derivative streams for the basis coordinates, evaluate f on the solution,
// and scan the coefficients up to order N - order(f)
SeriesOutcome series_oracle(const GoodPair& pair, const DiffPolynomial& f, std::uint32_t order,
                            std::uint64_t seed);

} // namespace taugen
