#pragma once
// Prolongation stabilization: from a solved differential system to a good
// pair. Jet ideals J_s collect the formal derivatives of the solved
// equations up to order s; the transcendence-degree increments d_s settle at
// the maximal leader order r, and the stacked coordinates b = (x, ..., x^(r))
// with their derivative identifications present the resulting pair.

#include <cstdint>
#include <vector>

#include "taugen/diff.hpp"
#include "taugen/goodpair.hpp"

namespace taugen {

struct StabilizationTrace {
    std::vector<int> d;                     // increments d_0 .. d_{r+1}
    std::uint32_t r = 0;                    // stabilization index
    std::vector<Ideal> prolongation_ideals; // J_0 .. J_{r+1} over x^(0..s)
};

struct StabilizeResult {
    StabilizationTrace trace;
    std::uint32_t stacked_n = 1; // N = n * (r + 1)
    CheckResult check;           // check.pair holds the stacked pair on acceptance
};

StabilizeResult stabilize(const DiffSystem& S, bool permissive, std::uint64_t seed);

} // namespace taugen
