#pragma once
// Deterministic, resumable enumeration of good pairs over Q and of
// quantifier-free formulas, with the recursive pairing "formula j belongs to
// the type of pair i".
//
// Canonical order: cells by (coefficient height, then generator degree),
// inside a cell by length-lex on a fixed textual recipe encoding.  The stream
// emitted for smaller bounds is a prefix of the stream for larger bounds
// along the same cell schedule, so the listing is stable as bounds grow.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "taugen/formula.hpp"
#include "taugen/goodpair.hpp"

namespace taugen {

struct EnumerationBounds {
    std::uint32_t n = 1;          // number of differential indeterminates
    std::uint32_t r_max = 1;      // max stacking depth (ambient is n*r coordinates)
    std::uint32_t deg_max = 1;    // max total degree of any recipe polynomial
    std::uint32_t height_max = 1; // max coefficient height
    std::uint64_t count = 0;      // pairs to emit
};

struct EnumEvent {
    enum class Kind { Pair, Duplicate, Skip };
    Kind kind = Kind::Pair;
    std::uint64_t index = 0; // emission ordinal; for Duplicate, the earlier ordinal
    std::uint32_t cell_height = 0;
    std::uint32_t cell_degree = 0;
    std::string recipe;
    std::string detail;             // skip reason / duplicate note
    const GoodPair* pair = nullptr; // Pair events only; valid during the callback
};

// Streams events in canonical order until `b.count` pairs have been emitted,
// the cells are exhausted, or the sink returns false.  Candidates that hit a
// resource limit are reported as Skip events; candidates equivalent to an
// earlier emission (bounded-order criterion) as Duplicate events.
void enumerate_pairs(const EnumerationBounds& b,
                     const std::function<bool(const EnumEvent&)>& sink);

// The j-th formula (1-based) of the canonical formula stream over n
// differential indeterminates: atoms by (order, degree, height, encoding)
// with the constants 0 and 1 ordered after the other order-0 atoms, then
// boolean combinations by tree size (negations, conjunctions, disjunctions).
QFFormula formula_at(std::uint32_t n, const EnumerationBounds& b, std::uint64_t j);

// first `count` formulas of the same stream
std::vector<QFFormula> enumerate_formulas(std::uint32_t n, const EnumerationBounds& b,
                                          std::size_t count);

// decide(formula j, generic type of pair i); total within the bounds' reach
bool listing_membership(std::uint64_t i, std::uint64_t j, const EnumerationBounds& b);

} // namespace taugen
