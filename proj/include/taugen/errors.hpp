#pragma once
// Exception taxonomy and resource limits shared across the library.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taugen {

// Raised when operands live over different ground fields.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division by the zero ground element / zero polynomial.
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// A computation exceeded its step budget or wall-clock allotment.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dimension() on the unit ideal has no meaning.
struct UnitIdealError : std::domain_error {
    using std::domain_error::domain_error;
};

// A tracked denominator fell into the ideal it must stay out of.
struct DegenerateDenominatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A differential system fails the solved-form requirements.
struct NotSolvedFormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The series oracle needs a stored rational point on V; it is absent or does
// not lie on the variety.
struct PointError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A pair lacks primality evidence and the caller did not opt into --permissive.
struct PrimalityEvidenceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Syntax error with a position, for expressions, manifests and system files.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int column_)
        : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

// Internal invariant violation; reaching one of these is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Budgets applied to basis computations. Steps are deterministic; seconds are
// wall clock and must only be used where byte-reproducibility does not matter.
struct ResourceLimits {
    std::uint64_t max_reduction_steps = 1'000'000;
    double max_seconds = 60.0;
    bool use_wall_clock = true;
};

ResourceLimits& global_limits();

} // namespace taugen
