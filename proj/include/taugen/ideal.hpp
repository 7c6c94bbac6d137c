#pragma once
// Polynomial ideals with cached reduced Groebner bases. An Ideal is a value
// type; copies share the underlying state, so a basis computed through any
// copy is visible to all. The cache behaves as a write-once map keyed by the
// monomial order and is safe under concurrent readers.

#include <memory>
#include <optional>
#include <vector>

#include "taugen/polynomial.hpp"

namespace taugen {

struct GBReport {
    std::vector<Polynomial> basis; // reduced, monic, sorted by leading monomial ascending
    std::uint64_t pair_count = 0;
    std::uint64_t reduction_count = 0;
    double elapsed_seconds = 0.0;
};

class Ideal {
  public:
    Ideal() = default;
    Ideal(GroundField field, std::vector<Variable> ambient, std::vector<Polynomial> generators);

    GroundField field() const;
    const std::vector<Variable>& ambient() const;
    const std::vector<Polynomial>& generators() const;

    MonomialOrder default_order() const;

    // reduced monic basis under ord (cached)
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;
    const std::vector<Polynomial>& groebner_basis() const;

    // uncached recomputation with statistics
    GBReport groebner_report(const MonomialOrder& ord,
                             const ResourceLimits& limits = global_limits()) const;

    Polynomial normal_form(const Polynomial& f, const MonomialOrder& ord) const;
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;

    bool is_zero_ideal() const;
    bool is_proper() const; // basis != {1}

    // I ∩ k[keep]; keep must be a subset of the ambient; the result's ambient
    // is exactly `keep` in canonical order
    Ideal eliminate(const std::vector<Variable>& keep) const;

    // I : f^inf via an adjoined inverse variable and elimination
    Ideal saturate(const Polynomial& f) const;

    // Krull dimension of the quotient plus a maximal independent variable set
    // (lexicographically least among those of maximal size). Unit ideal throws.
    std::pair<int, std::vector<Variable>> dimension() const;

    // same ambient required; compares reduced bases under the default order
    bool equals(const Ideal& o) const;

    // canonical single-line description of the reduced default basis
    // (cleared primitive forms) — used as a deterministic registry key
    std::string basis_key() const;

  private:
    struct State;
    std::shared_ptr<State> st_;
};

// direct engine entry, exposed for tests and reports
GBReport buchberger(GroundField field, const std::vector<Polynomial>& gens,
                    const MonomialOrder& ord, const ResourceLimits& limits);

// remainder of f on division by the (not necessarily Groebner) list `basis`
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, std::uint64_t* steps = nullptr);

} // namespace taugen
