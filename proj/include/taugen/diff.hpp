#pragma once
// Differential polynomials in n coordinates, the formal derivation D, solved
// differential systems, and the tangent / prolongation ideal constructions.
//
// A differential polynomial lives over the derivative variables x_i^(j)
// (j = 0 being x_i itself); over Q(t) the parameter sits in the coefficients.
// D maps x_i^(j) to x_i^(j+1) by the chain rule and adds the coefficient
// derivation, so over Q(t) it is the total derivative d/dt.

#include <cstdint>
#include <utility>
#include <vector>

#include "taugen/ideal.hpp"
#include "taugen/io.hpp"
#include "taugen/polynomial.hpp"

namespace taugen {

class DiffPolynomial {
  public:
    DiffPolynomial(std::uint32_t n, Polynomial body);

    std::uint32_t n() const { return n_; }
    const Polynomial& body() const { return body_; }
    GroundField field() const { return body_.field(); }

    // max derivative order occurring; 0 when none (including constants)
    std::uint32_t order() const;

    bool operator==(const DiffPolynomial& o) const { return n_ == o.n_ && body_ == o.body_; }

  private:
    std::uint32_t n_;
    Polynomial body_; // Base / Deriv variables only
};

// D(f): chain rule plus coefficient derivation; order goes up by one for
// nonconstant f
DiffPolynomial formal_derivative(const DiffPolynomial& f);

// formal derivative at the raw polynomial level (same variable convention)
Polynomial formal_derivative_body(const Polynomial& body);

class DiffSystem {
  public:
    // validates the solved orthonomic form; throws NotSolvedFormError
    DiffSystem(GroundField field, std::uint32_t n,
               std::vector<std::pair<Variable, Polynomial>> equations);

    static DiffSystem from_file(const SystemFile& f) {
        return DiffSystem(f.field, f.n, f.equations);
    }

    GroundField field() const { return field_; }
    std::uint32_t n() const { return n_; }
    // sorted by coordinate index; leaders are deriv(i, k_i) with k_i >= 1
    const std::vector<std::pair<Variable, Polynomial>>& equations() const { return equations_; }

    // leader order k_i for coordinate i (1-based), or 0 when the coordinate is free
    std::uint32_t leader_order(std::uint32_t i) const;
    // max leader order over all equations; 0 for the empty system
    std::uint32_t max_leader_order() const;

  private:
    GroundField field_;
    std::uint32_t n_;
    std::vector<std::pair<Variable, Polynomial>> equations_;
};

// TV: generators of I(V) (reduced basis) plus their differentials in u.
// V must live over exactly x1..xn; the result lives over (x1..xn, u1..un).
Ideal tangent_ideal(const Ideal& V, std::uint32_t n);

// T_d(V): like TV with the coefficient-derivation term added to each
// differential; coincides with TV over Q.
Ideal prolongation_ideal(const Ideal& V, std::uint32_t n);

} // namespace taugen
