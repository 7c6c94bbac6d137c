#pragma once
// Sparse multivariate polynomials over a ground field. Terms are kept sorted
// by the canonical display order (descending) with no zero coefficients, so
// structural equality is semantic equality.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "taugen/ground.hpp"
#include "taugen/monomial.hpp"
#include "taugen/order.hpp"

namespace taugen {

class Polynomial {
  public:
    using Term = std::pair<Monomial, GroundElement>;

    explicit Polynomial(GroundField f = GroundField::Q) : field_(f) {}

    static Polynomial zero(GroundField f) { return Polynomial(f); }
    static Polynomial constant(GroundField f, const GroundElement& c);
    static Polynomial constant(GroundField f, const Rational& c) {
        return constant(f, GroundElement(f, c));
    }
    static Polynomial variable(GroundField f, Variable v) {
        return term(f, GroundElement::one(f), Monomial::var(v));
    }
    static Polynomial term(GroundField f, const GroundElement& c, const Monomial& m);

    GroundField field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    GroundElement constant_value() const; // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::uint32_t total_degree() const; // 0 for the zero polynomial
    std::uint32_t degree_in(Variable v) const;
    std::vector<Variable> support() const; // sorted ascending
    bool uses(Variable v) const { return degree_in(v) > 0; }

    GroundElement coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const GroundElement& c) const;
    Polynomial mul_term(const GroundElement& c, const Monomial& m) const;
    Polynomial pow(std::uint32_t e) const;

    // d/dv, treating other variables as constants; coefficients pass through
    Polynomial partial_derivative(Variable v) const;
    // apply the ground-field derivation to every coefficient (P |-> P^d);
    // identically zero over Q
    Polynomial coefficient_derivation() const;

    // simultaneous substitution; variables not in the map stay themselves
    Polynomial substitute(const std::map<Variable, Polynomial>& images) const;

    // rename variables (injective on the support)
    Polynomial rename(const std::map<Variable, Variable>& images) const;

    // largest monomial under ord (throws on zero)
    const Term& leading_term(const MonomialOrder& ord) const;

    // collect as a polynomial in the variables selected by `pred`:
    // result maps each pred-monomial to the coefficient polynomial in the rest
    std::map<Monomial, Polynomial> collect(const std::function<bool(Variable)>& pred) const;

    // multiply away rational/t denominators and divide by content: the unique
    // integer-primitive associate with positive leading rational (display order)
    Polynomial cleared_primitive() const;

    Integer height() const; // max coefficient height, >= 1

    // deterministic structural compare for container keys
    int cmp(const Polynomial& o) const;

  private:
    void normalize(); // sort terms, drop zeros
    GroundField field_;
    std::vector<Term> terms_; // descending display order
};

} // namespace taugen
