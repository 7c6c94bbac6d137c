#pragma once
// Ground fields of the library: Q with the zero derivation and Q(t) with
// d/dt(t) = 1. Elements are reduced fractions of univariate polynomials in t
// with a monic denominator; over Q both parts are constants (denominator 1),
// so one representation serves both fields.

#include <string>

#include "taugen/univpoly.hpp"

namespace taugen {

enum class GroundField { Q, Qt };

inline const char* field_name(GroundField f) { return f == GroundField::Q ? "Q" : "Q(t)"; }

class GroundElement {
  public:
    GroundElement() : field_(GroundField::Q), num_(), den_(Rational(1)) {}
    // the element c of either field
    GroundElement(GroundField f, const Rational& c)
        : field_(f), num_(c), den_(Rational(1)) {}
    // num/den in Q(t); reduced and denominator-monic on construction
    GroundElement(GroundField f, UnivPoly num, UnivPoly den);

    static GroundElement zero(GroundField f) { return GroundElement(f, Rational(0)); }
    static GroundElement one(GroundField f) { return GroundElement(f, Rational(1)); }
    // the parameter t; only meaningful over Q(t)
    static GroundElement t_element();

    GroundField field() const { return field_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    Rational rational_value() const; // requires is_rational()

    const UnivPoly& num() const { return num_; }
    const UnivPoly& den() const { return den_; }

    GroundElement operator+(const GroundElement& o) const;
    GroundElement operator-(const GroundElement& o) const;
    GroundElement operator*(const GroundElement& o) const;
    GroundElement operator/(const GroundElement& o) const;
    GroundElement operator-() const;
    bool operator==(const GroundElement& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const GroundElement& o) const { return !(*this == o); }

    // d/dt by the quotient rule; identically zero over Q
    GroundElement derive() const;

    GroundElement inverse() const;

    // true when num and den have no t-denominators to clear (den == 1)
    bool is_polynomial_in_t() const { return den_.is_one(); }

    Integer height() const;

    // structural order for deterministic containers (not a field order)
    int cmp(const GroundElement& o) const;

  private:
    void check_same_field(const GroundElement& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("ground elements over different fields");
    }
    GroundField field_;
    UnivPoly num_;
    UnivPoly den_; // monic, gcd(num, den) = 1, never zero
};

} // namespace taugen
