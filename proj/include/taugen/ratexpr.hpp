#pragma once
// Function-field elements as unreduced (numerator, denominator) pairs of
// polynomials. No multivariate gcd is attempted; consumers keep denominators
// meaningful by checking them against the relevant ideal (normal form != 0).

#include <cstdint>
#include <map>

#include "taugen/polynomial.hpp"

namespace taugen {

struct RatExpr {
    Polynomial num;
    Polynomial den;

    RatExpr() = default;
    RatExpr(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZeroError("rational expression with zero denominator");
    }

    static RatExpr of(Polynomial p) {
        Polynomial one = Polynomial::constant(p.field(), Rational(1));
        return RatExpr(std::move(p), std::move(one));
    }
    static RatExpr zero(GroundField f) { return of(Polynomial::zero(f)); }

    GroundField field() const { return num.field(); }
    bool is_zero() const { return num.is_zero(); }

    RatExpr operator+(const RatExpr& o) const {
        return RatExpr(num * o.den + o.num * den, den * o.den);
    }
    RatExpr operator-(const RatExpr& o) const {
        return RatExpr(num * o.den - o.num * den, den * o.den);
    }
    RatExpr operator*(const RatExpr& o) const { return RatExpr(num * o.num, den * o.den); }
    RatExpr operator-() const { return RatExpr(-num, den); }

    RatExpr pow(std::uint32_t e) const {
        RatExpr r = of(Polynomial::constant(field(), Rational(1)));
        RatExpr base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // light canonicalization: pull scalar/t content out of both parts and give
    // the denominator a positive primitive leading coefficient
    RatExpr normalized() const {
        if (num.is_zero())
            return of(Polynomial::zero(field()));
        Polynomial cn = num.cleared_primitive();
        Polynomial cd = den.cleared_primitive();
        // cleared_primitive drops exactly a ground factor; recover the ratio
        // num/den = (cn * a) / (cd * b) with a, b ground: evaluate the factors
        // by dividing term-wise on the leading display terms
        GroundElement a = num.terms()[0].second / cn.terms()[0].second;
        GroundElement b = den.terms()[0].second / cd.terms()[0].second;
        return RatExpr(cn.scaled(a / b), cd);
    }
};

// substitute variables by rational expressions (missing variables stay as
// themselves); result carries the product of the used denominators
inline RatExpr subst_ratexpr(const Polynomial& f, const std::map<Variable, RatExpr>& images) {
    GroundField field = f.field();
    RatExpr acc = RatExpr::zero(field);
    for (auto& [m, c] : f.terms()) {
        RatExpr t = RatExpr::of(Polynomial::constant(field, c));
        for (auto& [v, e] : m.entries()) {
            auto it = images.find(v);
            if (it == images.end())
                t = t * RatExpr::of(Polynomial::term(field, GroundElement::one(field),
                                                     Monomial::var(v, e)));
            else
                t = t * it->second.pow(e);
        }
        acc = acc + t;
    }
    return acc.normalized();
}

} // namespace taugen
