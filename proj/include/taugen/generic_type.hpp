#pragma once
// The generic differential point of a good pair: a realization of every
// derivative coordinate x_i^(k) as a rational expression in the base
// coordinates and a tower of fresh constants, one block of m per level.
// Membership of differential polynomials and decision of quantifier-free
// formulas reduce to normal forms modulo I(V).

#include <cstdint>
#include <mutex>
#include <vector>

#include "taugen/diff.hpp"
#include "taugen/formula.hpp"
#include "taugen/goodpair.hpp"
#include "taugen/ratexpr.hpp"

namespace taugen {

class DeltaGenericType {
  public:
    explicit DeltaGenericType(GoodPair pair);

    const GoodPair& pair() const { return pair_; }
    std::uint32_t n() const { return pair_.n; }
    std::uint32_t m() const { return pair_.certificate.m; }
    GroundField field() const { return pair_.V.ideal.field(); }

    // realization of x_i^(k) over (x, c_{1..k,*}); denominators stay outside
    // I(V)
    RatExpr coordinate(std::uint32_t i, std::uint32_t k) const;

    // f vanishes at the generic point
    bool member(const DiffPolynomial& f) const;

    // truth value of a quantifier-free formula at the generic point
    bool decide(const QFFormula& phi) const;

    // algebraic relations among the jet coordinates x_i^(0..s): the kernel of
    // evaluating polynomials in the derivative variables at the realization
    Ideal relations_ideal(std::uint32_t s) const;

  private:
    void extend_to(std::uint32_t k) const;
    RatExpr dhat_poly(const Polynomial& p) const;
    RatExpr dhat(const RatExpr& e) const;

    GoodPair pair_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<RatExpr>> levels_; // levels_[k][i-1] realizes x_i^(k)
};

} // namespace taugen
