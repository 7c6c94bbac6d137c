#pragma once
// Dense univariate polynomials over Q. Doubles as the coefficient domain for
// the Q(t) ground field (polynomials in t) and as the working type for
// single-variable computations (line restrictions, series denominators...).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "taugen/rational.hpp"

namespace taugen {

class UnivPoly {
  public:
    UnivPoly() = default;
    explicit UnivPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit UnivPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UnivPoly monomial(const Rational& c, std::size_t deg) {
        if (c == 0) return UnivPoly();
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = c;
        return UnivPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const Rational& lc() const {
        if (is_zero()) throw InternalError("lc of zero UnivPoly");
        return coeffs_.back();
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const UnivPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UnivPoly& o) const { return !(*this == o); }

    UnivPoly operator-() const {
        UnivPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    UnivPoly operator+(const UnivPoly& o) const {
        std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
        return UnivPoly(std::move(v));
    }
    UnivPoly operator-(const UnivPoly& o) const { return *this + (-o); }

    UnivPoly operator*(const UnivPoly& o) const {
        if (is_zero() || o.is_zero()) return UnivPoly();
        std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                v[i + j] += coeffs_[i] * o.coeffs_[j];
        return UnivPoly(std::move(v));
    }

    UnivPoly scaled(const Rational& c) const {
        if (c == 0) return UnivPoly();
        UnivPoly r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    // Euclidean division; returns (quotient, remainder).
    std::pair<UnivPoly, UnivPoly> divmod(const UnivPoly& d) const {
        if (d.is_zero()) throw DivisionByZeroError("UnivPoly division by zero");
        UnivPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational c = r.lc() / d.lc();
            std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
            UnivPoly m = monomial(c, k);
            q = q + m;
            r = r - m * d;
        }
        return {q, r};
    }

    UnivPoly derivative() const {
        if (coeffs_.size() <= 1) return UnivPoly();
        std::vector<Rational> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return UnivPoly(std::move(v));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    UnivPoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / lc());
    }

    // positive rational c with (*this)/c integer-primitive
    Rational content() const {
        if (is_zero()) return Rational(1);
        Integer num_gcd(0), den_lcm(1);
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rational c(num_gcd, den_lcm);
        c.canonicalize();
        return c;
    }

    Integer height() const {
        Integer h(1);
        for (const auto& c : coeffs_) {
            Integer hc = rational_height(c);
            if (hc > h) h = hc;
        }
        return h;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies t^i; invariant: back() != 0
};

// monic gcd; gcd(0, 0) = 0
inline UnivPoly univ_gcd(UnivPoly a, UnivPoly b) {
    while (!b.is_zero()) {
        UnivPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UnivPoly univ_exact_div(const UnivPoly& a, const UnivPoly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw InternalError("univ_exact_div: not divisible");
    return q;
}

} // namespace taugen
