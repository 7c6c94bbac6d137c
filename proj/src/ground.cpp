#include "taugen/ground.hpp"

namespace taugen {

ResourceLimits& global_limits() {
    static ResourceLimits limits;
    return limits;
}

GroundElement::GroundElement(GroundField f, UnivPoly num, UnivPoly den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("ground element with zero denominator");
    if (field_ == GroundField::Q && (!num_.is_constant() || !den_.is_constant()))
        throw FieldMismatchError("t occurs in a ground element over Q");
    if (num_.is_zero()) {
        den_ = UnivPoly(Rational(1));
        return;
    }
    UnivPoly g = univ_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = univ_exact_div(num_, g);
        den_ = univ_exact_div(den_, g);
    }
    // normalize: monic denominator
    Rational dl = den_.lc();
    if (dl != 1) {
        den_ = den_.scaled(Rational(1) / dl);
        num_ = num_.scaled(Rational(1) / dl);
    }
}

GroundElement GroundElement::t_element() {
    return GroundElement(GroundField::Qt, UnivPoly::monomial(Rational(1), 1), UnivPoly(Rational(1)));
}

Rational GroundElement::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value of a non-rational ground element");
    return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

GroundElement GroundElement::operator+(const GroundElement& o) const {
    check_same_field(o);
    return GroundElement(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

GroundElement GroundElement::operator-(const GroundElement& o) const {
    check_same_field(o);
    return GroundElement(field_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

GroundElement GroundElement::operator*(const GroundElement& o) const {
    check_same_field(o);
    return GroundElement(field_, num_ * o.num_, den_ * o.den_);
}

GroundElement GroundElement::operator/(const GroundElement& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZeroError("division by zero ground element");
    return GroundElement(field_, num_ * o.den_, den_ * o.num_);
}

GroundElement GroundElement::operator-() const {
    GroundElement r = *this;
    r.num_ = -r.num_;
    return r;
}

GroundElement GroundElement::derive() const {
    if (field_ == GroundField::Q || is_zero()) return zero(field_);
    // (n/d)' = (n'd - nd')/d^2
    return GroundElement(field_, num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GroundElement GroundElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero ground element");
    return GroundElement(field_, den_, num_);
}

Integer GroundElement::height() const {
    Integer hn = num_.height(), hd = den_.height();
    return hn > hd ? hn : hd;
}

int GroundElement::cmp(const GroundElement& o) const {
    auto cmp_poly = [](const UnivPoly& a, const UnivPoly& b) -> int {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            int c = ::cmp(a.coeff(static_cast<std::size_t>(i)),
                          b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c;
        }
        return 0;
    };
    int c = cmp_poly(num_, o.num_);
    if (c != 0) return c;
    return cmp_poly(den_, o.den_);
}

} // namespace taugen
