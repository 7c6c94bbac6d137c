#include "taugen/polynomial.hpp"

#include <algorithm>

namespace taugen {

Polynomial Polynomial::constant(GroundField f, const GroundElement& c) {
    return term(f, c, Monomial::one());
}

Polynomial Polynomial::term(GroundField f, const GroundElement& c, const Monomial& m) {
    Polynomial p(f);
    if (c.field() != f) throw FieldMismatchError("coefficient over the wrong field");
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

GroundElement Polynomial::constant_value() const {
    if (terms_.empty()) return GroundElement::zero(field_);
    if (terms_.size() != 1 || !terms_[0].first.is_one())
        throw InternalError("constant_value of a non-constant polynomial");
    return terms_[0].second;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t Polynomial::degree_in(Variable v) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

std::vector<Variable> Polynomial::support() const {
    std::vector<Variable> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.entries()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

GroundElement Polynomial::coeff(const Monomial& m) const {
    for (auto& [mm, c] : terms_)
        if (mm == m) return c;
    return GroundElement::zero(field_);
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return display_greater(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(t);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    // a cancelled middle term can expose an earlier duplicate only if input
    // had equal monomials non-adjacent, which sorting rules out
    terms_ = std::move(out);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (field_ != o.field_) throw FieldMismatchError("adding polynomials over different fields");
    Polynomial r(field_);
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && display_greater(a->first, b->first)))
            r.terms_.push_back(*a++);
        else if (a == terms_.end() || display_greater(b->first, a->first))
            r.terms_.push_back(*b++);
        else {
            GroundElement c = a->second + b->second;
            if (!c.is_zero()) r.terms_.push_back({a->first, c});
            ++a; ++b;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (auto& [m, c] : terms_) r.terms_.push_back({m, -c});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (field_ != o.field_) throw FieldMismatchError("multiplying polynomials over different fields");
    Polynomial r(field_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::map<Monomial, GroundElement> acc;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), ca * cb);
            else it->second = it->second + ca * cb;
        }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    r.normalize();
    return r;
}

Polynomial Polynomial::scaled(const GroundElement& c) const {
    if (c.is_zero()) return Polynomial(field_);
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (auto& [m, cc] : terms_) r.terms_.push_back({m, cc * c});
    return r;
}

Polynomial Polynomial::mul_term(const GroundElement& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(field_);
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (auto& [mm, cc] : terms_) r.terms_.push_back({mm * m, cc * c});
    r.normalize(); // multiplication by a monomial preserves display order, but stay safe
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(field_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(Variable v) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m.divide_by(Monomial::var(v));
        GroundElement dc = c * GroundElement(field_, Rational(static_cast<long>(e)));
        r.terms_.push_back({dm, dc});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::coefficient_derivation() const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        GroundElement dc = c.derive();
        if (!dc.is_zero()) r.terms_.push_back({m, dc});
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& images) const {
    Polynomial acc(field_);
    for (auto& [m, c] : terms_) {
        Polynomial t = constant(field_, c);
        for (auto& [v, e] : m.entries()) {
            auto it = images.find(v);
            if (it == images.end())
                t = t.mul_term(GroundElement::one(field_), Monomial::var(v, e));
            else
                t = t * it->second.pow(e);
        }
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::rename(const std::map<Variable, Variable>& images) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        Monomial nm;
        for (auto& [v, e] : m.entries()) {
            auto it = images.find(v);
            nm = nm * Monomial::var(it == images.end() ? v : it->second, e);
        }
        r.terms_.push_back({nm, c});
    }
    r.normalize();
    return r;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw InternalError("leading_term of zero polynomial");
    const Term* best = &terms_[0];
    for (auto& t : terms_)
        if (ord.greater(t.first, best->first)) best = &t;
    return *best;
}

std::map<Monomial, Polynomial> Polynomial::collect(
    const std::function<bool(Variable)>& pred) const {
    std::map<Monomial, Polynomial> out;
    for (auto& [m, c] : terms_) {
        Monomial key = m.filter(pred);
        Monomial rest = m.divide_by(key);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, Polynomial(field_)).first;
        it->second = it->second + term(field_, c, rest);
    }
    return out;
}

Polynomial Polynomial::cleared_primitive() const {
    if (terms_.empty()) return *this;
    // 1. clear t-denominators by the lcm of coefficient denominators
    UnivPoly l(Rational(1));
    for (auto& [m, c] : terms_) {
        const UnivPoly& d = c.den();
        UnivPoly g = univ_gcd(l, d);
        l = l * univ_exact_div(d, g);
    }
    Polynomial p = l.is_one() ? *this : scaled(GroundElement(field_, l, UnivPoly(Rational(1))));
    // 2. divide by the rational content over all t-coefficients
    Rational content(0);
    for (auto& [m, c] : p.terms_) {
        Rational cc = c.num().content();
        if (content == 0) content = cc;
        else {
            // gcd of positive rationals a/b, c/d = gcd(ad, cb)/bd
            Rational a = content, b = cc;
            Integer num_gcd, den_lcm;
            mpz_gcd(num_gcd.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
            content = Rational(num_gcd, den_lcm);
            content.canonicalize();
        }
    }
    if (content == 0) content = 1;
    // 3. sign: leading display coefficient gets a positive leading rational
    Rational lead = p.terms_[0].second.num().lc();
    if (lead < 0) content = -content;
    return p.scaled(GroundElement(field_, Rational(1) / content));
}

Integer Polynomial::height() const {
    Integer h(1);
    for (auto& [m, c] : terms_) {
        Integer hc = c.height();
        if (hc > h) h = hc;
    }
    return h;
}

int Polynomial::cmp(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first)
            return display_greater(o.terms_[i].first, terms_[i].first) ? -1 : 1;
        int c = terms_[i].second.cmp(o.terms_[i].second);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace taugen
