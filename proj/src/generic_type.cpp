// Realization tower of the generic differential point of a good pair.
//
// Level 1 realizes x_i' from the fiber certificate: basis coordinates become
// fresh tower constants c_{1,j}, dependent coordinates follow their linear
// fiber forms. Differentiating a level applies the chain rule, sending x_i
// to its level-1 expression and c_{l,j} to c_{l+1,j}. All denominators are
// products of fiber-form denominators, hence stay outside I(V).

#include "taugen/generic_type.hpp"

#include <algorithm>
#include <map>

namespace taugen {

DeltaGenericType::DeltaGenericType(GoodPair pair) : pair_(std::move(pair)) {
    GroundField f = field();
    std::vector<RatExpr> l0, l1;
    for (std::uint32_t i = 1; i <= n(); ++i)
        l0.push_back(RatExpr::of(Polynomial::variable(f, Variable::x(i))));
    const GoodPairCertificate& cert = pair_.certificate;
    std::size_t fi = 0;
    for (std::uint32_t i = 1; i <= n(); ++i) {
        auto bit = std::find(cert.basis_indices.begin(), cert.basis_indices.end(), i);
        if (bit != cert.basis_indices.end()) {
            auto j = static_cast<std::uint32_t>(bit - cert.basis_indices.begin()) + 1;
            l1.push_back(RatExpr::of(Polynomial::variable(f, Variable::tower(1, j))));
        } else {
            if (fi >= cert.fiber_forms.size() || cert.fiber_forms[fi].target != i)
                throw InternalError("certificate fiber forms out of order");
            const LinearFiberForm& form = cert.fiber_forms[fi++];
            RatExpr e = form.constant;
            for (std::size_t j = 0; j < cert.basis_indices.size(); ++j)
                e = e + form.coeffs[j] *
                        RatExpr::of(Polynomial::variable(
                            f, Variable::tower(1, static_cast<std::uint32_t>(j + 1))));
            l1.push_back(e.normalized());
        }
    }
    levels_.push_back(std::move(l0));
    levels_.push_back(std::move(l1));
}

RatExpr DeltaGenericType::dhat_poly(const Polynomial& p) const {
    RatExpr acc = RatExpr::of(p.coefficient_derivation());
    for (Variable v : p.support()) {
        Polynomial pd = p.partial_derivative(v);
        if (pd.is_zero()) continue;
        RatExpr dv;
        if (v.kind == VarKind::Base) dv = levels_[1][v.index - 1];
        else if (v.kind == VarKind::Tower)
            dv = RatExpr::of(Polynomial::variable(field(), Variable::tower(v.order + 1, v.index)));
        else
            throw InternalError("realization expressions may only involve base and tower variables");
        acc = acc + RatExpr::of(pd) * dv;
    }
    return acc;
}

RatExpr DeltaGenericType::dhat(const RatExpr& e) const {
    RatExpr dn = dhat_poly(e.num);
    RatExpr dd = dhat_poly(e.den);
    RatExpr num_part = dn * RatExpr::of(e.den) - RatExpr::of(e.num) * dd;
    return RatExpr(num_part.num, num_part.den * (e.den * e.den)).normalized();
}

// requires mu_ held
void DeltaGenericType::extend_to(std::uint32_t k) const {
    while (levels_.size() <= k) {
        std::vector<RatExpr> next;
        next.reserve(n());
        for (auto& e : levels_.back()) next.push_back(dhat(e));
        levels_.push_back(std::move(next));
    }
}

RatExpr DeltaGenericType::coordinate(std::uint32_t i, std::uint32_t k) const {
    if (i < 1 || i > n()) throw InternalError("coordinate index out of range");
    std::lock_guard<std::mutex> lk(mu_);
    extend_to(k);
    return levels_[k][i - 1];
}

bool DeltaGenericType::member(const DiffPolynomial& f) const {
    if (f.n() != n()) throw InternalError("membership query with mismatched coordinate count");
    if (f.field() != field())
        throw FieldMismatchError("membership query over a different ground field");
    std::map<Variable, RatExpr> images;
    for (Variable v : f.body().support())
        if (v.kind == VarKind::Deriv) images.emplace(v, coordinate(v.index, v.order));
    RatExpr val = subst_ratexpr(f.body(), images);
    if (val.num.is_zero()) return true;
    // the numerator vanishes at the generic point iff it lies in I(V) with
    // the tower constants treated as free variables
    std::vector<Variable> amb = x_block(n());
    for (Variable v : val.num.support())
        if (v.kind == VarKind::Tower) amb.push_back(v);
    Polynomial nf =
        reduce_full(val.num, pair_.V.ideal.groebner_basis(), MonomialOrder::grevlex(amb));
    return nf.is_zero();
}

bool DeltaGenericType::decide(const QFFormula& phi) const {
    switch (phi.kind()) {
        case QFFormula::Kind::Atom: return member(DiffPolynomial(n(), phi.atom()));
        case QFFormula::Kind::Not: return !decide(phi.left());
        case QFFormula::Kind::And: return decide(phi.left()) && decide(phi.right());
        case QFFormula::Kind::Or: return decide(phi.left()) || decide(phi.right());
    }
    throw InternalError("unknown formula kind");
}

Ideal DeltaGenericType::relations_ideal(std::uint32_t s) const {
    GroundField f = field();
    std::vector<Variable> keep = x_block(n());
    for (std::uint32_t i = 1; i <= n(); ++i)
        for (std::uint32_t k = 1; k <= s; ++k) keep.push_back(Variable::deriv(i, k));
    std::vector<Variable> amb = keep;
    for (std::uint32_t l = 1; l <= s; ++l)
        for (std::uint32_t j = 1; j <= m(); ++j) amb.push_back(Variable::tower(l, j));

    std::vector<Polynomial> gens = pair_.V.ideal.generators();
    std::vector<Polynomial> dens;
    auto add_den = [&](const Polynomial& d0) {
        Polynomial d = d0.cleared_primitive();
        if (d.is_constant()) return;
        for (auto& h : dens)
            if (h == d) return;
        dens.push_back(d);
    };
    for (std::uint32_t i = 1; i <= n(); ++i)
        for (std::uint32_t k = 1; k <= s; ++k) {
            RatExpr e = coordinate(i, k);
            Polynomial dvar = Polynomial::variable(f, Variable::deriv(i, k));
            gens.push_back((dvar * e.den - e.num).cleared_primitive());
            add_den(e.den);
        }

    Ideal J(f, std::move(amb), std::move(gens));
    if (!dens.empty()) {
        Polynomial sat = Polynomial::constant(f, Rational(1));
        for (auto& d : dens) sat = sat * d;
        J = J.saturate(sat);
    }
    return J.eliminate(keep);
}

} // namespace taugen
