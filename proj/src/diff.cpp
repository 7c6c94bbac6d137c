#include "taugen/diff.hpp"

#include <algorithm>

namespace taugen {

DiffPolynomial::DiffPolynomial(std::uint32_t n, Polynomial body)
    : n_(n), body_(std::move(body)) {
    for (auto v : body_.support()) {
        bool ok = (v.kind == VarKind::Base || v.kind == VarKind::Deriv) && v.index >= 1 &&
                  v.index <= n_;
        if (!ok)
            throw InternalError("differential polynomial uses a non-derivative variable: " +
                                v.name());
    }
}

std::uint32_t DiffPolynomial::order() const {
    std::uint32_t r = 0;
    for (auto v : body_.support())
        if (v.kind == VarKind::Deriv) r = std::max(r, v.order);
    return r;
}

Polynomial formal_derivative_body(const Polynomial& body) {
    Polynomial out = body.coefficient_derivation();
    for (auto v : body.support()) {
        if (v.kind != VarKind::Base && v.kind != VarKind::Deriv) continue;
        std::uint32_t j = v.kind == VarKind::Base ? 0 : v.order;
        Variable next = Variable::deriv(v.index, j + 1);
        out = out + body.partial_derivative(v) * Polynomial::variable(body.field(), next);
    }
    return out;
}

DiffPolynomial formal_derivative(const DiffPolynomial& f) {
    return DiffPolynomial(f.n(), formal_derivative_body(f.body()));
}

namespace {

// orderly ranking on derivative variables: order first, then coordinate index
bool rank_below(Variable a, Variable b) {
    std::uint32_t oa = a.kind == VarKind::Base ? 0 : a.order;
    std::uint32_t ob = b.kind == VarKind::Base ? 0 : b.order;
    if (oa != ob) return oa < ob;
    return a.index < b.index;
}

} // namespace

DiffSystem::DiffSystem(GroundField field, std::uint32_t n,
                       std::vector<std::pair<Variable, Polynomial>> equations)
    : field_(field), n_(n), equations_(std::move(equations)) {
    if (n_ == 0) throw NotSolvedFormError("a system needs at least one coordinate");
    std::vector<std::uint32_t> leader(n_ + 1, 0);
    for (auto& [v, rhs] : equations_) {
        if (v.kind != VarKind::Deriv || v.order < 1 || v.index < 1 || v.index > n_)
            throw NotSolvedFormError("equation leader must be x_i^(k) with k >= 1 and i <= n");
        if (leader[v.index] != 0)
            throw NotSolvedFormError("coordinate x" + std::to_string(v.index) +
                                     " has two equations");
        if (rhs.field() != field_)
            throw NotSolvedFormError("equation right side over the wrong ground field");
        leader[v.index] = v.order;
    }
    for (auto& [v, rhs] : equations_) {
        for (auto w : rhs.support()) {
            if (w.kind != VarKind::Base && w.kind != VarKind::Deriv)
                throw NotSolvedFormError("equation right side uses " + w.name());
            if (w.index < 1 || w.index > n_)
                throw NotSolvedFormError("coordinate index out of range in " + w.name());
            if (!rank_below(w, v))
                throw NotSolvedFormError("right side of " + v.name() + " = ... involves " +
                                         w.name() + ", not below the leader");
            std::uint32_t k = leader[w.index];
            std::uint32_t wo = w.kind == VarKind::Base ? 0 : w.order;
            if (k != 0 && wo >= k)
                throw NotSolvedFormError("right side of " + v.name() + " = ... involves " +
                                         w.name() + ", a leader or higher derivative");
        }
    }
    std::sort(equations_.begin(), equations_.end(),
              [](const auto& a, const auto& b) { return a.first.index < b.first.index; });
}

std::uint32_t DiffSystem::leader_order(std::uint32_t i) const {
    for (auto& [v, rhs] : equations_)
        if (v.index == i) return v.order;
    return 0;
}

std::uint32_t DiffSystem::max_leader_order() const {
    std::uint32_t r = 0;
    for (auto& [v, rhs] : equations_) r = std::max(r, v.order);
    return r;
}

namespace {

Ideal twisted_tangent(const Ideal& V, std::uint32_t n, bool with_partial) {
    if (V.ambient() != x_block(n))
        throw InternalError("tangent/prolongation input must live over x1..xn");
    if (!V.is_proper()) throw UnitIdealError("prolongation of the unit ideal");
    GroundField field = V.field();
    std::vector<Polynomial> gens;
    for (const Polynomial& p : V.groebner_basis()) {
        gens.push_back(p);
        Polynomial lin = with_partial ? p.coefficient_derivation() : Polynomial(field);
        for (std::uint32_t i = 1; i <= n; ++i)
            lin = lin +
                  p.partial_derivative(Variable::x(i)) * Polynomial::variable(field, Variable::u(i));
        if (!lin.is_zero()) gens.push_back(lin);
    }
    return Ideal(field, xu_block(n), gens);
}

} // namespace

Ideal tangent_ideal(const Ideal& V, std::uint32_t n) { return twisted_tangent(V, n, false); }

Ideal prolongation_ideal(const Ideal& V, std::uint32_t n) { return twisted_tangent(V, n, true); }

} // namespace taugen
