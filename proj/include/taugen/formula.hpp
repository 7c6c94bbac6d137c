#pragma once
// Quantifier-free formulas over the differential term language: boolean
// combinations of equational atoms f = 0. Trees are immutable; subtrees are
// shared by pointer.

#include <memory>
#include <utility>

#include "taugen/polynomial.hpp"

namespace taugen {

class QFFormula {
  public:
    enum class Kind { Atom, Not, And, Or };

    // the atom f = 0
    static QFFormula atom_eq(Polynomial f) {
        QFFormula r;
        r.kind_ = Kind::Atom;
        r.atom_ = std::make_shared<Polynomial>(std::move(f));
        return r;
    }
    static QFFormula negation(QFFormula a) {
        QFFormula r;
        r.kind_ = Kind::Not;
        r.left_ = std::make_shared<QFFormula>(std::move(a));
        return r;
    }
    static QFFormula conj(QFFormula a, QFFormula b) { return combine(Kind::And, std::move(a), std::move(b)); }
    static QFFormula disj(QFFormula a, QFFormula b) { return combine(Kind::Or, std::move(a), std::move(b)); }

    Kind kind() const { return kind_; }
    const Polynomial& atom() const { return *atom_; }          // Kind::Atom
    const QFFormula& left() const { return *left_; }           // Not/And/Or
    const QFFormula& right() const { return *right_; }         // And/Or

    // number of nodes in the tree
    std::size_t size() const {
        switch (kind_) {
            case Kind::Atom: return 1;
            case Kind::Not: return 1 + left_->size();
            default: return 1 + left_->size() + right_->size();
        }
    }

    bool operator==(const QFFormula& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::Atom: return *atom_ == *o.atom_;
            case Kind::Not: return *left_ == *o.left_;
            default: return *left_ == *o.left_ && *right_ == *o.right_;
        }
    }
    bool operator!=(const QFFormula& o) const { return !(*this == o); }

  private:
    static QFFormula combine(Kind k, QFFormula a, QFFormula b) {
        QFFormula r;
        r.kind_ = k;
        r.left_ = std::make_shared<QFFormula>(std::move(a));
        r.right_ = std::make_shared<QFFormula>(std::move(b));
        return r;
    }

    Kind kind_ = Kind::Atom;
    std::shared_ptr<const Polynomial> atom_;
    std::shared_ptr<const QFFormula> left_, right_;
};

} // namespace taugen
