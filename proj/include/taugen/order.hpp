#pragma once
// Monomial orders over a declared variable sequence. The sequence lists
// variables by decreasing significance (first = greatest); block(k) compares
// the first k sequence variables (the elimination block) before the rest,
// grevlex inside each block.

#include <string>
#include <vector>

#include "taugen/monomial.hpp"

namespace taugen {

enum class OrderKind { Lex, Grevlex, Block };

class MonomialOrder {
  public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, std::vector<Variable> sequence, std::size_t block = 0)
        : kind_(kind), seq_(std::move(sequence)), block_(block) {}

    // default grevlex for an ambient listed in increasing global order
    static MonomialOrder grevlex(const std::vector<Variable>& ambient_increasing) {
        return MonomialOrder(OrderKind::Grevlex, reversed(ambient_increasing));
    }
    static MonomialOrder lex(const std::vector<Variable>& ambient_increasing) {
        return MonomialOrder(OrderKind::Lex, reversed(ambient_increasing));
    }
    // elimination order: `eliminate` first (greater block), `keep` after
    static MonomialOrder block(const std::vector<Variable>& eliminate,
                               const std::vector<Variable>& keep) {
        std::vector<Variable> seq = reversed(eliminate);
        for (auto v : reversed(keep)) seq.push_back(v);
        return MonomialOrder(OrderKind::Block, std::move(seq), eliminate.size());
    }

    OrderKind kind() const { return kind_; }
    const std::vector<Variable>& sequence() const { return seq_; }
    std::size_t block_size() const { return block_; }

    // -1 / 0 / +1 with a > b meaning a is the greater monomial
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // deterministic cache key
    std::string cache_key() const {
        std::string s;
        switch (kind_) {
            case OrderKind::Lex: s = "lex"; break;
            case OrderKind::Grevlex: s = "grevlex"; break;
            case OrderKind::Block: s = "block:" + std::to_string(block_); break;
        }
        for (auto& v : seq_) s += "," + v.name();
        return s;
    }

  private:
    static std::vector<Variable> reversed(const std::vector<Variable>& v) {
        return std::vector<Variable>(v.rbegin(), v.rend());
    }

    // grevlex on a contiguous slice [lo, hi) of the sequence
    int grevlex_slice(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

    OrderKind kind_ = OrderKind::Grevlex;
    std::vector<Variable> seq_;
    std::size_t block_ = 0;
};

inline int MonomialOrder::grevlex_slice(const Monomial& a, const Monomial& b,
                                        std::size_t lo, std::size_t hi) const {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(seq_[i]);
        db += b.exponent(seq_[i]);
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse scan from the least variable; smaller exponent there = greater
    for (std::size_t i = hi; i-- > lo;) {
        std::uint32_t ea = a.exponent(seq_[i]), eb = b.exponent(seq_[i]);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

inline int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case OrderKind::Lex:
            for (auto& v : seq_) {
                std::uint32_t ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case OrderKind::Grevlex:
            return grevlex_slice(a, b, 0, seq_.size());
        case OrderKind::Block: {
            int c = grevlex_slice(a, b, 0, block_);
            if (c != 0) return c;
            return grevlex_slice(a, b, block_, seq_.size());
        }
    }
    throw InternalError("unknown order kind");
}

// Canonical display order: pure lex over the global variable order with the
// greater variable more significant. Independent of any ambient declaration,
// so printed forms are stable across modules.
inline bool display_greater(const Monomial& a, const Monomial& b) {
    // collect the union of support, scan from the greatest variable down
    auto ia = a.entries().rbegin(), ea = a.entries().rend();
    auto ib = b.entries().rbegin(), eb = b.entries().rend();
    while (ia != ea || ib != eb) {
        if (ib == eb) return true;           // a has a variable b lacks at the top
        if (ia == ea) return false;
        if (ib->first < ia->first) return true;   // a's top variable is greater
        if (ia->first < ib->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia; ++ib;
    }
    return false;
}

} // namespace taugen
