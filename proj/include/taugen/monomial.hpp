#pragma once
// Power products as sorted (variable, exponent) vectors; exponents are
// strictly positive, so the empty vector is the monomial 1.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "taugen/variable.hpp"

namespace taugen {

class Monomial {
  public:
    using Entry = std::pair<Variable, std::uint32_t>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(Variable v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.e_.push_back({v, e});
        return m;
    }

    bool is_one() const { return e_.empty(); }
    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (auto& [v, e] : e_) d += e;
        return d;
    }
    std::uint32_t exponent(Variable v) const {
        for (auto& [w, e] : e_)
            if (w == v) return e;
        return 0;
    }
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() || b != o.e_.end()) {
            if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) r.e_.push_back(*a++);
            else if (a == e_.end() || b->first < a->first) r.e_.push_back(*b++);
            else {
                r.e_.push_back({a->first, a->second + b->second});
                ++a; ++b;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        auto b = o.e_.begin();
        for (auto& [v, e] : e_) {
            while (b != o.e_.end() && b->first < v) ++b;
            if (b == o.e_.end() || !(b->first == v) || b->second < e) return false;
        }
        return true;
    }

    // *this / d, assuming d.divides(*this)
    Monomial divide_by(const Monomial& d) const {
        Monomial r;
        auto b = d.e_.begin();
        for (auto& [v, e] : e_) {
            std::uint32_t sub = 0;
            while (b != d.e_.end() && b->first < v) ++b;
            if (b != d.e_.end() && b->first == v) sub = b->second;
            if (sub > e) throw InternalError("Monomial::divide_by: not divisible");
            if (e > sub) r.e_.push_back({v, e - sub});
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto i = a.e_.begin(), j = b.e_.begin();
        while (i != a.e_.end() || j != b.e_.end()) {
            if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first)) r.e_.push_back(*i++);
            else if (i == a.e_.end() || j->first < i->first) r.e_.push_back(*j++);
            else {
                r.e_.push_back({i->first, std::max(i->second, j->second)});
                ++i; ++j;
            }
        }
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        auto b = o.e_.begin();
        for (auto& [v, e] : e_) {
            while (b != o.e_.end() && b->first < v) ++b;
            if (b != o.e_.end() && b->first == v) return false;
        }
        return true;
    }

    // exponents restricted to a predicate over variables
    template <class Pred>
    Monomial filter(Pred keep) const {
        Monomial r;
        for (auto& [v, e] : e_)
            if (keep(v)) r.e_.push_back({v, e});
        return r;
    }

    template <class Pred>
    bool supported_on(Pred keep) const {
        for (auto& [v, e] : e_)
            if (!keep(v)) return false;
        return true;
    }

    // structural comparison (container key); NOT a monomial order
    auto operator<=>(const Monomial& o) const = default;

  private:
    std::vector<Entry> e_; // sorted by variable, exponents > 0
};

} // namespace taugen
