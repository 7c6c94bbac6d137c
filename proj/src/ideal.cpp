#include "taugen/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "taugen/io.hpp"

namespace taugen {

namespace {

using Clock = std::chrono::steady_clock;

// ----- order-sorted term lists (engine working form) -----

struct OPoly {
    std::vector<Polynomial::Term> t; // descending under the active order
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
    OPoly r;
    r.t.assign(p.terms().begin(), p.terms().end());
    std::sort(r.t.begin(), r.t.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.first, b.first);
    });
    return r;
}

Polynomial from_opoly(GroundField f, const OPoly& p) {
    Polynomial acc(f);
    for (auto& [m, c] : p.t) acc = acc + Polynomial::term(f, c, m);
    return acc;
}

// f - c * x^m * g, all lists order-sorted
OPoly sub_scaled(const OPoly& f, const GroundElement& c, const Monomial& m, const OPoly& g,
                 const MonomialOrder& ord) {
    OPoly r;
    r.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            r.t.push_back(f.t[i++]);
            continue;
        }
        Monomial gm = g.t[j].first * m;
        if (i == f.t.size()) {
            r.t.push_back({gm, -(c * g.t[j].second)});
            ++j;
            continue;
        }
        int cmp = ord.compare(f.t[i].first, gm);
        if (cmp > 0) {
            r.t.push_back(f.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({gm, -(c * g.t[j].second)});
            ++j;
        } else {
            GroundElement nc = f.t[i].second - c * g.t[j].second;
            if (!nc.is_zero()) r.t.push_back({f.t[i].first, nc});
            ++i; ++j;
        }
    }
    return r;
}

// a*f - b * x^m * g  (pseudo-reduction step; keeps coefficients denominator-free)
OPoly cross_sub(const GroundElement& a, const OPoly& f, const GroundElement& b,
                const Monomial& m, const OPoly& g, const MonomialOrder& ord) {
    OPoly fa;
    fa.t.reserve(f.t.size());
    for (auto& [mm, cc] : f.t) fa.t.push_back({mm, cc * a});
    return sub_scaled(fa, b, m, g, ord);
}

// gcd of denominator-free coefficients: integer gcd over Q, monic poly gcd over Q(t)
GroundElement coeff_gcd(const GroundElement& a, const GroundElement& b) {
    if (a.field() == GroundField::Q) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.rational_value().get_num().get_mpz_t(),
                b.rational_value().get_num().get_mpz_t());
        return GroundElement(a.field(), Rational(g));
    }
    UnivPoly g = univ_gcd(a.num(), b.num());
    return GroundElement(a.field(), g, UnivPoly(Rational(1)));
}

struct Budget {
    const ResourceLimits& limits;
    std::uint64_t steps = 0;
    Clock::time_point start = Clock::now();

    void tick(std::uint64_t n = 1) {
        steps += n;
        if (steps > limits.max_reduction_steps)
            throw ResourceLimitError("reduction step budget exceeded");
        if (limits.use_wall_clock && (steps & 0x3ff) == 0) {
            double el = std::chrono::duration<double>(Clock::now() - start).count();
            if (el > limits.max_seconds)
                throw ResourceLimitError("basis computation timed out");
        }
    }
};

Polynomial clear_primitive(const Polynomial& p) { return p.cleared_primitive(); }

// full pseudo-reduction of f by basis; result is cleared-primitive
OPoly reduce_pseudo(OPoly f, const std::vector<OPoly>& basis, GroundField field,
                    const MonomialOrder& ord, Budget& budget) {
    OPoly out;
    std::uint64_t since_clear = 0;
    while (!f.t.empty()) {
        bool reduced = false;
        for (auto& g : basis) {
            if (g.t.empty()) continue;
            if (g.t[0].first.divides(f.t[0].first)) {
                GroundElement gc = coeff_gcd(f.t[0].second, g.t[0].second);
                GroundElement a = g.t[0].second / gc;
                GroundElement b = f.t[0].second / gc;
                Monomial m = f.t[0].first.divide_by(g.t[0].first);
                // scale the already-emitted tail as well to keep one consistent scalar
                for (auto& [mm, cc] : out.t) cc = cc * a;
                f = cross_sub(a, f, b, m, g, ord);
                budget.tick();
                reduced = true;
                if (++since_clear >= 16) {
                    // re-reduce the accumulated content now and then
                    OPoly whole = out;
                    whole.t.insert(whole.t.end(), f.t.begin(), f.t.end());
                    Polynomial cleared = clear_primitive(from_opoly(field, whole));
                    OPoly w2 = to_opoly(cleared, ord);
                    std::size_t head = out.t.size();
                    out.t.assign(w2.t.begin(), w2.t.begin() + std::min(head, w2.t.size()));
                    f.t.assign(w2.t.begin() + std::min(head, w2.t.size()), w2.t.end());
                    since_clear = 0;
                }
                break;
            }
        }
        if (!reduced) {
            out.t.push_back(f.t[0]);
            f.t.erase(f.t.begin());
        }
    }
    OPoly cleared = to_opoly(clear_primitive(from_opoly(field, out)), ord);
    return cleared;
}

} // namespace

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, std::uint64_t* steps) {
    std::vector<OPoly> ob;
    ob.reserve(basis.size());
    for (auto& b : basis) ob.push_back(to_opoly(b, ord));
    OPoly work = to_opoly(f, ord);
    OPoly out;
    std::uint64_t local = 0;
    while (!work.t.empty()) {
        bool reduced = false;
        for (auto& g : ob) {
            if (g.t.empty()) continue;
            if (g.t[0].first.divides(work.t[0].first)) {
                GroundElement c = work.t[0].second / g.t[0].second;
                Monomial m = work.t[0].first.divide_by(g.t[0].first);
                work = sub_scaled(work, c, m, g, ord);
                ++local;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.t.push_back(work.t[0]);
            work.t.erase(work.t.begin());
        }
    }
    if (steps) *steps += local;
    return from_opoly(f.field(), out);
}

GBReport buchberger(GroundField field, const std::vector<Polynomial>& gens,
                    const MonomialOrder& ord, const ResourceLimits& limits) {
    auto t0 = Clock::now();
    Budget budget{limits};
    GBReport rep;

    std::vector<OPoly> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(to_opoly(clear_primitive(g), ord));
    }

    struct PairRec {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const PairRec& a, const PairRec& b) {
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0; // normal selection: smallest lcm first
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairRec, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> treated;

    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            ++rep.pair_count;
            const Monomial &mi = basis[i].t[0].first, &mk = basis[k].t[0].first;
            if (mi.coprime_with(mk)) {
                treated.insert({i, k}); // product criterion: S-poly reduces to zero
                continue;
            }
            queue.insert({Monomial::lcm(mi, mk), i, k});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        PairRec pr = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({pr.i, pr.j});

        // chain criterion: some k with LM_k | lcm and both (i,k), (j,k) treated
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].t[0].first.divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        const OPoly &f = basis[pr.i], &g = basis[pr.j];
        GroundElement gc = coeff_gcd(f.t[0].second, g.t[0].second);
        Monomial mf = pr.lcm.divide_by(f.t[0].first);
        OPoly fshift;
        fshift.t.reserve(f.t.size());
        for (auto& [mm, cc] : f.t) fshift.t.push_back({mm * mf, cc});
        OPoly s = cross_sub(g.t[0].second / gc, fshift, f.t[0].second / gc,
                            pr.lcm.divide_by(g.t[0].first), g, ord);
        OPoly red = reduce_pseudo(std::move(s), basis, field, ord, budget);
        rep.reduction_count = budget.steps;
        if (!red.t.empty()) {
            basis.push_back(red);
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize
    std::vector<OPoly> minimal;
    {
        std::vector<std::size_t> order_idx(basis.size());
        for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
            int c = ord.compare(basis[a].t[0].first, basis[b].t[0].first);
            if (c != 0) return c < 0;
            return a < b;
        });
        for (std::size_t idx : order_idx) {
            const Monomial& lm = basis[idx].t[0].first;
            bool dominated = false;
            for (auto& k : minimal)
                if (k.t[0].first.divides(lm)) { dominated = true; break; }
            if (!dominated) minimal.push_back(basis[idx]);
        }
    }

    // tail-reduce against the minimal set and make monic
    std::vector<Polynomial> plain;
    plain.reserve(minimal.size());
    for (auto& g : minimal) plain.push_back(from_opoly(field, g));
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < plain.size(); ++j)
            if (j != i) others.push_back(plain[j]);
        Polynomial r = reduce_full(plain[i], others, ord, &rep.reduction_count);
        const auto& lt = r.leading_term(ord);
        reduced.push_back(r.scaled(lt.second.inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    rep.basis = std::move(reduced);
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

// ----- Ideal -----

struct Ideal::State {
    GroundField field = GroundField::Q;
    std::vector<Variable> ambient;
    std::vector<Polynomial> gens;
    mutable std::map<std::string, std::vector<Polynomial>> cache;
    mutable std::mutex mutex;
};

Ideal::Ideal(GroundField field, std::vector<Variable> ambient, std::vector<Polynomial> generators)
    : st_(std::make_shared<State>()) {
    st_->field = field;
    st_->ambient = std::move(ambient);
    if (!std::is_sorted(st_->ambient.begin(), st_->ambient.end()))
        throw InternalError("ideal ambient must be listed in increasing variable order");
    for (auto& g : generators) {
        if (g.field() != field) throw FieldMismatchError("generator over the wrong ground field");
        for (auto v : g.support())
            if (!std::binary_search(st_->ambient.begin(), st_->ambient.end(), v))
                throw InternalError("generator uses a variable outside the ambient: " + v.name());
        if (!g.is_zero()) st_->gens.push_back(g);
    }
}

GroundField Ideal::field() const { return st_->field; }
const std::vector<Variable>& Ideal::ambient() const { return st_->ambient; }
const std::vector<Polynomial>& Ideal::generators() const { return st_->gens; }

MonomialOrder Ideal::default_order() const { return MonomialOrder::grevlex(st_->ambient); }

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
    std::string key = ord.cache_key();
    std::lock_guard<std::mutex> lock(st_->mutex);
    auto it = st_->cache.find(key);
    if (it != st_->cache.end()) return it->second;
    GBReport rep = buchberger(st_->field, st_->gens, ord, global_limits());
    auto [ins, fresh] = st_->cache.emplace(std::move(key), std::move(rep.basis));
    (void)fresh;
    return ins->second;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    return groebner_basis(default_order());
}

GBReport Ideal::groebner_report(const MonomialOrder& ord, const ResourceLimits& limits) const {
    return buchberger(st_->field, st_->gens, ord, limits);
}

Polynomial Ideal::normal_form(const Polynomial& f, const MonomialOrder& ord) const {
    return reduce_full(f, groebner_basis(ord), ord);
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    return normal_form(f, default_order());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::is_zero_ideal() const { return groebner_basis().empty(); }

bool Ideal::is_proper() const {
    const auto& gb = groebner_basis();
    return gb.empty() || !gb[0].is_constant();
}

Ideal Ideal::eliminate(const std::vector<Variable>& keep) const {
    std::vector<Variable> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    std::vector<Variable> eliminated;
    for (auto v : st_->ambient)
        if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), v))
            eliminated.push_back(v);
    for (auto v : keep_sorted)
        if (!std::binary_search(st_->ambient.begin(), st_->ambient.end(), v))
            throw InternalError("eliminate: keep variable outside the ambient");
    MonomialOrder ord = MonomialOrder::block(eliminated, keep_sorted);
    const auto& gb = groebner_basis(ord);
    std::vector<Polynomial> kept;
    for (auto& g : gb) {
        bool ok = true;
        for (auto v : g.support())
            if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), v)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(g);
    }
    return Ideal(st_->field, keep_sorted, kept);
}

Ideal Ideal::saturate(const Polynomial& f) const {
    if (f.is_zero()) throw DivisionByZeroError("saturation by the zero polynomial");
    std::uint32_t aux_index = 1;
    for (auto v : st_->ambient)
        if (v.kind == VarKind::Aux) aux_index = std::max(aux_index, v.index + 1);
    for (auto v : f.support())
        if (v.kind == VarKind::Aux) aux_index = std::max(aux_index, v.index + 1);
    Variable z = Variable::aux(aux_index);
    std::vector<Variable> big = st_->ambient;
    big.push_back(z);
    std::sort(big.begin(), big.end());
    std::vector<Polynomial> gens = st_->gens;
    Polynomial one = Polynomial::constant(st_->field, Rational(1));
    gens.push_back(one - Polynomial::variable(st_->field, z) * f);
    Ideal extended(st_->field, big, gens);
    Ideal cut = extended.eliminate(st_->ambient);
    return Ideal(st_->field, st_->ambient, cut.generators());
}

std::pair<int, std::vector<Variable>> Ideal::dimension() const {
    if (!is_proper()) throw UnitIdealError("dimension of the unit ideal");
    const auto& gb = groebner_basis();
    MonomialOrder ord = default_order();
    std::vector<Monomial> lms;
    for (auto& g : gb) lms.push_back(g.leading_term(ord).first);
    const std::vector<Variable>& vars = st_->ambient;
    const std::size_t n = vars.size();

    auto independent = [&](const std::vector<std::size_t>& subset) {
        // subset is independent iff no leading monomial is supported inside it
        for (auto& m : lms) {
            bool inside = true;
            for (auto& [v, e] : m.entries()) {
                bool member = false;
                for (auto idx : subset)
                    if (vars[idx] == v) { member = true; break; }
                if (!member) { inside = false; break; }
            }
            if (inside && !m.is_one()) return false;
        }
        return true;
    };

    for (std::size_t size = n + 1; size-- > 0;) {
        // lexicographically first independent subset of this cardinality
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (independent(idx)) {
                std::vector<Variable> out;
                for (auto i : idx) out.push_back(vars[i]);
                return {static_cast<int>(size), out};
            }
            // next combination
            std::size_t i = size;
            while (i-- > 0) {
                if (idx[i] != i + n - size) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
            if (size == 0) break;
        }
    next_size:;
    }
    throw InternalError("dimension search exhausted"); // the empty set is always independent
}

bool Ideal::equals(const Ideal& o) const {
    if (st_->field != o.st_->field) throw FieldMismatchError("comparing ideals over different fields");
    if (st_->ambient != o.st_->ambient)
        throw InternalError("ideal_equal requires the same ambient context");
    const auto& a = groebner_basis();
    const auto& b = o.groebner_basis();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string Ideal::basis_key() const {
    std::ostringstream os;
    os << field_name(st_->field) << "[";
    for (std::size_t i = 0; i < st_->ambient.size(); ++i)
        os << (i ? "," : "") << st_->ambient[i].name();
    os << "]:";
    const auto& gb = groebner_basis();
    for (std::size_t i = 0; i < gb.size(); ++i)
        os << (i ? ";" : "") << print_poly(gb[i].cleared_primitive(), PrintStyle::Compact);
    return os.str();
}

} // namespace taugen
