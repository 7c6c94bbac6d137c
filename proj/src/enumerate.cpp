// Canonical enumeration of good pairs and formulas.
//
// A recipe is a depth r <= r_max together with a base variety from
// {affine space, certified-irreducible hypersurface} over the stacked
// coordinates x1..x_{n*r} and a fiber family from {graph, bundle} for the top
// derivative block; the lower blocks are always pinned by the stacking
// identities u_l = x_{l+n}.  Recipes are keyed by a textual encoding; cells
// are visited by (height, degree) and inside a cell by length-lex on the
// encoding, which makes the stream recursive and stable under bound growth.

#include "taugen/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "taugen/factor.hpp"
#include "taugen/generic_type.hpp"
#include "taugen/io.hpp"

namespace taugen {

namespace {

constexpr std::size_t kCellCap = 4'000'000; // recipes per cell before giving up

std::string enc_poly(const Polynomial& p) { return print_poly(p, PrintStyle::Compact); }

bool enc_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// every exponent assignment of total degree <= d over vars
std::vector<Monomial> monomials_up_to(const std::vector<Variable>& vars, std::uint32_t d) {
    std::vector<Monomial> out{Monomial::one()};
    for (Variable v : vars) {
        std::vector<Monomial> next;
        for (auto& m : out)
            for (std::uint32_t e = 0; m.total_degree() + e <= d; ++e)
                next.push_back(e == 0 ? m : m * Monomial::var(v, e));
        out = std::move(next);
    }
    return out;
}

// all polynomials with coefficients drawn from `coeffs`, degree <= d
std::vector<Polynomial> poly_pool(const std::vector<Variable>& vars, std::uint32_t d,
                                  const std::vector<Rational>& coeffs) {
    std::vector<Monomial> monos = monomials_up_to(vars, d);
    std::size_t total = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        total *= coeffs.size();
        if (total > kCellCap)
            throw ResourceLimitError("enumeration cell is too large to materialize");
    }
    std::vector<Polynomial> out;
    out.reserve(total);
    std::vector<std::size_t> idx(monos.size(), 0);
    while (true) {
        Polynomial p = Polynomial::zero(GroundField::Q);
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (coeffs[idx[i]] != 0)
                p = p + Polynomial::term(GroundField::Q,
                                         GroundElement(GroundField::Q, coeffs[idx[i]]), monos[i]);
        out.push_back(std::move(p));
        std::size_t k = monos.size();
        while (k > 0) {
            if (++idx[k - 1] < coeffs.size()) break;
            idx[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

std::vector<Rational> rational_coeffs(std::uint32_t h) {
    std::vector<Rational> out{Rational(0)};
    for (long q = 1; q <= static_cast<long>(h); ++q)
        for (long p = -static_cast<long>(h); p <= static_cast<long>(h); ++p) {
            if (p == 0) continue;
            Rational r = Rational(p) / Rational(q);
            if (rational_height(r) != Integer(std::max(std::labs(p), q))) continue; // not lowest terms
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    return out;
}

std::vector<Rational> integer_coeffs(std::uint32_t h) {
    std::vector<Rational> out;
    for (long v = -static_cast<long>(h); v <= static_cast<long>(h); ++v) out.push_back(Rational(v));
    return out;
}

bool display_lead_positive(const Polynomial& p) {
    return !p.is_zero() && p.terms().front().second.num().lc() > 0;
}

// canonical certified-irreducible hypersurface generators
std::vector<Polynomial> hyp_pool(const std::vector<Variable>& vars, std::uint32_t d,
                                 std::uint32_t h) {
    std::vector<Polynomial> out;
    for (auto& p : poly_pool(vars, d, integer_coeffs(h))) {
        if (p.total_degree() == 0) continue; // zero or a constant
        if (!display_lead_positive(p)) continue;
        if (!(p == p.cleared_primitive())) continue;
        if (p.total_degree() > 1 && certify_irreducible(p, 0) != Irreducibility::Certified)
            continue;
        out.push_back(p);
    }
    return out;
}

struct Recipe {
    std::uint32_t r = 1;
    bool v_affine = true;
    Polynomial v_gen;
    bool w_graph = true;
    std::vector<Polynomial> top;               // graph images for the top block
    std::vector<Polynomial> s0;                // bundle section for the top block
    std::vector<std::vector<Polynomial>> dirs; // bundle directions, top block
    std::string enc;
};

std::string encode(const Recipe& rec) {
    std::string s = "r" + std::to_string(rec.r) + ";V=";
    s += rec.v_affine ? "affine" : "hyp(" + enc_poly(rec.v_gen) + ")";
    s += ";W=";
    auto join = [](const std::vector<Polynomial>& ps) {
        std::string t;
        for (std::size_t i = 0; i < ps.size(); ++i) t += (i ? "|" : "") + enc_poly(ps[i]);
        return t;
    };
    if (rec.w_graph) {
        s += "graph(" + join(rec.top) + ")";
    } else {
        s += "bundle(" + join(rec.s0);
        for (auto& row : rec.dirs) s += "/" + join(row);
        s += ")";
    }
    return s;
}

struct CellStats {
    std::uint32_t degree = 0;
    Integer height = 1;
    void add(const Polynomial& p) {
        degree = std::max(degree, p.total_degree());
        Integer ph = p.height();
        if (ph > height) height = ph;
    }
};

bool in_cell(const CellStats& st, std::uint32_t h, std::uint32_t d) {
    return st.height == static_cast<unsigned long>(h) && std::max(1u, st.degree) == d;
}

// prebuilt pools for one stacking depth: polynomials with their encodings and
// cell statistics, so a scan over the combo space never touches GMP state
struct PoolSet {
    std::vector<Polynomial> pool;
    std::vector<std::string> pool_enc;
    std::vector<CellStats> pool_st;
    std::vector<Polynomial> hyps;
    std::vector<std::string> hyp_enc;
    std::vector<CellStats> hyp_st;
    std::vector<std::vector<std::size_t>> rows; // nonzero tuples of pool indices
    std::vector<std::string> row_enc;
    std::vector<CellStats> row_st;
};

CellStats stat_of(const Polynomial& p) {
    CellStats st;
    st.add(p);
    return st;
}

void stat_join(CellStats& into, const CellStats& other) {
    into.degree = std::max(into.degree, other.degree);
    if (other.height > into.height) into.height = other.height;
}

PoolSet build_pools(const EnumerationBounds& b, std::uint32_t r, std::uint32_t h,
                    std::uint32_t d) {
    PoolSet ps;
    const std::uint32_t N = b.n * r;
    std::vector<Variable> vars = x_block(N);
    ps.pool = poly_pool(vars, d, rational_coeffs(h));
    for (auto& p : ps.pool) {
        ps.pool_enc.push_back(enc_poly(p));
        ps.pool_st.push_back(stat_of(p));
    }
    ps.hyps = hyp_pool(vars, d, h);
    for (auto& p : ps.hyps) {
        ps.hyp_enc.push_back(enc_poly(p));
        ps.hyp_st.push_back(stat_of(p));
    }
    // nonzero direction rows over the pool, sorted by their encoding
    double tuples = 1.0;
    for (std::uint32_t i = 0; i < b.n; ++i) tuples *= static_cast<double>(ps.pool.size());
    if (tuples > static_cast<double>(kCellCap))
        throw ResourceLimitError("enumeration cell is too large to scan");
    std::vector<std::size_t> idx(b.n, 0);
    while (true) {
        bool nonzero = false;
        for (std::size_t i : idx)
            if (!ps.pool[i].is_zero()) nonzero = true;
        if (nonzero) ps.rows.push_back(idx);
        std::size_t k = idx.size();
        while (k > 0) {
            if (++idx[k - 1] < ps.pool.size()) break;
            idx[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    auto enc_of_row = [&](const std::vector<std::size_t>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "|" : "") + ps.pool_enc[row[i]];
        return s;
    };
    std::sort(ps.rows.begin(), ps.rows.end(), [&](const auto& a, const auto& c) {
        return enc_less(enc_of_row(a), enc_of_row(c));
    });
    for (auto& row : ps.rows) {
        ps.row_enc.push_back(enc_of_row(row));
        CellStats st;
        for (std::size_t i : row) stat_join(st, ps.pool_st[i]);
        ps.row_st.push_back(st);
    }
    return ps;
}

// a candidate identified by indices into a PoolSet, plus its encoding
struct ComboKey {
    std::uint32_t r = 1;
    std::int32_t v = -1; // -1 affine, else index into hyps
    bool graph = true;
    std::vector<std::size_t> tuple; // pool indices: graph images or bundle section
    std::vector<std::size_t> rows;  // bundle only: strictly increasing row indices
    std::string enc;
};

constexpr std::size_t kBatch = 4096; // candidates selected per scan over a cell

// the kBatch length-lex-smallest in-cell candidates whose encoding is strictly
// above `after` (all of them when `after` is null), plus whether that is all
// of them; one scan never materializes more than kBatch recipes
struct CellBatch {
    std::vector<Recipe> recipes;
    bool exhausted = true;
};

CellBatch scan_cell(const EnumerationBounds& b, std::uint32_t h, std::uint32_t d,
                    std::map<std::uint32_t, PoolSet>& pools, const std::string* after) {
    // bounded max-heap of the current best candidates, largest encoding on top
    std::vector<ComboKey> heap;
    auto heap_less = [](const ComboKey& a, const ComboKey& c) { return enc_less(a.enc, c.enc); };
    std::uint64_t seen = 0; // in-cell candidates above the watermark
    std::string buf;
    auto consider = [&](std::uint32_t r, std::int32_t v, bool graph,
                        const std::vector<std::size_t>& tuple,
                        const std::vector<std::size_t>& rows) {
        if (after && !enc_less(*after, buf)) return; // already processed
        ++seen;
        if (heap.size() == kBatch && !enc_less(buf, heap.front().enc)) return;
        ComboKey ck;
        ck.r = r;
        ck.v = v;
        ck.graph = graph;
        ck.tuple = tuple;
        ck.rows = rows;
        ck.enc = buf;
        if (heap.size() == kBatch) {
            std::pop_heap(heap.begin(), heap.end(), heap_less);
            heap.back() = std::move(ck);
        } else {
            heap.push_back(std::move(ck));
        }
        std::push_heap(heap.begin(), heap.end(), heap_less);
    };
    for (std::uint32_t r = 1; r <= b.r_max; ++r) {
        auto pit = pools.find(r);
        if (pit == pools.end()) pit = pools.emplace(r, build_pools(b, r, h, d)).first;
        const PoolSet& ps = pit->second;
        // v = -1 is affine space; v >= 0 indexes the hypersurface pool
        for (std::int32_t v = -1; v < static_cast<std::int32_t>(ps.hyps.size()); ++v) {
            CellStats vstat;
            if (v >= 0) vstat = ps.hyp_st[v];
            std::string head = "r" + std::to_string(r) + ";V=" +
                               (v < 0 ? std::string("affine") : "hyp(" + ps.hyp_enc[v] + ")") +
                               ";W=";
            std::vector<std::size_t> tuple(b.n, 0);
            auto each_tuple = [&](const std::function<void()>& f) {
                std::fill(tuple.begin(), tuple.end(), 0);
                while (true) {
                    f();
                    std::size_t k = tuple.size();
                    while (k > 0) {
                        if (++tuple[k - 1] < ps.pool.size()) break;
                        tuple[k - 1] = 0;
                        --k;
                    }
                    if (k == 0) break;
                }
            };
            // graphs
            each_tuple([&]() {
                CellStats st = vstat;
                for (std::size_t i : tuple) stat_join(st, ps.pool_st[i]);
                if (!in_cell(st, h, d)) return;
                buf = head;
                buf += "graph(";
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    if (i) buf += '|';
                    buf += ps.pool_enc[tuple[i]];
                }
                buf += ')';
                consider(r, v, true, tuple, {});
            });
            // bundles: section tuple and a strictly increasing list of rows
            each_tuple([&]() {
                CellStats sstat = vstat;
                for (std::size_t i : tuple) stat_join(sstat, ps.pool_st[i]);
                std::string base = head;
                base += "bundle(";
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    if (i) base += '|';
                    base += ps.pool_enc[tuple[i]];
                }
                std::vector<std::size_t> choice;
                std::function<void(std::size_t, const CellStats&)> pick =
                    [&](std::size_t from, const CellStats& acc) {
                        if (!choice.empty() && in_cell(acc, h, d)) {
                            buf = base;
                            for (std::size_t ri : choice) {
                                buf += '/';
                                buf += ps.row_enc[ri];
                            }
                            buf += ')';
                            consider(r, v, false, tuple, choice);
                        }
                        if (choice.size() == b.n) return;
                        for (std::size_t i = from; i < ps.rows.size(); ++i) {
                            CellStats st = acc;
                            stat_join(st, ps.row_st[i]);
                            choice.push_back(i);
                            pick(i + 1, st);
                            choice.pop_back();
                        }
                    };
                pick(0, sstat);
            });
        }
    }
    CellBatch out;
    out.exhausted = seen <= heap.size();
    std::sort(heap.begin(), heap.end(), heap_less);
    for (auto& ck : heap) {
        const PoolSet& ps = pools.at(ck.r);
        Recipe rec;
        rec.r = ck.r;
        rec.v_affine = ck.v < 0;
        if (ck.v >= 0) rec.v_gen = ps.hyps[ck.v];
        rec.w_graph = ck.graph;
        for (std::size_t i : ck.tuple) (ck.graph ? rec.top : rec.s0).push_back(ps.pool[i]);
        for (std::size_t ri : ck.rows) {
            std::vector<Polynomial> row;
            for (std::size_t i : ps.rows[ri]) row.push_back(ps.pool[i]);
            rec.dirs.push_back(std::move(row));
        }
        rec.enc = std::move(ck.enc);
        out.recipes.push_back(std::move(rec));
    }
    return out;
}

CheckResult materialize(const EnumerationBounds& b, const Recipe& rec) {
    const GroundField field = GroundField::Q;
    const std::uint32_t N = b.n * rec.r;
    std::vector<Polynomial> vgens;
    if (!rec.v_affine) vgens.push_back(rec.v_gen);
    VarietyPresentation Vp = make_v_presentation(field, N, vgens, "asserted");

    auto stacked = [&](std::vector<RatExpr>& full) {
        for (std::uint32_t l = 1; l + b.n <= N; ++l)
            full.push_back(RatExpr::of(Polynomial::variable(field, Variable::x(l + b.n))));
    };
    if (rec.w_graph) {
        std::vector<RatExpr> g;
        stacked(g);
        for (auto& p : rec.top) g.push_back(RatExpr::of(p));
        return build_graph_pair(Vp, g, false, 0);
    }
    std::vector<RatExpr> s0;
    stacked(s0);
    for (auto& p : rec.s0) s0.push_back(RatExpr::of(p));
    std::vector<std::vector<RatExpr>> dirs;
    for (auto& row : rec.dirs) {
        std::vector<RatExpr> full(N - b.n, RatExpr::zero(field));
        for (auto& p : row) full.push_back(RatExpr::of(p));
        dirs.push_back(std::move(full));
    }
    return build_bundle_pair(Vp, s0, dirs, false, 0);
}

// reduced basis of the relations among x_i^(0..s) for the first n_diff
// coordinates only: the bounded-order equivalence key
std::string closure_key(const GoodPair& p, std::uint32_t n_diff, std::uint32_t s) {
    DeltaGenericType type(p);
    Ideal rel = type.relations_ideal(s);
    std::vector<Variable> keep;
    for (std::uint32_t i = 1; i <= n_diff; ++i) keep.push_back(Variable::x(i));
    for (std::uint32_t i = 1; i <= n_diff; ++i)
        for (std::uint32_t k = 1; k <= s; ++k) keep.push_back(Variable::deriv(i, k));
    std::sort(keep.begin(), keep.end());
    return rel.eliminate(keep).basis_key();
}

struct EmittedRecord {
    std::uint64_t index = 0;
    std::uint32_t r = 1;
    GoodPair pair;
    std::map<std::uint32_t, std::string> ckeys; // order s -> closure key
};

const std::string& record_ckey(EmittedRecord& e, std::uint32_t n_diff, std::uint32_t s) {
    auto it = e.ckeys.find(s);
    if (it == e.ckeys.end()) it = e.ckeys.emplace(s, closure_key(e.pair, n_diff, s)).first;
    return it->second;
}

} // namespace

void enumerate_pairs(const EnumerationBounds& b,
                     const std::function<bool(const EnumEvent&)>& sink) {
    if (b.count == 0) return;
    std::map<std::string, std::uint64_t> exact_seen; // depth + reduced bases -> ordinal
    std::vector<EmittedRecord> emitted;
    std::uint64_t count = 0;
    for (std::uint32_t h = 1; h <= b.height_max; ++h)
        for (std::uint32_t d = 1; d <= b.deg_max; ++d) {
            std::map<std::uint32_t, PoolSet> pools;
            std::string watermark;
            bool have_watermark = false;
            while (true) {
            CellBatch batch = scan_cell(b, h, d, pools, have_watermark ? &watermark : nullptr);
            for (auto& rec : batch.recipes) {
                EnumEvent ev;
                ev.cell_height = h;
                ev.cell_degree = d;
                ev.recipe = rec.enc;
                std::optional<GoodPair> pair;
                try {
                    CheckResult res = materialize(b, rec);
                    if (!res.accepted) {
                        ev.kind = EnumEvent::Kind::Skip;
                        ev.detail = "rejected " + res.failed_condition +
                                    (res.detail.empty() ? "" : ": " + res.detail);
                    } else {
                        pair = std::move(*res.pair);
                    }
                } catch (const ResourceLimitError& e) {
                    ev.kind = EnumEvent::Kind::Skip;
                    ev.detail = std::string("resource limit: ") + e.what();
                } catch (const PrimalityEvidenceError& e) {
                    ev.kind = EnumEvent::Kind::Skip;
                    ev.detail = std::string("no primality evidence: ") + e.what();
                }
                if (pair) {
                    std::string key = std::to_string(rec.r) + "|" + pair->V.ideal.basis_key() +
                                      "|" + pair->W.ideal.basis_key();
                    auto hit = exact_seen.find(key);
                    std::optional<std::uint64_t> dup;
                    if (hit != exact_seen.end()) dup = hit->second;
                    if (!dup) {
                        // bounded-order comparison against other stacking depths
                        std::map<std::uint32_t, std::string> mine;
                        for (auto& e : emitted) {
                            if (e.r == rec.r) continue;
                            std::uint32_t s = std::max(e.r, rec.r) + 1;
                            auto it = mine.find(s);
                            if (it == mine.end())
                                it = mine.emplace(s, closure_key(*pair, b.n, s)).first;
                            if (record_ckey(e, b.n, s) == it->second) {
                                dup = e.index;
                                break;
                            }
                        }
                    }
                    if (dup) {
                        ev.kind = EnumEvent::Kind::Duplicate;
                        ev.index = *dup;
                        ev.detail = "duplicate of " + std::to_string(*dup);
                    } else {
                        ++count;
                        ev.kind = EnumEvent::Kind::Pair;
                        ev.index = count;
                        ev.pair = &*pair;
                        exact_seen.emplace(std::move(key), count);
                        emitted.push_back(EmittedRecord{count, rec.r, *pair, {}});
                    }
                }
                if (!sink(ev)) return;
                if (count == b.count) return;
            }
            if (batch.exhausted) break;
            watermark = batch.recipes.back().enc;
            have_watermark = true;
            }
        }
}

namespace {

std::uint32_t diff_order(const Polynomial& p) {
    std::uint32_t o = 0;
    for (Variable v : p.support())
        if (v.kind == VarKind::Deriv) o = std::max(o, v.order);
    return o;
}

std::vector<Polynomial> atom_polys(std::uint32_t n, const EnumerationBounds& b) {
    std::vector<Variable> vars;
    for (std::uint32_t i = 1; i <= n; ++i) vars.push_back(Variable::x(i));
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t k = 1; k <= b.r_max; ++k) vars.push_back(Variable::deriv(i, k));
    struct Entry {
        Polynomial p;
        std::uint32_t order, constant, degree;
        Integer height;
        std::string enc;
    };
    std::vector<Entry> entries;
    for (auto& p : poly_pool(vars, b.deg_max, integer_coeffs(b.height_max))) {
        if (p.total_degree() == 0) continue;
        if (!display_lead_positive(p)) continue;
        if (!(p == p.cleared_primitive())) continue;
        entries.push_back(
            {p, diff_order(p), 0, p.total_degree(), p.height(), enc_poly(p)});
    }
    for (int c = 0; c <= 1; ++c) {
        Polynomial p = Polynomial::constant(GroundField::Q, Rational(c));
        entries.push_back({p, 0, 1, 0, Integer(1), enc_poly(p)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& c) {
        if (a.order != c.order) return a.order < c.order;
        if (a.constant != c.constant) return a.constant < c.constant;
        if (a.degree != c.degree) return a.degree < c.degree;
        if (a.height != c.height) return a.height < c.height;
        return enc_less(a.enc, c.enc);
    });
    std::vector<Polynomial> out;
    for (auto& e : entries) out.push_back(std::move(e.p));
    return out;
}

} // namespace

std::vector<QFFormula> enumerate_formulas(std::uint32_t n, const EnumerationBounds& b,
                                          std::size_t count) {
    if (count == 0) return {};
    std::vector<std::vector<QFFormula>> levels; // levels[s-1] = formulas of tree size s
    std::vector<QFFormula> atoms;
    for (auto& p : atom_polys(n, b)) atoms.push_back(QFFormula::atom_eq(p));
    levels.push_back(std::move(atoms));
    std::vector<QFFormula> out;
    std::size_t total = 0;
    for (std::size_t s = 1;; ++s) {
        if (s > levels.size()) {
            // negations of size s-1, then conjunctions and disjunctions by
            // left subtree size
            std::vector<QFFormula> next;
            for (auto& f : levels[s - 2]) next.push_back(QFFormula::negation(f));
            for (int op = 0; op < 2; ++op)
                for (std::size_t a = 1; a + 1 < s; ++a)
                    for (auto& f : levels[a - 1])
                        for (auto& g : levels[s - 2 - a]) {
                            next.push_back(op == 0 ? QFFormula::conj(f, g)
                                                   : QFFormula::disj(f, g));
                            if (total + next.size() > 2'000'000)
                                throw ResourceLimitError(
                                    "formula enumeration grew past the supported range");
                        }
            levels.push_back(std::move(next));
        }
        for (auto& f : levels[s - 1]) {
            out.push_back(f);
            if (out.size() == count) return out;
        }
        total += levels[s - 1].size();
    }
}

QFFormula formula_at(std::uint32_t n, const EnumerationBounds& b, std::uint64_t j) {
    if (j == 0) throw InternalError("formula ordinals are 1-based");
    auto fs = enumerate_formulas(n, b, static_cast<std::size_t>(j));
    if (fs.size() < j) throw InternalError("formula ordinal beyond the supported range");
    return fs.back();
}

bool listing_membership(std::uint64_t i, std::uint64_t j, const EnumerationBounds& b) {
    if (i == 0) throw InternalError("pair ordinals are 1-based");
    EnumerationBounds bb = b;
    bb.count = i;
    std::optional<GoodPair> got;
    enumerate_pairs(bb, [&](const EnumEvent& ev) {
        if (ev.kind == EnumEvent::Kind::Pair && ev.index == i) {
            got = *ev.pair;
            return false;
        }
        return true;
    });
    if (!got) throw InternalError("pair ordinal beyond the bounds' reach");
    DeltaGenericType type(*got);
    return type.decide(formula_at(b.n, b, j));
}

} // namespace taugen
