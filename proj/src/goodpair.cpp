// Good-pair validation: the containment / projection / fiber conditions,
// certificate extraction over the function field of V, and the graph /
// bundle closure constructions with their re-checkable primality evidence.

#include "taugen/goodpair.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "taugen/factor.hpp"

namespace taugen {

namespace {

bool is_u_var(Variable v) { return v.kind == VarKind::Prolong; }

std::vector<Variable> u_block(std::uint32_t n) {
    std::vector<Variable> v;
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back(Variable::u(i));
    return v;
}

// ----- fiber engine: Buchberger over k(V)[u] via pseudo-reduction -----
//
// Elements are u-monomial term lists whose coefficients are x-polynomials in
// normal form modulo I(V); a leading coefficient that reduces to zero simply
// disappears, which performs the demotion the generic-fiber computation
// needs. No coefficient inverses are taken: reductions cross-multiply by
// leading coefficients, all of which stay outside I(V) because the
// coefficient ring is a domain when V is prime.

struct FibPoly {
    std::vector<std::pair<Monomial, Polynomial>> terms; // descending u-order
    bool is_zero() const { return terms.empty(); }
    const Monomial& lead_mono() const { return terms.front().first; }
    const Polynomial& lead_coeff() const { return terms.front().second; }
};

class FiberEngine {
  public:
    FiberEngine(const Ideal& V, std::uint32_t n)
        : V_(V), uord_(MonomialOrder::grevlex(u_block(n))) {}

    FibPoly lift(const Polynomial& p) {
        auto parts = p.collect(is_u_var);
        FibPoly f;
        for (auto& [um, cf] : parts) {
            Polynomial r = V_.normal_form(cf);
            if (!r.is_zero()) f.terms.push_back({um, r});
        }
        sort_terms(f);
        return f;
    }

    // minimal Groebner basis of the ideal the lifted generators span
    std::vector<FibPoly> basis_of(const std::vector<Polynomial>& gens) {
        std::vector<FibPoly> gb;
        std::vector<std::pair<std::size_t, std::size_t>> todo;
        auto insert = [&](FibPoly f) {
            f = reduce(std::move(f), gb);
            if (f.is_zero()) return;
            for (std::size_t i = 0; i < gb.size(); ++i) todo.push_back({i, gb.size()});
            gb.push_back(std::move(f));
        };
        for (auto& g : gens) insert(lift(g));
        for (std::size_t q = 0; q < todo.size(); ++q) {
            auto [i, j] = todo[q];
            if (gb[i].lead_mono().coprime_with(gb[j].lead_mono())) continue;
            insert(spoly(gb[i], gb[j]));
        }
        std::vector<std::size_t> order(gb.size());
        for (std::size_t k = 0; k < gb.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return uord_.less(gb[a].lead_mono(), gb[b].lead_mono());
        });
        std::vector<FibPoly> out;
        for (std::size_t k : order) {
            bool dominated = false;
            for (auto& h : out)
                if (h.lead_mono().divides(gb[k].lead_mono())) { dominated = true; break; }
            if (!dominated) out.push_back(gb[k]);
        }
        return out;
    }

  private:
    // a * x^sa * f  -  b * x^sb * g, coefficients re-reduced modulo I(V)
    FibPoly combine(const Polynomial& a, const Monomial& sa, const FibPoly& f,
                    const Polynomial& b, const Monomial& sb, const FibPoly& g) {
        std::map<Monomial, Polynomial> acc;
        auto add = [&](const Monomial& m, Polynomial p) {
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, std::move(p));
            else it->second = it->second + p;
        };
        for (auto& [m, c] : f.terms) add(m * sa, a * c);
        for (auto& [m, c] : g.terms) add(m * sb, -(b * c));
        FibPoly r;
        for (auto& [m, c] : acc) {
            Polynomial v = V_.normal_form(c);
            if (!v.is_zero()) r.terms.push_back({m, v});
        }
        sort_terms(r);
        rescale(r);
        return r;
    }

    FibPoly spoly(const FibPoly& f, const FibPoly& g) {
        tick();
        Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
        return combine(g.lead_coeff(), l.divide_by(f.lead_mono()), f,
                       f.lead_coeff(), l.divide_by(g.lead_mono()), g);
    }

    FibPoly reduce(FibPoly f, const std::vector<FibPoly>& basis) {
        while (!f.is_zero()) {
            const FibPoly* red = nullptr;
            for (auto& g : basis)
                if (g.lead_mono().divides(f.lead_mono())) { red = &g; break; }
            if (!red) break;
            tick();
            Monomial shift = f.lead_mono().divide_by(red->lead_mono());
            f = combine(red->lead_coeff(), Monomial::one(), f, f.lead_coeff(), shift, *red);
        }
        return f;
    }

    void sort_terms(FibPoly& f) {
        std::sort(f.terms.begin(), f.terms.end(),
                  [&](auto& a, auto& b) { return uord_.greater(a.first, b.first); });
    }

    // divide through by the display-leading scalar of the lead coefficient to
    // keep cross-multiplication from inflating the scalars
    void rescale(FibPoly& f) {
        if (f.is_zero()) return;
        GroundElement inv = f.lead_coeff().terms()[0].second.inverse();
        for (auto& [m, c] : f.terms) c = c.scaled(inv);
    }

    void tick() {
        if (++steps_ > global_limits().max_reduction_steps)
            throw ResourceLimitError("generic-fiber basis computation exceeded the step budget");
    }

    const Ideal& V_;
    MonomialOrder uord_;
    std::uint64_t steps_ = 0;
};

// ----- primality evidence -----

enum class EvState { Ok, Missing, Fail };
struct Evidence {
    EvState state;
    std::string detail;
};

bool all_affine_linear(const Ideal& I) {
    for (auto& g : I.groebner_basis())
        if (g.total_degree() > 1) return false;
    return true;
}

// The presented generators cut out a coordinate graph: each generator owns a
// pivot variable that occurs linearly with a constant coefficient and in no
// other generator, so the quotient is a polynomial ring over the free
// coordinates and the ideal is prime.
bool coordinate_graph_shape(const std::vector<Polynomial>& gens) {
    std::map<Variable, int> occur;
    for (auto& g : gens)
        for (Variable v : g.support()) occur[v]++;
    for (auto& g : gens) {
        bool found = false;
        for (Variable v : g.support()) {
            if (occur[v] != 1 || g.degree_in(v) != 1) continue;
            auto parts = g.collect([&](Variable w) { return w == v; });
            auto it = parts.find(Monomial::var(v));
            if (it == parts.end() || !it->second.is_constant()) continue;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

Evidence hypersurface_evidence(const Ideal& I, std::uint64_t seed, const std::string& side) {
    const std::vector<Polynomial>& gb = I.groebner_basis();
    if (gb.size() != 1)
        return {EvState::Fail, side + " is tagged as a hypersurface but its basis has " +
                                   std::to_string(gb.size()) + " elements"};
    switch (certify_irreducible(gb[0], seed)) {
        case Irreducibility::Certified: return {EvState::Ok, ""};
        case Irreducibility::Refuted:
            return {EvState::Fail,
                    "the generator of I(" + side + ") factors, so " + side + " is not irreducible"};
        case Irreducibility::Unverified:
            return {EvState::Missing,
                    "irreducibility of the " + side + " hypersurface could not be certified"};
    }
    throw InternalError("unknown irreducibility verdict");
}

// V carries evidence when it is an affine subspace, a coordinate graph, or a
// certified-irreducible hypersurface — the shapes the constructions produce
Evidence detect_v_evidence(const Ideal& V, std::uint64_t seed) {
    if (all_affine_linear(V)) return {EvState::Ok, ""};
    if (coordinate_graph_shape(V.generators())) return {EvState::Ok, ""};
    if (V.groebner_basis().size() == 1) return hypersurface_evidence(V, seed, "V");
    return {EvState::Missing, "no primality evidence family covers I(V)"};
}

Evidence w_evidence_early(const Ideal& W, const std::string& tag, std::uint64_t seed) {
    if (tag == "constructed:affine") {
        if (all_affine_linear(W)) return {EvState::Ok, ""};
        return {EvState::Fail, "W is tagged as an affine subspace but its basis is not affine-linear"};
    }
    if (tag == "constructed:hypersurface") return hypersurface_evidence(W, seed, "W");
    if (tag == "constructed:graph" || tag == "constructed:bundle")
        return {EvState::Ok, ""}; // re-checked against the certificate later
    if (tag == "asserted")
        return {EvState::Missing, "primality of the pair is asserted without evidence"};
    return {EvState::Missing, "unknown construction family '" + tag + "'"};
}

// ----- closures -----

void add_denominator(std::vector<Polynomial>& dens, const Polynomial& d0) {
    Polynomial d = d0.cleared_primitive();
    if (d.is_constant()) return;
    for (auto& h : dens)
        if (h == d) return;
    dens.push_back(d);
}

Ideal closure_graph(const Ideal& V, std::uint32_t n, const std::vector<RatExpr>& g) {
    GroundField field = V.field();
    std::vector<Polynomial> gens = V.generators();
    std::vector<Polynomial> dens;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const RatExpr& e = g[i - 1];
        Polynomial ui = Polynomial::variable(field, Variable::u(i));
        gens.push_back((ui * e.den - e.num).cleared_primitive());
        add_denominator(dens, e.den);
    }
    Ideal W0(field, xu_block(n), std::move(gens));
    if (dens.empty()) return W0;
    Polynomial sat = Polynomial::constant(field, Rational(1));
    for (auto& d : dens) sat = sat * d;
    return W0.saturate(sat);
}

Ideal closure_bundle(const Ideal& V, std::uint32_t n, const std::vector<RatExpr>& s0,
                     const std::vector<std::vector<RatExpr>>& dirs) {
    GroundField field = V.field();
    std::vector<Variable> amb = xu_block(n);
    for (std::uint32_t j = 1; j <= dirs.size(); ++j) amb.push_back(Variable::aux(j));
    std::vector<Polynomial> gens = V.generators();
    std::vector<Polynomial> dens;
    for (std::uint32_t i = 1; i <= n; ++i) {
        RatExpr e = RatExpr::of(Polynomial::variable(field, Variable::u(i))) - s0[i - 1];
        add_denominator(dens, s0[i - 1].den);
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            Polynomial tau = Polynomial::variable(field, Variable::aux(static_cast<std::uint32_t>(j + 1)));
            e = e - RatExpr::of(tau) * dirs[j][i - 1];
            add_denominator(dens, dirs[j][i - 1].den);
        }
        gens.push_back(e.num.cleared_primitive());
    }
    Ideal W0(field, std::move(amb), std::move(gens));
    if (!dens.empty()) {
        Polynomial sat = Polynomial::constant(field, Rational(1));
        for (auto& d : dens) sat = sat * d;
        W0 = W0.saturate(sat);
    }
    return W0.eliminate(xu_block(n));
}

Evidence w_rebuild_evidence(const VarietyPresentation& Vp, const Ideal& W,
                            const GoodPairCertificate& cert, const std::string& tag,
                            std::uint32_t n) {
    GroundField field = Vp.ideal.field();
    if (tag == "constructed:graph") {
        if (cert.m != 0)
            return {EvState::Fail, "W is tagged as a graph closure but the generic fiber has dimension " +
                                       std::to_string(cert.m)};
        std::vector<RatExpr> g;
        for (auto& f : cert.fiber_forms) g.push_back(f.constant);
        if (g.size() != n) throw InternalError("graph certificate with missing fiber forms");
        if (closure_graph(Vp.ideal, n, g).equals(W)) return {EvState::Ok, ""};
        return {EvState::Fail, "W does not match the graph closure rebuilt from its certificate"};
    }
    // bundle: basis directions are unit vectors in the basis coordinates, and
    // the fiber forms fill in the dependent coordinates
    RatExpr one = RatExpr::of(Polynomial::constant(field, Rational(1)));
    RatExpr zero = RatExpr::zero(field);
    std::vector<RatExpr> s0;
    std::vector<std::vector<RatExpr>> dirs(cert.m);
    std::size_t fi = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        auto bit = std::find(cert.basis_indices.begin(), cert.basis_indices.end(), i);
        if (bit != cert.basis_indices.end()) {
            std::size_t j = static_cast<std::size_t>(bit - cert.basis_indices.begin());
            s0.push_back(zero);
            for (std::size_t k = 0; k < cert.m; ++k) dirs[k].push_back(k == j ? one : zero);
        } else {
            if (fi >= cert.fiber_forms.size() || cert.fiber_forms[fi].target != i)
                throw InternalError("fiber forms out of order in the certificate");
            const LinearFiberForm& f = cert.fiber_forms[fi++];
            s0.push_back(f.constant);
            for (std::size_t k = 0; k < cert.m; ++k) dirs[k].push_back(f.coeffs[k]);
        }
    }
    if (closure_bundle(Vp.ideal, n, s0, dirs).equals(W)) return {EvState::Ok, ""};
    return {EvState::Fail, "W does not match the bundle closure rebuilt from its certificate"};
}

} // namespace

// ----- presentations -----

VarietyPresentation make_v_presentation(GroundField field, std::uint32_t n,
                                        std::vector<Polynomial> gens, std::string primality) {
    return {n, Ideal(field, x_block(n), std::move(gens)), std::move(primality)};
}

VarietyPresentation make_w_presentation(GroundField field, std::uint32_t n,
                                        std::vector<Polynomial> gens, std::string primality) {
    return {n, Ideal(field, xu_block(n), std::move(gens)), std::move(primality)};
}

// ----- the three conditions -----

bool check_containment(const Ideal& V, const Ideal& W, std::uint32_t n) {
    Ideal tau = prolongation_ideal(V, n);
    for (auto& g : tau.generators())
        if (!W.contains(g)) return false;
    return true;
}

bool check_generic_projection(const Ideal& V, const Ideal& W, std::uint32_t n) {
    return W.eliminate(x_block(n)).equals(V);
}

FiberAnalysis fiber_analysis(const Ideal& V, const Ideal& W, std::uint32_t n) {
    FiberAnalysis out;
    GroundField field = V.field();

    MonomialOrder bord = MonomialOrder::block(u_block(n), x_block(n));
    FiberEngine eng(V, n);
    auto basis = eng.basis_of(W.groebner_basis(bord));

    for (auto& f : basis) {
        if (f.lead_mono().is_one()) {
            out.detail = "the generic fiber is empty";
            return out;
        }
        if (f.lead_mono().total_degree() >= 2) {
            out.detail = "fiber relation with leading monomial of u-degree " +
                         std::to_string(f.lead_mono().total_degree()) +
                         ": the generic fiber is not an affine subspace";
            return out;
        }
    }

    // affine linear system over k(V): rows  c[0] + sum_i c[i] * u_i  = 0
    struct Row {
        std::uint32_t pivot;
        std::vector<Polynomial> c;
    };
    std::vector<Row> rows;
    for (auto& f : basis) {
        Row r{f.lead_mono().entries()[0].first.index,
              std::vector<Polynomial>(n + 1, Polynomial::zero(field))};
        for (auto& [m, c] : f.terms) {
            if (m.is_one()) r.c[0] = c;
            else r.c[m.entries()[0].first.index] = c;
        }
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.pivot < b.pivot; });

    // clear pivot variables out of the tails; pivots ascending, so every row
    // used as a reducer is already clean and only free variables remain
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < k; ++j) {
            Polynomial b = rows[k].c[rows[j].pivot];
            if (b.is_zero()) continue;
            Polynomial a = rows[j].c[rows[j].pivot];
            for (std::uint32_t i = 0; i <= n; ++i)
                rows[k].c[i] = V.normal_form(a * rows[k].c[i] - b * rows[j].c[i]);
        }

    std::vector<bool> is_pivot(n + 1, false);
    for (auto& r : rows) {
        if (is_pivot[r.pivot]) throw InternalError("fiber rows with duplicate pivots");
        is_pivot[r.pivot] = true;
    }
    for (std::uint32_t i = 1; i <= n; ++i)
        if (!is_pivot[i]) out.basis_indices.push_back(i);
    out.m = static_cast<std::uint32_t>(out.basis_indices.size());

    int dv = V.dimension().first;
    int dw = W.dimension().first;
    if (dw - dv != static_cast<int>(out.m)) {
        out.detail = "generic fiber has dimension " + std::to_string(out.m) +
                     " but dim W - dim V = " + std::to_string(dw - dv);
        out.basis_indices.clear();
        out.m = 0;
        return out;
    }

    for (auto& r : rows) {
        const Polynomial& d = r.c[r.pivot];
        LinearFiberForm form;
        form.target = r.pivot;
        form.constant = RatExpr(-r.c[0], d).normalized();
        for (std::uint32_t b : out.basis_indices)
            form.coeffs.push_back(RatExpr(-r.c[b], d).normalized());
        out.forms.push_back(std::move(form));
    }
    out.affine = true;
    return out;
}

// ----- the full check -----

CheckResult check_good_pair(const VarietyPresentation& Vp, const VarietyPresentation& Wp,
                            bool permissive, std::uint64_t seed,
                            std::optional<PointSpec> point) {
    if (Vp.n != Wp.n) throw InternalError("good-pair check with mismatched coordinate counts");
    if (Vp.ideal.field() != Wp.ideal.field())
        throw FieldMismatchError("good-pair check with mismatched ground fields");
    if (!Vp.ideal.is_proper()) throw UnitIdealError("presentation of V is the unit ideal");
    const std::uint32_t n = Vp.n;
    GroundField field = Vp.ideal.field();

    CheckResult res;
    if (!Wp.ideal.is_proper()) {
        // containment (i) holds vacuously; the first failure is the projection
        res.failed_condition = "(ii)";
        res.detail = "I(W) is the unit ideal, so eliminating u cannot recover I(V)";
        return res;
    }

    auto warn = [&](const std::string& w) {
        if (!res.warning.empty()) res.warning += "; ";
        res.warning += w;
    };
    auto apply_evidence = [&](const Evidence& ev) -> bool {
        if (ev.state == EvState::Fail) {
            res.failed_condition = "primality";
            res.detail = ev.detail;
            return false;
        }
        if (ev.state == EvState::Missing) {
            if (!permissive)
                throw PrimalityEvidenceError(ev.detail +
                                             " (pass --permissive to continue regardless)");
            warn(ev.detail);
        }
        return true;
    };
    if (!apply_evidence(detect_v_evidence(Vp.ideal, seed))) return res;
    if (!apply_evidence(w_evidence_early(Wp.ideal, Wp.primality, seed))) return res;

    Ideal tau = prolongation_ideal(Vp.ideal, n);
    for (auto& g : tau.generators())
        if (!Wp.ideal.contains(g)) {
            res.failed_condition = "(i)";
            res.detail = "prolongation generator " + print_poly(g) + " does not lie in I(W)";
            return res;
        }

    if (!Wp.ideal.eliminate(x_block(n)).equals(Vp.ideal)) {
        res.failed_condition = "(ii)";
        res.detail = "eliminating the u-block from I(W) does not recover I(V)";
        return res;
    }

    FiberAnalysis fib = fiber_analysis(Vp.ideal, Wp.ideal, n);
    if (!fib.affine) {
        res.failed_condition = "(iii)";
        res.detail = fib.detail;
        return res;
    }

    GoodPairCertificate cert;
    cert.containment_ok = true;
    cert.projection_ok = true;
    cert.m = fib.m;
    cert.basis_indices = fib.basis_indices;
    cert.fiber_forms = fib.forms;

    if (Wp.primality == "constructed:graph" || Wp.primality == "constructed:bundle") {
        Evidence wr = w_rebuild_evidence(Vp, Wp.ideal, cert, Wp.primality, n);
        if (wr.state == EvState::Fail) {
            res.failed_condition = "primality";
            res.detail = wr.detail;
            return res;
        }
    }

    // certificate sanity: every fiber form is a relation inside I(W)
    for (auto& f : cert.fiber_forms) {
        RatExpr rel = RatExpr::of(Polynomial::variable(field, Variable::u(f.target))) - f.constant;
        for (std::size_t j = 0; j < cert.basis_indices.size(); ++j)
            rel = rel - f.coeffs[j] * RatExpr::of(Polynomial::variable(
                                          field, Variable::u(cert.basis_indices[j])));
        if (!Wp.ideal.contains(rel.num))
            throw InternalError("fiber form does not define a relation in I(W)");
    }

    res.accepted = true;
    res.pair = GoodPair{n, Vp, Wp, std::move(cert), std::move(point)};
    return res;
}

// ----- constructions -----

CheckResult build_graph_pair(const VarietyPresentation& Vp, const std::vector<RatExpr>& g,
                             bool permissive, std::uint64_t seed,
                             std::optional<PointSpec> point) {
    const std::uint32_t n = Vp.n;
    if (g.size() != n) throw InternalError("build_graph_pair needs one expression per coordinate");
    for (auto& e : g)
        if (Vp.ideal.contains(e.den))
            throw DegenerateDenominatorError("graph denominator " + print_poly(e.den) +
                                             " vanishes on V");
    VarietyPresentation Wp{n, closure_graph(Vp.ideal, n, g), "constructed:graph"};
    return check_good_pair(Vp, Wp, permissive, seed, std::move(point));
}

CheckResult build_bundle_pair(const VarietyPresentation& Vp, const std::vector<RatExpr>& s0,
                              const std::vector<std::vector<RatExpr>>& directions,
                              bool permissive, std::uint64_t seed,
                              std::optional<PointSpec> point) {
    const std::uint32_t n = Vp.n;
    if (s0.size() != n) throw InternalError("build_bundle_pair needs one base expression per coordinate");
    for (auto& col : directions)
        if (col.size() != n)
            throw InternalError("build_bundle_pair directions need one entry per coordinate");
    auto check_den = [&](const RatExpr& e) {
        if (Vp.ideal.contains(e.den))
            throw DegenerateDenominatorError("bundle denominator " + print_poly(e.den) +
                                             " vanishes on V");
    };
    for (auto& e : s0) check_den(e);
    for (auto& col : directions)
        for (auto& e : col) check_den(e);
    VarietyPresentation Wp{n, closure_bundle(Vp.ideal, n, s0, directions), "constructed:bundle"};
    return check_good_pair(Vp, Wp, permissive, seed, std::move(point));
}

// ----- manifest glue -----

VarietyPresentation v_from_manifest(const PairManifest& m) {
    Ideal I(m.field, x_block(m.n), m.v_gens);
    if (!I.is_proper()) throw ParseError("the [V] section presents the unit ideal", 0, 0);
    return {m.n, std::move(I), m.primality};
}

VarietyPresentation w_from_manifest(const PairManifest& m) {
    Ideal I(m.field, xu_block(m.n), m.w_gens);
    if (!I.is_proper()) throw ParseError("the [W] section presents the unit ideal", 0, 0);
    return {m.n, std::move(I), m.primality};
}

PairManifest manifest_from_pair(const GoodPair& p, const std::string& recipe) {
    PairManifest m;
    m.field = p.V.ideal.field();
    m.n = p.n;
    m.primality = p.W.primality;
    for (auto& g : p.V.ideal.groebner_basis()) m.v_gens.push_back(g.cleared_primitive());
    for (auto& g : p.W.ideal.groebner_basis()) m.w_gens.push_back(g.cleared_primitive());
    m.point = p.point;
    m.recipe = recipe;
    return m;
}

} // namespace taugen
