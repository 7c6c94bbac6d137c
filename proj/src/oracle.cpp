// Verification oracles.
//
// subst_oracle is a second, structurally different implementation of the
// membership question for graph pairs: it folds the derivatives down through
// the graph map by direct quotient-rule rewriting instead of building the
// realization tower, so disagreement with member() points at a real bug.
//
// series_oracle integrates the fiber dynamics x' = s0(x) + sum_j s_j(x) w_j
// coefficient-by-coefficient from a stored rational point, with seeded
// random truncated streams w_j for the basis coordinates, and evaluates the
// query on the resulting jet.

#include "taugen/oracle.hpp"

#include <map>
#include <utility>
#include <vector>

namespace taugen {

namespace {

// ----- exact graph rewriting -----

struct GraphDerivation {
    GroundField field;
    const std::vector<RatExpr>& g; // g[i-1] realizes x_i'

    RatExpr apply_poly(const Polynomial& p) const {
        RatExpr acc = RatExpr::of(p.coefficient_derivation());
        for (Variable v : p.support()) {
            if (v.kind != VarKind::Base)
                throw InternalError("graph rewriting reached a non-base variable");
            Polynomial pd = p.partial_derivative(v);
            if (pd.is_zero()) continue;
            acc = acc + RatExpr::of(pd) * g[v.index - 1];
        }
        return acc;
    }

    RatExpr apply(const RatExpr& e) const {
        RatExpr dn = apply_poly(e.num);
        RatExpr dd = apply_poly(e.den);
        RatExpr num_part = dn * RatExpr::of(e.den) - RatExpr::of(e.num) * dd;
        return RatExpr(num_part.num, num_part.den * (e.den * e.den)).normalized();
    }
};

// ----- truncated series arithmetic -----

struct Series {
    std::vector<Rational> c; // c[k] multiplies T^k
    explicit Series(std::size_t len) : c(len, Rational(0)) {}
};

// a dynamic denominator had zero constant term; retry with the next seed
struct RetrySignal {};

Series ser_add(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}

Series ser_mul(const Series& a, const Series& b) {
    Series r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; i + j < b.c.size() && j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

Series ser_inverse(const Series& a) { // requires a.c[0] != 0
    Series b(a.c.size());
    Rational inv0 = Rational(1) / a.c[0];
    b.c[0] = inv0;
    for (std::size_t k = 1; k < a.c.size(); ++k) {
        Rational s(0);
        for (std::size_t i = 1; i <= k; ++i) s += a.c[i] * b.c[k - i];
        b.c[k] = -s * inv0;
    }
    return b;
}

Series ser_derive(const Series& a) {
    Series r(a.c.size());
    for (std::size_t k = 0; k + 1 < a.c.size(); ++k)
        r.c[k] = a.c[k + 1] * Rational(static_cast<long>(k + 1));
    return r;
}

// p(t0 + T) truncated
Series ser_univ(const UnivPoly& p, const Rational& t0, std::size_t len) {
    Series shift(len);
    shift.c[0] = t0;
    if (len > 1) shift.c[1] = 1;
    Series acc(len);
    for (int i = p.degree(); i >= 0; --i) {
        acc = ser_mul(acc, shift);
        acc.c[0] += p.coeff(static_cast<std::size_t>(i));
    }
    return acc;
}

Series ser_ground(const GroundElement& g, const Rational& t0, std::size_t len) {
    if (g.is_rational()) {
        Series s(len);
        s.c[0] = g.rational_value();
        return s;
    }
    Series num = ser_univ(g.num(), t0, len);
    Series den = ser_univ(g.den(), t0, len);
    if (den.c[0] == 0)
        throw PointError("a coefficient denominator vanishes at the expansion point t0");
    return ser_mul(num, ser_inverse(den));
}

// evaluate an x-polynomial on coordinate series
Series ser_poly(const Polynomial& p, const std::vector<Series>& x, const Rational& t0,
                std::size_t len) {
    Series acc(len);
    for (auto& [mono, c] : p.terms()) {
        Series t = ser_ground(c, t0, len);
        for (auto& [v, e] : mono.entries()) {
            if (v.kind != VarKind::Base)
                throw InternalError("series evaluation reached a non-base variable");
            for (std::uint32_t q = 0; q < e; ++q) t = ser_mul(t, x[v.index - 1]);
        }
        acc = ser_add(acc, t);
    }
    return acc;
}

Series ser_rat(const RatExpr& e, const std::vector<Series>& x, const Rational& t0,
               std::size_t len) {
    Series num = ser_poly(e.num, x, t0, len);
    Series den = ser_poly(e.den, x, t0, len);
    if (den.c[0] == 0) throw RetrySignal{};
    return ser_mul(num, ser_inverse(den));
}

Rational ground_at(const GroundElement& g, const Rational& t0) {
    if (g.is_rational()) return g.rational_value();
    Rational dv = g.den().eval(t0);
    if (dv == 0)
        throw PointError("a coefficient denominator vanishes at the expansion point t0");
    return g.num().eval(t0) / dv;
}

Rational poly_at_point(const Polynomial& p, const std::vector<Rational>& coords,
                       const Rational& t0) {
    Rational acc(0);
    for (auto& [mono, c] : p.terms()) {
        Rational t = ground_at(c, t0);
        for (auto& [v, e] : mono.entries()) {
            if (v.kind != VarKind::Base)
                throw InternalError("point evaluation reached a non-base variable");
            for (std::uint32_t q = 0; q < e; ++q) t *= coords[v.index - 1];
        }
        acc += t;
    }
    return acc;
}

} // namespace

Verdict subst_oracle(const GoodPair& pair, const DiffPolynomial& f) {
    const GoodPairCertificate& cert = pair.certificate;
    if (cert.m != 0) throw InternalError("subst_oracle needs a graph pair (m = 0)");
    const std::uint32_t n = pair.n;
    GroundField field = pair.V.ideal.field();
    if (f.n() != n || f.field() != field)
        throw InternalError("subst_oracle query does not match the pair");

    std::vector<RatExpr> g;
    for (auto& form : cert.fiber_forms) {
        if (form.target != g.size() + 1) throw InternalError("graph fiber forms out of order");
        if (pair.V.ideal.contains(form.constant.den))
            throw DegenerateDenominatorError("fiber denominator vanishes on V");
        g.push_back(form.constant);
    }
    if (g.size() != n) throw InternalError("graph certificate with missing fiber forms");

    GraphDerivation D{field, g};
    std::map<Variable, RatExpr> real;
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint32_t maxk = 0;
        for (Variable v : f.body().support())
            if (v.kind == VarKind::Deriv && v.index == i) maxk = std::max(maxk, v.order);
        RatExpr cur = RatExpr::of(Polynomial::variable(field, Variable::x(i)));
        for (std::uint32_t k = 1; k <= maxk; ++k) {
            cur = D.apply(cur);
            real.emplace(Variable::deriv(i, k), cur);
        }
    }

    RatExpr val = RatExpr::zero(field);
    for (auto& [mono, c] : f.body().terms()) {
        RatExpr t = RatExpr::of(Polynomial::constant(field, c));
        for (auto& [v, e] : mono.entries()) {
            if (v.kind == VarKind::Base)
                t = t * RatExpr::of(
                            Polynomial::term(field, GroundElement::one(field), Monomial::var(v, e)));
            else
                t = t * real.at(v).pow(e);
        }
        val = val + t;
    }
    if (pair.V.ideal.contains(val.den))
        throw DegenerateDenominatorError("substitution denominator vanishes on V");
    return pair.V.ideal.normal_form(val.num).is_zero() ? Verdict::Zero : Verdict::Nonzero;
}

SeriesOutcome series_oracle(const GoodPair& pair, const DiffPolynomial& f, std::uint32_t order,
                            std::uint64_t seed) {
    if (!pair.point) throw PointError("the series oracle needs a stored [point] on V");
    const std::uint32_t n = pair.n;
    GroundField field = pair.V.ideal.field();
    if (f.n() != n || f.field() != field)
        throw InternalError("series query does not match the pair");
    const PointSpec& pt = *pair.point;
    if (pt.coords.size() != n) throw PointError("stored point has the wrong number of coordinates");
    Rational t0(0);
    if (field == GroundField::Qt) {
        if (!pt.t0) throw PointError("a Q(t) pair needs an expansion point t0");
        t0 = *pt.t0;
    }
    for (auto& gv : pair.V.ideal.generators())
        if (poly_at_point(gv, pt.coords, t0) != 0)
            throw PointError("stored point does not lie on V");

    const GoodPairCertificate& cert = pair.certificate;
    const std::uint32_t N = order;
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    const std::uint32_t fo = f.order();

    for (int attempt = 0; attempt < kSeriesRetryCap; ++attempt) {
        std::uint64_t used = seed + static_cast<std::uint64_t>(attempt);
        Rng rng(used);
        try {
            // seeded derivative streams for the basis coordinates
            std::vector<Series> w;
            for (std::size_t j = 0; j < cert.basis_indices.size(); ++j) {
                Series s(len);
                for (std::uint32_t k = 0; k < N; ++k) s.c[k] = Rational(rng.nonzero(5));
                w.push_back(std::move(s));
            }

            std::vector<Series> x;
            for (std::uint32_t i = 0; i < n; ++i) {
                Series s(len);
                s.c[0] = pt.coords[i];
                x.push_back(std::move(s));
            }

            // u_i(T) from the certificate at the current approximation of x
            auto u_series = [&]() {
                std::vector<Series> u(n, Series(len));
                for (std::size_t j = 0; j < cert.basis_indices.size(); ++j)
                    u[cert.basis_indices[j] - 1] = w[j];
                for (auto& form : cert.fiber_forms) {
                    Series s = ser_rat(form.constant, x, t0, len);
                    for (std::size_t j = 0; j < form.coeffs.size(); ++j)
                        s = ser_add(s, ser_mul(ser_rat(form.coeffs[j], x, t0, len), w[j]));
                    u[form.target - 1] = std::move(s);
                }
                return u;
            };

            for (std::uint32_t k = 0; k < N; ++k) {
                std::vector<Series> u = u_series();
                for (std::uint32_t i = 0; i < n; ++i)
                    x[i].c[k + 1] = u[i].c[k] / Rational(static_cast<long>(k + 1));
            }

            // the solution must stay on V through the whole truncation
            for (auto& gv : pair.V.ideal.generators()) {
                Series s = ser_poly(gv, x, t0, len);
                for (std::size_t k = 0; k < len; ++k)
                    if (s.c[k] != 0) throw InternalError("series point failed to stay on V");
            }

            // derivative jets, then the query itself
            std::map<Variable, Series> jet;
            for (Variable v : f.body().support()) {
                if (v.kind == VarKind::Base) continue;
                std::uint32_t i = v.index;
                Series cur = x[i - 1];
                for (std::uint32_t k = 1; k <= v.order; ++k) cur = ser_derive(cur);
                jet.emplace(v, std::move(cur));
            }
            Series val(len);
            for (auto& [mono, c] : f.body().terms()) {
                Series t = ser_ground(c, t0, len);
                for (auto& [v, e] : mono.entries()) {
                    const Series& vs = v.kind == VarKind::Base ? x[v.index - 1] : jet.at(v);
                    for (std::uint32_t q = 0; q < e; ++q) t = ser_mul(t, vs);
                }
                val = ser_add(val, t);
            }

            SeriesOutcome out;
            out.seed_used = used;
            for (std::uint32_t k = 0; k + fo <= N; ++k)
                if (val.c[k] != 0) {
                    out.refuted = true;
                    out.order = k;
                    out.witness = val.c[k];
                    return out;
                }
            out.order = N;
            return out;
        } catch (const RetrySignal&) {
            continue;
        }
    }
    throw DegenerateDenominatorError(
        "fiber denominators vanish at the stored point (seeded retries exhausted)");
}

} // namespace taugen
