#include "taugen/factor.hpp"

#include <algorithm>
#include <sstream>

#include "taugen/io.hpp"
#include "taugen/rational.hpp"

namespace taugen {

namespace {

// ----- arithmetic mod a word-size prime -----

using Fp = std::uint64_t;

struct FpPoly {
    Fp p;
    std::vector<Fp> c; // c[i] * y^i, trimmed

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool one() const { return c.size() == 1 && c[0] == 1; }
};

Fp addm(Fp a, Fp b, Fp p) { return (a + b) % p; }
Fp subm(Fp a, Fp b, Fp p) { return (a + p - b) % p; }
Fp mulm(Fp a, Fp b, Fp p) { return (a * b) % p; } // p < 2^31 keeps the product in range

Fp powm(Fp a, Fp e, Fp p) {
    Fp r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
Fp invm(Fp a, Fp p) { return powm(a % p, p - 2, p); }

FpPoly fp_make(Fp p, std::vector<Fp> c) {
    FpPoly r{p, std::move(c)};
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    std::vector<Fp> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = subm(c[i], b.c[i], a.p);
    return fp_make(a.p, std::move(c));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.zero() || b.zero()) return FpPoly{a.p, {}};
    std::vector<Fp> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a.c[i], b.c[j], a.p), a.p);
    return fp_make(a.p, std::move(c));
}

FpPoly fp_scale(const FpPoly& a, Fp s) {
    FpPoly r = a;
    for (auto& x : r.c) x = mulm(x, s, a.p);
    r.trim();
    return r;
}

// (quotient, remainder)
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.zero()) throw InternalError("fp division by zero");
    FpPoly q{a.p, {}}, r = a;
    Fp binv = invm(b.c.back(), a.p);
    while (!r.zero() && r.deg() >= b.deg()) {
        std::size_t k = static_cast<std::size_t>(r.deg() - b.deg());
        Fp f = mulm(r.c.back(), binv, a.p);
        if (q.c.size() < k + 1) q.c.resize(k + 1, 0);
        q.c[k] = addm(q.c[k], f, a.p);
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[i + k] = subm(r.c[i + k], mulm(f, b.c[i], a.p), a.p);
        r.trim();
    }
    q.trim();
    return {q, r};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
    if (a.zero()) return a;
    return fp_scale(a, invm(a.c.back(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FpPoly fp_deriv(const FpPoly& a) {
    if (a.c.size() <= 1) return FpPoly{a.p, {}};
    std::vector<Fp> c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = mulm(a.c[i], i % a.p, a.p);
    return fp_make(a.p, std::move(c));
}

FpPoly fp_powmod(const FpPoly& a, const Integer& e, const FpPoly& m) {
    FpPoly r{a.p, {1}};
    FpPoly base = fp_mod(a, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = fp_mod(fp_mul(r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, base), m);
    }
    return r;
}

// inverse of a modulo m (gcd(a, m) = 1) via extended Euclid
FpPoly fp_invmod(const FpPoly& a, const FpPoly& m) {
    FpPoly r0 = m, r1 = fp_mod(a, m);
    FpPoly t0{a.p, {}}, t1{a.p, {1}};
    while (!r1.zero()) {
        auto [q, r2] = fp_divmod(r0, r1);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.deg() != 0) throw InternalError("fp_invmod: arguments not coprime");
    return fp_scale(t0, invm(r0.c[0], a.p));
}

// ----- modular factorization of a squarefree monic image -----

// distinct-degree then equal-degree (Cantor-Zassenhaus); deterministic via rng
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, Rng& rng) {
    Fp p = f.p;
    std::vector<FpPoly> out;
    std::vector<std::pair<FpPoly, int>> stages; // (product of degree-k factors, k)
    FpPoly v = fp_monic(f);
    FpPoly y = fp_make(p, {0, 1});
    FpPoly h = y;
    int k = 0;
    while (v.deg() > 0) {
        ++k;
        if (2 * k > v.deg()) { // what is left is irreducible
            stages.push_back({v, v.deg()});
            break;
        }
        h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), v);
        FpPoly g = fp_gcd(fp_sub(h, y), v);
        if (g.deg() > 0) {
            stages.push_back({g, k});
            v = fp_divmod(v, g).first;
            h = fp_mod(h, v);
        }
    }
    for (auto& [prod, deg] : stages) {
        // split prod into its irreducible factors, all of degree `deg`
        std::vector<FpPoly> work{prod};
        while (!work.empty()) {
            FpPoly g = work.back();
            work.pop_back();
            if (g.deg() == deg) {
                out.push_back(fp_monic(g));
                continue;
            }
            // Cantor-Zassenhaus split: gcd(a^((p^deg-1)/2) - 1, g)
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(deg));
            Integer e = (q - 1) / 2;
            while (true) {
                std::vector<Fp> rc(static_cast<std::size_t>(g.deg()), 0);
                for (auto& x : rc) x = rng.below(p);
                FpPoly a = fp_make(p, std::move(rc));
                if (a.zero()) continue;
                FpPoly b = fp_powmod(a, e, g);
                b = fp_sub(b, FpPoly{p, {1}});
                FpPoly d = fp_gcd(b, g);
                if (d.deg() > 0 && d.deg() < g.deg()) {
                    work.push_back(d);
                    work.push_back(fp_divmod(g, d).first);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.c < b.c;
    });
    return out;
}

// ----- integer-coefficient helpers -----

struct ZPoly {
    std::vector<Integer> c; // trimmed
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
};

ZPoly z_of_univ(const UnivPoly& u) {
    // u must have integer coefficients
    ZPoly r;
    for (int i = 0; i <= u.degree(); ++i) {
        Rational q = u.coeff(static_cast<std::size_t>(i));
        if (q.get_den() != 1) throw InternalError("z_of_univ: non-integer coefficient");
        r.c.push_back(q.get_num());
    }
    r.trim();
    return r;
}

UnivPoly univ_of_z(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.c.size());
    for (auto& x : z.c) c.push_back(Rational(x));
    return UnivPoly(std::move(c));
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const Integer& M) {
    if (a.zero() || b.zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] += a.c[i] * b.c[j];
            mpz_mod(r.c[i + j].get_mpz_t(), r.c[i + j].get_mpz_t(), M.get_mpz_t());
        }
    r.trim();
    return r;
}

ZPoly z_scale_mod(const ZPoly& a, const Integer& s, const Integer& M) {
    ZPoly r = a;
    for (auto& x : r.c) {
        x *= s;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
    }
    r.trim();
    return r;
}

// symmetric representative in (-M/2, M/2]
ZPoly z_balance(ZPoly a, const Integer& M) {
    Integer half = M / 2;
    for (auto& x : a.c) {
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        if (x > half) x -= M;
    }
    a.trim();
    return a;
}

FpPoly z_to_fp(const ZPoly& a, Fp p) {
    std::vector<Fp> c;
    c.reserve(a.c.size());
    for (auto& x : a.c) {
        Integer m;
        mpz_mod_ui(m.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
        c.push_back(m.get_ui());
    }
    return fp_make(p, std::move(c));
}

ZPoly z_of_fp(const FpPoly& a) {
    ZPoly r;
    for (auto x : a.c) r.c.push_back(Integer(static_cast<unsigned long>(x)));
    r.trim();
    return r;
}

// ----- Hensel lifting (linear, all factors at once) -----
//
// Invariant: F == lc * prod(factors) (mod p^k), factors monic mod p^k.
// One step uses fixed Bezout data tau_i with sum(tau_i * sigma_i) == 1 (mod p)
// where sigma_i = lc * prod_{j != i} f_j mod p.
std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<FpPoly>& mod_factors,
                               Fp p, unsigned e) {
    const std::size_t r = mod_factors.size();
    // Bezout cofactors mod p: tau_i = sigma_i^{-1} mod f_i
    std::vector<FpPoly> tau(r);
    {
        Fp lcp;
        {
            Integer m;
            mpz_mod_ui(m.get_mpz_t(), F.c.back().get_mpz_t(), static_cast<unsigned long>(p));
            lcp = m.get_ui();
        }
        for (std::size_t i = 0; i < r; ++i) {
            FpPoly sigma{p, {lcp}};
            for (std::size_t j = 0; j < r; ++j)
                if (j != i) sigma = fp_mul(sigma, mod_factors[j]);
            tau[i] = fp_invmod(fp_mod(sigma, mod_factors[i]), mod_factors[i]);
        }
    }

    std::vector<ZPoly> lifted;
    lifted.reserve(r);
    for (auto& f : mod_factors) lifted.push_back(z_of_fp(f));

    Integer Mk(static_cast<unsigned long>(p)); // current modulus p^k
    for (unsigned k = 1; k < e; ++k) {
        Integer Mk1 = Mk * static_cast<unsigned long>(p);
        // delta = (F - lc * prod) / p^k  (mod p)
        ZPoly prod;
        prod.c = {F.c.back()};
        for (auto& f : lifted) prod = z_mul_mod(prod, f, Mk1);
        ZPoly diff;
        diff.c.assign(std::max(F.c.size(), prod.c.size()), Integer(0));
        for (std::size_t i = 0; i < F.c.size(); ++i) diff.c[i] = F.c[i];
        for (std::size_t i = 0; i < prod.c.size(); ++i) diff.c[i] -= prod.c[i];
        for (auto& x : diff.c) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), Mk1.get_mpz_t());
        diff.trim();
        for (auto& x : diff.c) {
            if (x % Mk != 0) throw InternalError("hensel_lift: invariant broken");
            x /= Mk;
        }
        FpPoly delta = z_to_fp(diff, p);
        for (std::size_t i = 0; i < r; ++i) {
            FpPoly upd = fp_mod(fp_mul(tau[i], delta), mod_factors[i]);
            ZPoly zu = z_of_fp(upd);
            // f_i += p^k * upd (upd has lower degree, the monic top is untouched)
            for (std::size_t j = 0; j < zu.c.size(); ++j) {
                if (lifted[i].c.size() <= j) throw InternalError("hensel_lift: degree overflow");
                lifted[i].c[j] += Mk * zu.c[j];
                mpz_mod(lifted[i].c[j].get_mpz_t(), lifted[i].c[j].get_mpz_t(), Mk1.get_mpz_t());
            }
        }
        Mk = Mk1;
    }
    return lifted;
}

Rational univ_content_primitive(UnivPoly& f) {
    Rational c = f.content();
    if (f.lc() < 0) c = -c;
    f = f.scaled(Rational(1) / c);
    return c;
}

// seeded deterministically from the input polynomial
std::uint64_t poly_seed(const UnivPoly& f) {
    std::ostringstream os;
    for (int i = 0; i <= f.degree(); ++i)
        os << rational_str(f.coeff(static_cast<std::size_t>(i))) << ";";
    return fnv1a(os.str());
}

constexpr Fp kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                          10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};

// factor a primitive squarefree integer polynomial of degree >= 1
std::vector<UnivPoly> factor_squarefree_primitive(const UnivPoly& f) {
    if (f.degree() == 1) return {f};
    ZPoly F = z_of_univ(f);
    const Integer& lc = F.c.back();

    // pick a prime keeping f squarefree with the same degree
    Fp p = 0;
    FpPoly fbar;
    for (Fp cand : kPrimes) {
        if (lc % static_cast<unsigned long>(cand) == 0) continue;
        FpPoly g = z_to_fp(F, cand);
        if (g.deg() != F.deg()) continue;
        if (fp_gcd(g, fp_deriv(g)).deg() != 0) continue;
        p = cand;
        fbar = fp_monic(g);
        break;
    }
    if (p == 0)
        // astronomically unlikely at desk scale; report honestly
        throw ResourceLimitError("no usable prime for factorization");

    Rng rng(poly_seed(f) ^ 0x5eedf00du);
    std::vector<FpPoly> mod_factors = fp_factor_squarefree(fbar, rng);
    if (mod_factors.size() == 1) return {f}; // irreducible mod p => irreducible

    // lift bound: p^e > 2 * |lc| * 2^d * ||f||_2
    Integer norm2sq(0);
    for (auto& x : F.c) norm2sq += x * x;
    Integer norm2 = sqrt(norm2sq) + 1;
    Integer bound = abs(lc) * norm2;
    bound <<= static_cast<unsigned>(2 * F.deg() + 2); // generous Mignotte headroom
    unsigned e = 1;
    Integer M(static_cast<unsigned long>(p));
    while (M <= bound) {
        M *= static_cast<unsigned long>(p);
        ++e;
    }

    std::vector<ZPoly> lifted = hensel_lift(F, mod_factors, p, e);

    // recombination
    std::vector<UnivPoly> out;
    std::vector<std::size_t> active(lifted.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    UnivPoly rest = f;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        ZPoly prod;
        prod.c = {z_of_univ(rest).c.back()};
        for (auto i : subset) prod = z_mul_mod(prod, lifted[i], M);
        prod = z_balance(std::move(prod), M);
        if (prod.zero()) return false;
        UnivPoly cand = univ_of_z(prod);
        univ_content_primitive(cand);
        if (cand.degree() < 1) return false;
        auto [q, rem] = rest.divmod(cand);
        if (!rem.is_zero()) return false;
        out.push_back(cand);
        rest = q;
        univ_content_primitive(rest);
        return true;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t s = 1; 2 * s <= active.size() && !progress; ++s) {
            // iterate subsets of size s in lexicographic index order
            std::vector<std::size_t> idx(s);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                std::vector<std::size_t> subset;
                for (auto i : idx) subset.push_back(active[i]);
                if (try_subset(subset)) {
                    std::vector<std::size_t> na;
                    for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) { ++j; continue; }
                        na.push_back(active[i]);
                    }
                    active = std::move(na);
                    progress = true;
                    break;
                }
                // next combination
                std::size_t i = s;
                bool moved = false;
                while (i-- > 0) {
                    if (idx[i] != i + active.size() - s) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                        moved = true;
                        break;
                    }
                }
                if (!moved) break;
            }
        }
    }
    if (rest.degree() >= 1) out.push_back(rest);
    std::sort(out.begin(), out.end(), [](const UnivPoly& a, const UnivPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

} // namespace

std::vector<UnivPoly> factor_univariate(const UnivPoly& f) {
    if (f.is_zero()) throw DivisionByZeroError("factoring the zero polynomial");
    UnivPoly work = f;
    univ_content_primitive(work);
    std::vector<UnivPoly> out;
    if (work.degree() < 1) return out;
    // squarefree split: repeatedly peel gcd(f, f')
    // (simple chain rather than Yun's algorithm; desk-scale degrees)
    while (work.degree() >= 1) {
        UnivPoly g = univ_gcd(work, work.derivative());
        if (g.degree() == 0) {
            auto fs = factor_squarefree_primitive(work);
            out.insert(out.end(), fs.begin(), fs.end());
            break;
        }
        UnivPoly sqfree = univ_exact_div(work, g);
        univ_content_primitive(sqfree);
        auto fs = factor_squarefree_primitive(sqfree);
        out.insert(out.end(), fs.begin(), fs.end());
        work = g;
        univ_content_primitive(work);
    }
    std::sort(out.begin(), out.end(), [](const UnivPoly& a, const UnivPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

Irreducibility univariate_irreducible(const UnivPoly& f) {
    if (f.degree() < 1) return Irreducibility::Refuted;
    UnivPoly work = f;
    univ_content_primitive(work);
    if (univ_gcd(work, work.derivative()).degree() > 0) return Irreducibility::Refuted;
    auto fs = factor_squarefree_primitive(work);
    return fs.size() == 1 ? Irreducibility::Certified : Irreducibility::Refuted;
}

namespace {

// restrict p to the affine line x_v = dir_v * s + off_v; result in s
UnivPoly line_restrict(const Polynomial& p, const std::vector<Variable>& vars,
                       const std::vector<long>& dir, const std::vector<long>& off) {
    UnivPoly acc;
    for (auto& [m, c] : p.terms()) {
        UnivPoly t(c.rational_value());
        for (auto& [v, e] : m.entries()) {
            std::size_t k = 0;
            while (k < vars.size() && !(vars[k] == v)) ++k;
            UnivPoly lin(std::vector<Rational>{Rational(off[k]), Rational(dir[k])});
            for (std::uint32_t i = 0; i < e; ++i) t = t * lin;
        }
        acc = acc + t;
    }
    return acc;
}

bool all_coeffs_rational(const Polynomial& p) {
    for (auto& [m, c] : p.terms())
        if (!c.is_rational()) return false;
    return true;
}

// p as a polynomial in its single support variable; requires rational coeffs
UnivPoly to_univ_in(const Polynomial& p, Variable v) {
    std::vector<Rational> c(p.degree_in(v) + 1, Rational(0));
    for (auto& [m, cf] : p.terms()) c[m.exponent(v)] = cf.rational_value();
    return UnivPoly(std::move(c));
}

} // namespace

Irreducibility certify_irreducible(const Polynomial& p, std::uint64_t seed) {
    if (p.is_zero() || p.is_constant()) return Irreducibility::Refuted;
    std::vector<Variable> vars = p.support();

    if (p.field() == GroundField::Qt && !all_coeffs_rational(p)) {
        // t genuinely occurs; only the univariate t-linear criterion is exact
        if (vars.size() != 1) return Irreducibility::Unverified;
        Variable v = vars[0];
        UnivPoly A, B; // p = A(v) + t * B(v)
        for (auto& [m, c] : p.terms()) {
            if (!c.den().is_one() || c.num().degree() > 1) return Irreducibility::Unverified;
            std::uint32_t e = m.exponent(v);
            A = A + UnivPoly::monomial(c.num().coeff(0), e);
            B = B + UnivPoly::monomial(c.num().coeff(1), e);
        }
        UnivPoly g = univ_gcd(A, B);
        if (g.degree() == 0) return Irreducibility::Certified;
        if (g.degree() < static_cast<int>(p.degree_in(v))) return Irreducibility::Refuted;
        // p = g * (unit of Q(t)); decide g over Q
        return univariate_irreducible(g);
    }

    // rational coefficients from here on (exact over Q, and over Q(t) because
    // the extension Q(t)/Q is purely transcendental)
    if (vars.size() == 1) return univariate_irreducible(to_univ_in(p, vars[0]));

    const std::uint32_t d = p.total_degree();
    Rng rng(seed ^ fnv1a(print_poly(p, PrintStyle::Compact)));
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<long> dir(vars.size()), off(vars.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            dir[i] = rng.range(-3, 3);
            off[i] = rng.range(-3, 3);
            if (dir[i] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        UnivPoly r = line_restrict(p, vars, dir, off);
        if (r.degree() != static_cast<int>(d)) continue; // degree dropped; line unusable
        if (univariate_irreducible(r) == Irreducibility::Certified)
            return Irreducibility::Certified;
    }
    return Irreducibility::Unverified;
}

} // namespace taugen
