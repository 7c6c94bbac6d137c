// Stabilization of solved differential systems.
//
// Every derivative x_i^(j) has a parametric normal form modulo the system:
// below the leader it is itself, at the leader it is the right-hand side,
// and above it differentiation followed by one substitution pass (the
// derivative of a parametric form meets each leader at most exactly). Jet
// ideals, the dimension trace, and the stacked pair all come from these
// normal forms.

#include "taugen/stabilize.hpp"

#include <map>
#include <utility>

namespace taugen {

namespace {

struct JetBuilder {
    GroundField field;
    std::uint32_t n;
    std::map<std::uint32_t, Polynomial> rhs;      // coordinate -> H_i
    std::map<std::uint32_t, std::uint32_t> kord;  // coordinate -> leader order
    std::map<Variable, Polynomial> leader_images; // deriv(i, k_i) -> H_i
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> cache;

    explicit JetBuilder(const DiffSystem& s) : field(s.field()), n(s.n()) {
        for (auto& [lead, h] : s.equations()) {
            rhs.emplace(lead.index, h);
            kord.emplace(lead.index, lead.order);
            leader_images.emplace(lead, h);
        }
    }

    // parametric normal form of x_i^(j)
    const Polynomial& expr(std::uint32_t i, std::uint32_t j) {
        auto key = std::make_pair(i, j);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Polynomial p(field);
        auto oit = kord.find(i);
        if (oit == kord.end() || j < oit->second)
            p = Polynomial::variable(field, Variable::deriv(i, j));
        else if (j == oit->second)
            p = rhs.at(i);
        else
            p = formal_derivative_body(expr(i, j - 1)).substitute(leader_images);
        return cache.emplace(key, std::move(p)).first->second;
    }

    std::vector<Variable> jet_ambient(std::uint32_t s) const {
        std::vector<Variable> amb = x_block(n);
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= s; ++j) amb.push_back(Variable::deriv(i, j));
        return amb;
    }

    Ideal jet_ideal(std::uint32_t s) {
        std::vector<Polynomial> gens;
        for (auto& [i, k] : kord)
            for (std::uint32_t j = k; j <= s; ++j)
                gens.push_back(Polynomial::variable(field, Variable::deriv(i, j)) - expr(i, j));
        return Ideal(field, jet_ambient(s), std::move(gens));
    }
};

} // namespace

StabilizeResult stabilize(const DiffSystem& S, bool permissive, std::uint64_t seed) {
    JetBuilder jb(S);
    const std::uint32_t n = S.n();
    const std::uint32_t r = S.max_leader_order();

    StabilizeResult out;
    out.trace.r = r;
    int prev_dim = 0;
    for (std::uint32_t s = 0; s <= r + 1; ++s) {
        Ideal J = jb.jet_ideal(s);
        int dim = J.dimension().first;
        out.trace.d.push_back(s == 0 ? dim : dim - prev_dim);
        prev_dim = dim;
        out.trace.prolongation_ideals.push_back(std::move(J));
    }
    const std::vector<int>& d = out.trace.d;
    for (std::size_t s = 0; s + 1 < d.size(); ++s)
        if (d[s + 1] > d[s]) throw InternalError("stabilization increments failed to decrease");
    if (d[0] > static_cast<int>(n))
        throw InternalError("stabilization trace exceeds n at order 0");
    if (d[r] != d[r + 1])
        throw InternalError("stabilization did not settle at the maximal leader order");

    const std::uint32_t N = n * (r + 1);
    out.stacked_n = N;

    // stacked coordinates: x_i^(j) becomes X_{j*n+i}
    std::map<Variable, Variable> stack;
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= r; ++j)
            stack.emplace(Variable::deriv(i, j), Variable::x(j * n + i));

    std::vector<Polynomial> vgens;
    for (auto& [i, k] : jb.kord)
        for (std::uint32_t j = k; j <= r; ++j)
            vgens.push_back(Polynomial::variable(jb.field, Variable::x(j * n + i)) -
                            jb.expr(i, j).rename(stack));

    std::vector<Polynomial> wgens = vgens;
    for (std::uint32_t l = 1; l <= r * n; ++l)
        wgens.push_back(Polynomial::variable(jb.field, Variable::u(l)) -
                        Polynomial::variable(jb.field, Variable::x(l + n)));
    for (auto& [i, k] : jb.kord)
        wgens.push_back(Polynomial::variable(jb.field, Variable::u(r * n + i)) -
                        jb.expr(i, r + 1).rename(stack));

    std::string tag =
        (jb.kord.size() == n) ? "constructed:graph" : "constructed:bundle";
    VarietyPresentation Vp = make_v_presentation(jb.field, N, std::move(vgens), tag);
    VarietyPresentation Wp = make_w_presentation(jb.field, N, std::move(wgens), tag);
    out.check = check_good_pair(Vp, Wp, permissive, seed);
    return out;
}

} // namespace taugen
