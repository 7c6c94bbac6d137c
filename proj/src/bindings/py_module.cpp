// Python bindings. The surface mirrors the CLI: operations take the same
// text formats (pair manifests, ideal files, system files, expressions) and
// return plain Python values, so scripts and the command line agree byte for
// byte on every canonical form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taugen/diff.hpp"
#include "taugen/enumerate.hpp"
#include "taugen/errors.hpp"
#include "taugen/generic_type.hpp"
#include "taugen/goodpair.hpp"
#include "taugen/io.hpp"
#include "taugen/oracle.hpp"
#include "taugen/stabilize.hpp"

namespace py = pybind11;
using namespace taugen;

namespace {

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

GoodPair pair_from_manifest_text(const std::string& text, bool permissive, std::uint64_t seed) {
    PairManifest man = parse_pair_manifest(text, "manifest");
    CheckResult res =
        check_good_pair(v_from_manifest(man), w_from_manifest(man), permissive, seed, man.point);
    if (!res.accepted)
        throw std::invalid_argument("the manifest does not present a good pair: condition " +
                                    res.failed_condition +
                                    (res.detail.empty() ? "" : " (" + res.detail + ")"));
    return *res.pair;
}

std::string ratexpr_str(const RatExpr& e) {
    Polynomial one = Polynomial::constant(e.field(), Rational(1));
    if (e.den == one) return print_poly(e.num);
    return "(" + print_poly(e.num) + ")/(" + print_poly(e.den) + ")";
}

py::dict dict_of_check(const CheckResult& res) {
    py::dict d;
    d["accepted"] = res.accepted;
    d["failed_condition"] = res.failed_condition;
    d["detail"] = res.detail;
    d["warning"] = res.warning;
    if (res.accepted) {
        const GoodPairCertificate& c = res.pair->certificate;
        d["m"] = c.m;
        py::list basis;
        for (auto i : c.basis_indices) basis.append(i);
        d["basis"] = basis;
        py::list forms;
        for (auto& f : res.pair->certificate.fiber_forms) {
            py::dict fd;
            fd["target"] = f.target;
            fd["constant"] = ratexpr_str(f.constant);
            py::list coeffs;
            for (auto& c2 : f.coeffs) coeffs.append(ratexpr_str(c2));
            fd["coeffs"] = coeffs;
            forms.append(fd);
        }
        d["fiber_forms"] = forms;
    }
    return d;
}

ParseContext diff_ctx(GroundField field, std::uint32_t n) { return {field, n, false, true}; }

EnumerationBounds bounds_of(std::uint32_t n, std::uint32_t r_max, std::uint32_t deg_max,
                            std::uint32_t height_max, std::uint64_t count) {
    EnumerationBounds b;
    b.n = n;
    b.r_max = r_max;
    b.deg_max = deg_max;
    b.height_max = height_max;
    b.count = count;
    return b;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computer algebra for good pairs over ordinary differential fields: "
              "validation with certificates, generic-type membership, prolongation "
              "stabilization, and the canonical pair/formula listings.";

    py::register_exception<ParseError>(m, "TaugenParseError", PyExc_ValueError);
    py::register_exception<NotSolvedFormError>(m, "NotSolvedFormError", PyExc_ValueError);
    py::register_exception<PointError>(m, "PointError", PyExc_ValueError);
    py::register_exception<PrimalityEvidenceError>(m, "PrimalityEvidenceError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<DegenerateDenominatorError>(m, "DegenerateDenominatorError",
                                                       PyExc_RuntimeError);

    m.def(
        "check_pair",
        [](const std::string& manifest, bool permissive, std::uint64_t seed) {
            PairManifest man = parse_pair_manifest(manifest, "manifest");
            CheckResult res = check_good_pair(v_from_manifest(man), w_from_manifest(man),
                                              permissive, seed, man.point);
            return dict_of_check(res);
        },
        py::arg("manifest"), py::arg("permissive") = false, py::arg("seed") = 0,
        "Validate a pair manifest; returns the verdict with the certificate on acceptance.");

    m.def(
        "member",
        [](const std::string& manifest, const std::string& f, bool permissive,
           std::uint64_t seed) {
            GoodPair pair = pair_from_manifest_text(manifest, permissive, seed);
            DeltaGenericType type(pair);
            DiffPolynomial q(pair.n, parse_poly(f, diff_ctx(type.field(), pair.n)));
            return type.member(q);
        },
        py::arg("manifest"), py::arg("f"), py::arg("permissive") = false, py::arg("seed") = 0,
        "Does the differential polynomial vanish at the generic solution of the pair?");

    m.def(
        "decide",
        [](const std::string& manifest, const std::string& phi, bool permissive,
           std::uint64_t seed) {
            GoodPair pair = pair_from_manifest_text(manifest, permissive, seed);
            DeltaGenericType type(pair);
            return type.decide(parse_formula(phi, diff_ctx(type.field(), pair.n)));
        },
        py::arg("manifest"), py::arg("phi"), py::arg("permissive") = false, py::arg("seed") = 0,
        "Truth value of a quantifier-free formula at the generic solution.");

    m.def(
        "series_check",
        [](const std::string& manifest, const std::string& f, std::uint32_t order,
           std::uint64_t seed, bool permissive) {
            GoodPair pair = pair_from_manifest_text(manifest, permissive, seed);
            DiffPolynomial q(pair.n, parse_poly(f, diff_ctx(pair.V.ideal.field(), pair.n)));
            SeriesOutcome oc = series_oracle(pair, q, order, seed);
            py::dict d;
            d["refuted"] = oc.refuted;
            d["order"] = oc.order;
            d["seed_used"] = oc.seed_used;
            if (oc.refuted) d["witness"] = rational_str(oc.witness);
            return d;
        },
        py::arg("manifest"), py::arg("f"), py::arg("order") = kDefaultSeriesOrder,
        py::arg("seed") = 0, py::arg("permissive") = false,
        "Truncated power-series probe through the stored point; refutes false zeros.");

    m.def(
        "stabilize",
        [](const std::string& system, bool permissive, std::uint64_t seed) {
            SystemFile sf = parse_system_file(system, "system");
            StabilizeResult res = stabilize(DiffSystem::from_file(sf), permissive, seed);
            py::dict d;
            d["r"] = res.trace.r;
            py::list ds;
            for (int v : res.trace.d) ds.append(v);
            d["d"] = ds;
            d["stacked_n"] = res.stacked_n;
            d["check"] = dict_of_check(res.check);
            if (res.check.accepted) {
                // same provenance tag the command line writes
                std::string recipe = "stabilize(";
                for (std::size_t i = 0; i < sf.equations.size(); ++i) {
                    if (i) recipe += ";";
                    recipe += sf.equations[i].first.name() + "=" +
                              print_poly(sf.equations[i].second, PrintStyle::Compact);
                }
                recipe += ")";
                d["manifest"] =
                    format_pair_manifest(manifest_from_pair(*res.check.pair, recipe));
            }
            return d;
        },
        py::arg("system"), py::arg("permissive") = false, py::arg("seed") = 0,
        "Stabilize a solved differential system into a good pair on stacked coordinates.");

    m.def(
        "prolongation",
        [](const std::string& ideal_text) {
            IdealFile f = parse_ideal_file(ideal_text, "ideal");
            if (f.with_u)
                throw std::invalid_argument("the prolongation acts on ideals over x1..xn only");
            Ideal V(f.field, x_block(f.n), f.gens);
            Ideal tau = prolongation_ideal(V, f.n);
            IdealFile out;
            out.field = f.field;
            out.n = f.n;
            out.with_u = true;
            for (auto& g : tau.groebner_basis()) out.gens.push_back(g.cleared_primitive());
            return format_ideal_file(out);
        },
        py::arg("ideal"), "Prolongation ideal of a variety, as an ideal file over (x, u).");

    m.def(
        "groebner",
        [](const std::string& ideal_text, const std::string& order) {
            IdealFile f = parse_ideal_file(ideal_text, "ideal");
            std::vector<Variable> amb = f.with_u ? xu_block(f.n) : x_block(f.n);
            Ideal I(f.field, amb, f.gens);
            MonomialOrder ord = I.default_order();
            if (order == "lex") ord = MonomialOrder::lex(amb);
            else if (order != "grevlex")
                throw std::invalid_argument("order must be 'grevlex' or 'lex'");
            std::vector<std::string> out;
            for (auto& g : I.groebner_basis(ord)) out.push_back(print_poly(g.cleared_primitive()));
            return out;
        },
        py::arg("ideal"), py::arg("order") = "grevlex",
        "Reduced Groebner basis of an ideal file, printed in cleared primitive form.");

    m.def(
        "normal_form",
        [](const std::string& ideal_text, const std::string& f_text) {
            IdealFile f = parse_ideal_file(ideal_text, "ideal");
            std::vector<Variable> amb = f.with_u ? xu_block(f.n) : x_block(f.n);
            Ideal I(f.field, amb, f.gens);
            ParseContext ctx{f.field, f.n, f.with_u, false};
            return print_poly(I.normal_form(parse_poly(f_text, ctx)));
        },
        py::arg("ideal"), py::arg("f"), "Normal form of f modulo the ideal (default order).");

    m.def(
        "enumerate_pairs",
        [](std::uint32_t n, std::uint32_t r_max, std::uint32_t deg_max, std::uint32_t height_max,
           std::uint64_t count) {
            py::list events;
            enumerate_pairs(bounds_of(n, r_max, deg_max, height_max, count),
                            [&](const EnumEvent& ev) {
                                py::dict d;
                                switch (ev.kind) {
                                    case EnumEvent::Kind::Pair: d["kind"] = "pair"; break;
                                    case EnumEvent::Kind::Duplicate: d["kind"] = "dup"; break;
                                    case EnumEvent::Kind::Skip: d["kind"] = "skip"; break;
                                }
                                d["index"] = ev.index;
                                d["cell"] = py::make_tuple(ev.cell_height, ev.cell_degree);
                                d["recipe"] = ev.recipe;
                                d["detail"] = ev.detail;
                                if (ev.pair)
                                    d["manifest"] = format_pair_manifest(
                                        manifest_from_pair(*ev.pair, ev.recipe));
                                events.append(d);
                                return true;
                            });
            return events;
        },
        py::arg("n"), py::arg("r_max") = 1, py::arg("deg_max") = 1, py::arg("height_max") = 1,
        py::arg("count") = 1,
        "Stream the canonical listing until `count` pairs have been emitted; returns all "
        "events (pairs, duplicates, skips) in order.");

    m.def(
        "formula_at",
        [](std::uint32_t n, std::uint64_t j, std::uint32_t r_max, std::uint32_t deg_max,
           std::uint32_t height_max) {
            return print_formula(
                formula_at(n, bounds_of(n, r_max, deg_max, height_max, 0), j));
        },
        py::arg("n"), py::arg("j"), py::arg("r_max") = 1, py::arg("deg_max") = 1,
        py::arg("height_max") = 1, "The j-th formula of the canonical stream, printed.");

    m.def(
        "listing_membership",
        [](std::uint64_t i, std::uint64_t j, std::uint32_t n, std::uint32_t r_max,
           std::uint32_t deg_max, std::uint32_t height_max) {
            return listing_membership(i, j, bounds_of(n, r_max, deg_max, height_max, 0));
        },
        py::arg("i"), py::arg("j"), py::arg("n") = 1, py::arg("r_max") = 1,
        py::arg("deg_max") = 1, py::arg("height_max") = 1,
        "Does formula j hold at the generic solution of the i-th listed pair?");

    m.def(
        "canonical",
        [](const std::string& expr, std::uint32_t n, const std::string& field, bool allow_u,
           bool allow_derivs) {
            GroundField f = field == "Q(t)" ? GroundField::Qt : GroundField::Q;
            if (field != "Q" && field != "Q(t)")
                throw std::invalid_argument("field must be 'Q' or 'Q(t)'");
            ParseContext ctx{f, n, allow_u, allow_derivs};
            return print_poly(parse_poly(expr, ctx));
        },
        py::arg("expr"), py::arg("n") = 1, py::arg("field") = "Q", py::arg("allow_u") = false,
        py::arg("allow_derivs") = true,
        "Parse an expression and print its canonical form.");

#ifdef TAUGEN_VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(TAUGEN_VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
