#include "taugen/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taugen/diff.hpp"
#include "taugen/enumerate.hpp"
#include "taugen/generic_type.hpp"
#include "taugen/goodpair.hpp"
#include "taugen/io.hpp"
#include "taugen/oracle.hpp"
#include "taugen/stabilize.hpp"

namespace taugen {

namespace {

namespace fs = std::filesystem;

std::string print_ratexpr(const RatExpr& e) {
    Polynomial one = Polynomial::constant(e.field(), Rational(1));
    if (e.den == one) return print_poly(e.num);
    return "(" + print_poly(e.num) + ")/(" + print_poly(e.den) + ")";
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

CheckResult manifest_check(const PairManifest& man, bool permissive, std::uint64_t seed) {
    VarietyPresentation V = v_from_manifest(man);
    VarietyPresentation W = w_from_manifest(man);
    return check_good_pair(V, W, permissive, seed, man.point);
}

void describe_check(Report& rep, const CheckResult& res) {
    rep.add("accepted", res.accepted ? "yes" : "no");
    if (!res.accepted) {
        rep.add("failed-condition", res.failed_condition);
        if (!res.detail.empty()) rep.add("detail", res.detail);
        return;
    }
    const GoodPairCertificate& c = res.pair->certificate;
    rep.add("m", std::to_string(c.m));
    std::string basis;
    for (std::size_t j = 0; j < c.basis_indices.size(); ++j)
        basis += (j ? "," : "") + ("u" + std::to_string(c.basis_indices[j]));
    rep.add("basis", basis.empty() ? "-" : basis);
    if (!res.warning.empty()) rep.add("warning", res.warning);
}

std::vector<std::string> fiber_form_lines(const GoodPairCertificate& c) {
    std::vector<std::string> lines;
    for (auto& form : c.fiber_forms) {
        std::string rhs;
        bool constant_zero = form.constant.is_zero();
        if (!constant_zero) rhs = print_ratexpr(form.constant);
        for (std::size_t j = 0; j < form.coeffs.size(); ++j) {
            if (form.coeffs[j].is_zero()) continue;
            if (!rhs.empty()) rhs += " + ";
            rhs += print_ratexpr(form.coeffs[j]) + "*u" + std::to_string(c.basis_indices[j]);
        }
        if (rhs.empty()) rhs = "0";
        lines.push_back("u" + std::to_string(form.target) + " = " + rhs);
    }
    return lines;
}

int emit(std::ostream& out, const Report& rep) {
    out << rep.str();
    return 0;
}

// ----- subcommand handlers -----

int cmd_check_pair(const std::string& path, bool permissive, std::uint64_t seed,
                   std::ostream& out) {
    PairManifest man = read_pair_manifest(path);
    CheckResult res = manifest_check(man, permissive, seed);
    Report rep;
    rep.add("command", "check-pair");
    rep.add("input", path);
    rep.add("seed", std::to_string(seed));
    rep.add("n", std::to_string(man.n));
    describe_check(rep, res);
    if (res.accepted) rep.payload = fiber_form_lines(res.pair->certificate);
    emit(out, rep);
    return res.accepted ? 0 : 3;
}

int cmd_prolong(const std::string& path, std::ostream& out) {
    std::string text = slurp_file(path);
    Report rep;
    rep.add("command", "prolong");
    rep.add("input", path);
    Ideal V;
    std::uint32_t n = 1;
    if (text.rfind("taugen-pair", 0) == 0) {
        PairManifest man = parse_pair_manifest(text, path);
        V = v_from_manifest(man).ideal;
        n = man.n;
    } else {
        IdealFile f = parse_ideal_file(text, path);
        if (f.with_u)
            throw ParseError("prolong expects an ideal over x-coordinates only", 0, 0);
        V = Ideal(f.field, x_block(f.n), f.gens);
        n = f.n;
    }
    Ideal tau = prolongation_ideal(V, n);
    rep.add("n", std::to_string(n));
    rep.add("generators", std::to_string(tau.generators().size()));
    for (auto& g : tau.generators()) rep.payload.push_back(print_poly(g.cleared_primitive()));
    return emit(out, rep);
}

int cmd_member(const std::string& path, const std::string& expr, bool permissive,
               std::uint64_t seed, std::ostream& out) {
    PairManifest man = read_pair_manifest(path);
    ParseContext ctx{man.field, man.n, false, true};
    DiffPolynomial f(man.n, parse_poly(expr, ctx));
    CheckResult res = manifest_check(man, permissive, seed);
    Report rep;
    rep.add("command", "member");
    rep.add("input", path);
    rep.add("seed", std::to_string(seed));
    rep.add("f", print_poly(f.body()));
    describe_check(rep, res);
    if (!res.accepted) {
        emit(out, rep);
        return 3;
    }
    DeltaGenericType type(*res.pair);
    bool zero = type.member(f);
    rep.payload.push_back(zero ? "zero" : "nonzero");
    emit(out, rep);
    return zero ? 0 : 3;
}

int cmd_decide(const std::string& path, const std::string& expr, bool permissive,
               std::uint64_t seed, std::ostream& out) {
    PairManifest man = read_pair_manifest(path);
    ParseContext ctx{man.field, man.n, false, true};
    QFFormula phi = parse_formula(expr, ctx);
    CheckResult res = manifest_check(man, permissive, seed);
    Report rep;
    rep.add("command", "decide");
    rep.add("input", path);
    rep.add("seed", std::to_string(seed));
    rep.add("phi", print_formula(phi));
    describe_check(rep, res);
    if (!res.accepted) {
        emit(out, rep);
        return 3;
    }
    DeltaGenericType type(*res.pair);
    bool truth = type.decide(phi);
    rep.payload.push_back(truth ? "true" : "false");
    emit(out, rep);
    return truth ? 0 : 3;
}

std::string system_recipe(const SystemFile& sf) {
    std::string s = "stabilize(";
    for (std::size_t i = 0; i < sf.equations.size(); ++i) {
        if (i) s += ";";
        s += sf.equations[i].first.name() + "=" +
             print_poly(sf.equations[i].second, PrintStyle::Compact);
    }
    return s + ")";
}

int cmd_stabilize(const std::string& path, const std::string& out_path, bool permissive,
                  std::uint64_t seed, std::ostream& out) {
    SystemFile sf = read_system_file(path);
    DiffSystem S = DiffSystem::from_file(sf);
    StabilizeResult sr = stabilize(S, permissive, seed);
    Report rep;
    rep.add("command", "stabilize");
    rep.add("input", path);
    rep.add("seed", std::to_string(seed));
    rep.add("r", std::to_string(sr.trace.r));
    std::string dseq;
    for (std::size_t i = 0; i < sr.trace.d.size(); ++i)
        dseq += (i ? "," : "") + std::to_string(sr.trace.d[i]);
    rep.add("d-sequence", dseq);
    rep.add("stacked-n", std::to_string(sr.stacked_n));
    describe_check(rep, sr.check);
    if (!sr.check.accepted) {
        emit(out, rep);
        return 3;
    }
    PairManifest man = manifest_from_pair(*sr.check.pair, system_recipe(sf));
    if (!out_path.empty()) {
        write_pair_manifest(man, out_path);
        rep.add("manifest", out_path);
        emit(out, rep);
        return 0;
    }
    std::istringstream body(format_pair_manifest(man));
    for (std::string line; std::getline(body, line);) rep.payload.push_back(line);
    emit(out, rep);
    return 0;
}

std::string ledger_line(const EnumEvent& ev, const std::string& file) {
    switch (ev.kind) {
        case EnumEvent::Kind::Pair:
            return "pair\t" + std::to_string(ev.index) + "\t" + std::to_string(ev.cell_height) +
                   "\t" + std::to_string(ev.cell_degree) + "\t" + (file.empty() ? "-" : file) +
                   "\t" + ev.recipe;
        case EnumEvent::Kind::Duplicate:
            return "dup\t" + std::to_string(ev.index) + "\t" + ev.recipe;
        case EnumEvent::Kind::Skip: return "skip\t" + ev.recipe + "\t" + ev.detail;
    }
    throw InternalError("unknown enumeration event");
}

std::string pair_file_name(std::uint64_t index) {
    std::string digits = std::to_string(index);
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "pair-" + digits + ".pair";
}

int cmd_enumerate(const EnumerationBounds& asked, const std::string& emit_dir,
                  std::ostream& out) {
    Report rep;
    rep.add("command", "enumerate");
    rep.add("n", std::to_string(asked.n));
    rep.add("r-max", std::to_string(asked.r_max));
    rep.add("max-degree", std::to_string(asked.deg_max));
    rep.add("max-height", std::to_string(asked.height_max));
    rep.add("count", std::to_string(asked.count));
    rep.add("seed", "0"); // the listing is canonical; no randomness enters

    EnumerationBounds bounds = asked;
    std::vector<std::string> existing;
    std::uint64_t prior_pairs = 0;
    std::optional<std::ofstream> ledger;
    if (!emit_dir.empty()) {
        fs::create_directories(emit_dir);
        fs::path lp = fs::path(emit_dir) / "ledger.tsv";
        if (fs::exists(lp)) {
            std::istringstream in(slurp_file(lp.string()));
            for (std::string line; std::getline(in, line);) {
                existing.push_back(line);
                if (line.rfind("pair\t", 0) == 0) ++prior_pairs;
            }
        }
        ledger.emplace(lp.string(), std::ios::app);
        if (!*ledger) throw ParseError("cannot open " + lp.string() + " for appending", 0, 0);
        bounds.count = prior_pairs + asked.count; // replay, then emit the new ones
    }

    std::size_t lineno = 0;
    std::uint64_t emitted_new = 0;
    std::vector<std::string> stdout_lines;
    enumerate_pairs(bounds, [&](const EnumEvent& ev) {
        std::string file;
        if (!emit_dir.empty() && ev.kind == EnumEvent::Kind::Pair) file = pair_file_name(ev.index);
        std::string line = ledger_line(ev, file);
        if (lineno < existing.size()) {
            if (existing[lineno] != line)
                throw ParseError("existing ledger in " + emit_dir +
                                     " does not match this enumeration (different bounds?)",
                                 0, 0);
            ++lineno;
            return true;
        }
        ++lineno;
        if (ledger) {
            *ledger << line << "\n";
            if (ev.kind == EnumEvent::Kind::Pair) {
                PairManifest man = manifest_from_pair(*ev.pair, ev.recipe);
                write_pair_manifest(man, (fs::path(emit_dir) / file).string());
            }
        } else {
            stdout_lines.push_back(line);
        }
        if (ev.kind == EnumEvent::Kind::Pair) ++emitted_new;
        return true;
    });
    rep.add("emitted", std::to_string(emitted_new));
    if (!emit_dir.empty()) {
        rep.add("total", std::to_string(prior_pairs + emitted_new));
        rep.add("emit-dir", emit_dir);
    }
    rep.payload = std::move(stdout_lines);
    return emit(out, rep);
}

int cmd_series_check(const std::string& path, const std::string& expr, std::uint32_t order,
                     bool permissive, std::uint64_t seed, std::ostream& out) {
    PairManifest man = read_pair_manifest(path);
    ParseContext ctx{man.field, man.n, false, true};
    DiffPolynomial f(man.n, parse_poly(expr, ctx));
    CheckResult res = manifest_check(man, permissive, seed);
    Report rep;
    rep.add("command", "series-check");
    rep.add("input", path);
    rep.add("f", print_poly(f.body()));
    rep.add("order", std::to_string(order));
    describe_check(rep, res);
    if (!res.accepted) {
        rep.add("seed", std::to_string(seed));
        emit(out, rep);
        return 3;
    }
    SeriesOutcome oc = series_oracle(*res.pair, f, order, seed);
    rep.add("seed", std::to_string(oc.seed_used));
    if (oc.refuted) {
        rep.add("witness-order", std::to_string(oc.order));
        rep.add("witness-value", rational_to_string(oc.witness));
        rep.payload.push_back("refuted");
        emit(out, rep);
        return 3;
    }
    rep.payload.push_back("consistent");
    emit(out, rep);
    return 0;
}

int cmd_gb(const std::string& path, const std::string& order_spec, std::ostream& out) {
    IdealFile f = read_ideal_file(path);
    std::vector<Variable> ambient = f.with_u ? xu_block(f.n) : x_block(f.n);
    MonomialOrder ord;
    if (order_spec == "grevlex") {
        ord = MonomialOrder::grevlex(ambient);
    } else if (order_spec == "lex") {
        ord = MonomialOrder::lex(ambient);
    } else if (order_spec.rfind("block:", 0) == 0) {
        std::size_t k = 0;
        try {
            k = std::stoul(order_spec.substr(6));
        } catch (const std::exception&) {
            throw ParseError("malformed block order '" + order_spec + "'", 0, 0);
        }
        if (k == 0 || k >= ambient.size())
            throw ParseError("block split must satisfy 0 < K < " +
                                 std::to_string(ambient.size()),
                             0, 0);
        std::vector<Variable> keep(ambient.begin(), ambient.begin() + k);
        std::vector<Variable> elim(ambient.begin() + k, ambient.end());
        ord = MonomialOrder::block(elim, keep);
    } else {
        throw ParseError("unknown order '" + order_spec + "' (grevlex, lex, block:K)", 0, 0);
    }
    Ideal I(f.field, ambient, f.gens);
    GBReport gr = I.groebner_report(ord);
    Report rep;
    rep.add("command", "gb");
    rep.add("input", path);
    rep.add("order", order_spec);
    rep.add("size", std::to_string(gr.basis.size()));
    rep.add("pairs", std::to_string(gr.pair_count));
    rep.add("reductions", std::to_string(gr.reduction_count));
    for (auto& g : gr.basis) rep.payload.push_back(print_poly(g.cleared_primitive()));
    return emit(out, rep);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"good pairs, generic types, and the effective listing over Q"};
    app.name("taugen");
    app.require_subcommand(1);

    double timeout = 0.0;
    bool permissive = false;
    std::uint64_t seed = 0;
    app.add_option("--timeout", timeout, "wall-clock budget per computation, in seconds");
    app.add_flag("--permissive", permissive, "accept pairs whose primality is only asserted");
    app.add_option("--seed", seed, "seed for randomized certificates and the series oracle");

    std::string manifest_path, expr, phi_expr, out_path, emit_dir, ideal_path, system_path;
    std::string order_spec = "grevlex";
    std::uint32_t series_order = kDefaultSeriesOrder;
    EnumerationBounds bounds;

    CLI::App* c_check = app.add_subcommand("check-pair", "validate a pair manifest");
    c_check->add_option("manifest", manifest_path, "pair manifest file")->required();

    CLI::App* c_prolong =
        app.add_subcommand("prolong", "prolongation ideal of the variety in a manifest or ideal file");
    c_prolong->add_option("input", ideal_path, "pair manifest or ideal file")->required();

    CLI::App* c_member = app.add_subcommand("member", "is f zero on the generic solution?");
    c_member->add_option("manifest", manifest_path, "pair manifest file")->required();
    c_member->add_option("--f", expr, "differential polynomial")->required();

    CLI::App* c_decide = app.add_subcommand("decide", "truth of a quantifier-free formula");
    c_decide->add_option("manifest", manifest_path, "pair manifest file")->required();
    c_decide->add_option("--phi", phi_expr, "quantifier-free formula")->required();

    CLI::App* c_stab = app.add_subcommand("stabilize", "good pair from a solved system");
    c_stab->add_option("system", system_path, "system file")->required();
    c_stab->add_option("--out", out_path, "write the manifest here instead of stdout");

    CLI::App* c_enum = app.add_subcommand("enumerate", "canonical listing of good pairs");
    c_enum->add_option("--n", bounds.n, "differential indeterminates")->required();
    c_enum->add_option("--r-max", bounds.r_max, "max stacking depth");
    c_enum->add_option("--max-degree", bounds.deg_max, "max generator degree");
    c_enum->add_option("--max-height", bounds.height_max, "max coefficient height");
    c_enum->add_option("--count", bounds.count, "pairs to emit this run")->required();
    c_enum->add_option("--emit-dir", emit_dir, "write manifests and a resumable ledger here");

    CLI::App* c_series = app.add_subcommand("series-check", "power-series consistency probe");
    c_series->add_option("manifest", manifest_path, "pair manifest file")->required();
    c_series->add_option("--f", expr, "differential polynomial")->required();
    c_series->add_option("--order", series_order, "truncation order");

    CLI::App* c_gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    c_gb->add_option("ideal", ideal_path, "ideal file")->required();
    c_gb->add_option("--order", order_spec,
                     "grevlex | lex | block:K (tail block after position K is eliminated)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (timeout > 0.0) global_limits().max_seconds = timeout;

    try {
        if (app.got_subcommand(c_check)) return cmd_check_pair(manifest_path, permissive, seed, out);
        if (app.got_subcommand(c_prolong)) return cmd_prolong(ideal_path, out);
        if (app.got_subcommand(c_member)) return cmd_member(manifest_path, expr, permissive, seed, out);
        if (app.got_subcommand(c_decide)) return cmd_decide(manifest_path, phi_expr, permissive, seed, out);
        if (app.got_subcommand(c_stab)) return cmd_stabilize(system_path, out_path, permissive, seed, out);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(bounds, emit_dir, out);
        if (app.got_subcommand(c_series))
            return cmd_series_check(manifest_path, expr, series_order, permissive, seed, out);
        if (app.got_subcommand(c_gb)) return cmd_gb(ideal_path, order_spec, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what();
        if (e.line >= 1) err << " at line " << e.line << ", column " << e.column;
        err << "\n";
        return 2;
    } catch (const NotSolvedFormError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrimalityEvidenceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PointError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace taugen
