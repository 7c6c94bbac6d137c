#pragma once
// The text layer: expression parser/printer, formula syntax, and the flat
// line-oriented file formats (pair manifests, ideal files, system files,
// reports). Printing is canonical — parse(print(p)) == p — and files written
// here round-trip byte-identically.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taugen/formula.hpp"
#include "taugen/polynomial.hpp"

namespace taugen {

enum class PrintStyle {
    Standard, // "u1 - x1^2"
    Compact,  // "u1-x1^2" (registry keys, recipe encodings)
};

struct ParseContext {
    GroundField field = GroundField::Q;
    std::uint32_t n = 1;       // admissible coordinate indices are 1..n
    bool allow_u = false;      // u-variables permitted
    bool allow_derivs = false; // x1', x1'', x1^(k) permitted
};

// Polynomial / differential-polynomial expressions.
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        ('/' divisor must be a
//                                                nonzero ground element)
//   factor := primary ['^' posint]
//   primary:= int | 't' | var | '(' expr ')'
//   var    := ('x'|'u') idx quote*  |  'x' idx '^(' posint ')'
// Spaces and tabs are insignificant (expressions are single-line); errors
// carry 1-based line/column.
Polynomial parse_poly(const std::string& text, const ParseContext& ctx);

// Formulas: atoms `expr = expr`, connectives `!`, `&`, `|`, parentheses.
// `&` binds tighter than `|`; both associate to the left.
QFFormula parse_formula(const std::string& text, const ParseContext& ctx);

std::string print_poly(const Polynomial& p, PrintStyle style = PrintStyle::Standard);
std::string print_formula(const QFFormula& f, PrintStyle style = PrintStyle::Standard);

// ----- pair manifests -----

struct PointSpec {
    std::optional<Rational> t0;    // expansion point for t (Q(t) only)
    std::vector<Rational> coords;  // x1..xn
};

struct PairManifest {
    GroundField field = GroundField::Q;
    std::uint32_t n = 1;
    std::string primality = "asserted"; // "asserted" | "constructed:<family>"
    std::vector<Polynomial> v_gens;     // over x1..xn
    std::vector<Polynomial> w_gens;     // over x1..xn, u1..un
    std::optional<PointSpec> point;
    std::string recipe;                 // optional provenance tag ("" = none)
};

PairManifest parse_pair_manifest(const std::string& text, const std::string& what);
std::string format_pair_manifest(const PairManifest& m);
PairManifest read_pair_manifest(const std::string& path);
void write_pair_manifest(const PairManifest& m, const std::string& path);

// ----- ideal files -----

struct IdealFile {
    GroundField field = GroundField::Q;
    std::uint32_t n = 1;
    bool with_u = false; // ambient x1..xn or x1..xn,u1..un
    std::vector<Polynomial> gens;
};

IdealFile parse_ideal_file(const std::string& text, const std::string& what);
std::string format_ideal_file(const IdealFile& f);
IdealFile read_ideal_file(const std::string& path);
void write_ideal_file(const IdealFile& f, const std::string& path);

// ----- system files (solved differential systems) -----

struct SystemFile {
    GroundField field = GroundField::Q;
    std::uint32_t n = 1;
    // leader x_i^(k_i)  =  right-hand side (derivative variables only)
    std::vector<std::pair<Variable, Polynomial>> equations;
};

SystemFile parse_system_file(const std::string& text, const std::string& what);
std::string format_system_file(const SystemFile& f);
SystemFile read_system_file(const std::string& path);
void write_system_file(const SystemFile& f, const std::string& path);

// ----- reports -----
// "key: value" header lines, one blank line, then payload lines.

struct Report {
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<std::string> payload;

    void add(const std::string& key, const std::string& value) { header.push_back({key, value}); }
    std::string str() const;
};

// whole-file helpers
std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& content);

} // namespace taugen
