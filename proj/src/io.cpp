#include "taugen/io.hpp"

#include <fstream>
#include <sstream>

namespace taugen {

namespace {

// ----- lexer -----

struct Tok {
    enum Kind { Int, VarName, TName, Prime, Sym, End } kind;
    std::string text;   // digits for Int
    char letter = 0;    // 'x' or 'u' for VarName
    std::uint32_t index = 0;
    int primes = 0;
    char sym = 0;
    int col = 1;
};

std::vector<Tok> lex(const std::string& s, int line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg, std::size_t at) {
        throw ParseError(msg, line, static_cast<int>(at) + 1);
    };
    while (i < s.size()) {
        char c = s[i];
        int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), 0, 0, 0, 0, col});
            i = j;
            continue;
        }
        if (c == 'x' || c == 'u') {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j == i + 1) fail(std::string("variable '") + c + "' needs an index", i);
            std::string digits = s.substr(i + 1, j - i - 1);
            if (digits.size() > 1 && digits[0] == '0') fail("variable index has a leading zero", i + 1);
            unsigned long idx = 0;
            try {
                idx = std::stoul(digits);
            } catch (...) {
                fail("variable index out of range", i + 1);
            }
            if (idx == 0) fail("variable index must be at least 1", i + 1);
            Tok t{Tok::VarName, "", c, static_cast<std::uint32_t>(idx), 0, 0, col};
            out.push_back(t);
            i = j;
            continue;
        }
        if (c == 't') {
            if (i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '9')
                fail("'t' takes no index", i + 1);
            out.push_back({Tok::TName, "", 0, 0, 0, 0, col});
            ++i;
            continue;
        }
        if (c == '\'') {
            std::size_t j = i;
            while (j < s.size() && s[j] == '\'') ++j;
            Tok t{Tok::Prime, "", 0, 0, static_cast<int>(j - i), 0, col};
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::string("+-*/^()=&|!").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, "", 0, 0, 0, c, col});
            ++i;
            continue;
        }
        fail(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", 0, 0, 0, 0, static_cast<int>(s.size()) + 1});
    return out;
}

// ----- parser -----

struct Parser {
    std::vector<Tok> toks;
    std::size_t pos = 0;
    const ParseContext& ctx;
    int line;

    Parser(const std::string& text, const ParseContext& c, int ln)
        : toks(lex(text, ln)), ctx(c), line(ln) {}

    const Tok& cur() const { return toks[pos]; }
    bool is_sym(char c) const { return cur().kind == Tok::Sym && cur().sym == c; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, cur().col);
    }
    void expect_sym(char c) {
        if (!is_sym(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::uint32_t take_posint(const char* what) {
        if (cur().kind != Tok::Int) fail(std::string("expected ") + what);
        unsigned long v = 0;
        try {
            v = std::stoul(cur().text);
        } catch (...) {
            fail(std::string(what) + " out of range");
        }
        if (v == 0) fail(std::string(what) + " must be at least 1");
        ++pos;
        return static_cast<std::uint32_t>(v);
    }

    Variable read_variable() {
        const Tok& t = cur();
        if (t.index > ctx.n) fail("variable index exceeds the ambient dimension");
        ++pos;
        if (t.letter == 'u') {
            if (!ctx.allow_u) fail("u-variables are not allowed in this context");
            if (cur().kind == Tok::Prime) fail("derivatives apply to x-variables only");
            return Variable::u(t.index);
        }
        // x-variable, possibly with a derivative marker
        if (cur().kind == Tok::Prime) {
            if (!ctx.allow_derivs) fail("derivatives are not allowed in this context");
            int k = cur().primes;
            ++pos;
            return Variable::deriv(t.index, static_cast<std::uint32_t>(k));
        }
        if (is_sym('^') && pos + 1 < toks.size() && toks[pos + 1].kind == Tok::Sym &&
            toks[pos + 1].sym == '(') {
            if (!ctx.allow_derivs) fail("derivatives are not allowed in this context");
            pos += 2; // '^' '('
            std::uint32_t k = take_posint("derivative order");
            expect_sym(')');
            return Variable::deriv(t.index, k);
        }
        return Variable::x(t.index);
    }

    Polynomial parse_primary() {
        switch (cur().kind) {
            case Tok::Int: {
                Rational r(Integer(cur().text));
                ++pos;
                return Polynomial::constant(ctx.field, r);
            }
            case Tok::TName:
                if (ctx.field != GroundField::Qt) fail("'t' is only available over Q(t)");
                ++pos;
                return Polynomial::constant(ctx.field, GroundElement::t_element());
            case Tok::VarName:
                return Polynomial::variable(ctx.field, read_variable());
            case Tok::Sym:
                if (cur().sym == '(') {
                    ++pos;
                    Polynomial p = parse_expr();
                    expect_sym(')');
                    return p;
                }
                break;
            default: break;
        }
        fail("expected a number, a variable, 't', or '('");
    }

    Polynomial parse_factor() {
        Polynomial p = parse_primary();
        if (is_sym('^')) {
            ++pos;
            std::uint32_t e = take_posint("exponent");
            p = p.pow(e);
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (is_sym('*') || is_sym('/')) {
            bool div = cur().sym == '/';
            int at = cur().col;
            ++pos;
            Polynomial f = parse_factor();
            if (div) {
                if (!f.is_constant())
                    throw ParseError("divisor must be a ground-field element", line, at);
                GroundElement c = f.constant_value();
                if (c.is_zero()) throw ParseError("division by zero", line, at);
                p = p.scaled(c.inverse());
            } else {
                p = p * f;
            }
        }
        return p;
    }

    Polynomial parse_expr() {
        bool neg = false;
        if (is_sym('-')) { neg = true; ++pos; }
        Polynomial p = parse_term();
        if (neg) p = -p;
        while (is_sym('+') || is_sym('-')) {
            bool minus = cur().sym == '-';
            ++pos;
            Polynomial q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    QFFormula parse_atom() {
        Polynomial l = parse_expr();
        if (!is_sym('=')) fail("expected '=' in an atomic formula");
        ++pos;
        Polynomial r = parse_expr();
        return QFFormula::atom_eq(l - r);
    }

    QFFormula parse_unit() {
        if (is_sym('!')) {
            ++pos;
            return QFFormula::negation(parse_unit());
        }
        if (is_sym('(')) {
            // '(' is ambiguous: a parenthesized formula or the start of an
            // arithmetic expression inside an atom. Try the formula reading
            // first and fall back on failure.
            std::size_t save = pos;
            try {
                ++pos;
                QFFormula f = parse_disj();
                expect_sym(')');
                return f;
            } catch (const ParseError&) {
                pos = save;
            }
        }
        return parse_atom();
    }

    QFFormula parse_conj() {
        QFFormula f = parse_unit();
        while (is_sym('&')) {
            ++pos;
            f = QFFormula::conj(std::move(f), parse_unit());
        }
        return f;
    }

    QFFormula parse_disj() {
        QFFormula f = parse_conj();
        while (is_sym('|')) {
            ++pos;
            f = QFFormula::disj(std::move(f), parse_conj());
        }
        return f;
    }

    void expect_end() {
        if (cur().kind != Tok::End) fail("unexpected trailing input");
    }
};

// ----- printer -----

// univariate polynomial in t, descending powers, e.g. "t^2 - 1/2*t + 3"
std::string univ_str(const UnivPoly& u, PrintStyle style) {
    const char* plus = style == PrintStyle::Standard ? " + " : "+";
    const char* minus = style == PrintStyle::Standard ? " - " : "-";
    std::string out;
    bool first = true;
    for (int k = u.degree(); k >= 0; --k) {
        Rational c = u.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? minus : plus;
        }
        std::string body;
        if (k == 0) body = rational_str(c);
        else {
            if (c != 1) body = rational_str(c) + "*";
            body += k == 1 ? "t" : "t^" + std::to_string(k);
        }
        out += body;
    }
    return out.empty() ? "0" : out;
}

// one ground factor: bare rational, t-power with coefficient, or "(sum)";
// knows nothing about signs — callers pass a positive-leading value
std::string ground_factor(const UnivPoly& u, PrintStyle style) {
    if (u.is_constant()) return rational_str(u.coeff(0));
    // single t-term?
    std::size_t nonzero = 0;
    for (const auto& c : u.coeffs())
        if (c != 0) ++nonzero;
    if (nonzero == 1) {
        int k = u.degree();
        std::string body;
        if (u.lc() != 1) body = rational_str(u.lc()) + "*";
        body += k == 1 ? "t" : "t^" + std::to_string(k);
        return body;
    }
    return "(" + univ_str(u, style) + ")";
}

// body of one term, sign already removed: coefficient factors then variables
std::string term_body(GroundElement c, const Monomial& m, PrintStyle style) {
    std::vector<std::string> parts;
    bool coeff_is_one = c.is_one();
    if (!coeff_is_one || m.is_one()) {
        std::string cs;
        if (c.is_rational()) {
            cs = rational_str(c.rational_value());
        } else {
            cs = ground_factor(c.num(), style);
            if (!c.den().is_one()) cs += "/" + ground_factor(c.den(), style);
        }
        if (!(cs == "1" && !m.is_one())) parts.push_back(cs);
    }
    for (auto& [v, e] : m.entries()) {
        std::string vs = v.name();
        if (e > 1) vs += "^" + std::to_string(e);
        parts.push_back(vs);
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Rational parse_rational_str(const std::string& text, int line) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError("expected a rational number", line, 1);
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') { neg = true; i = 1; }
    std::size_t slash = s.find('/');
    std::string nums = s.substr(i, slash == std::string::npos ? std::string::npos : slash - i);
    std::string dens = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [&](const std::string& d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!digits(nums) || !digits(dens))
        throw ParseError("malformed rational '" + s + "'", line, 1);
    Integer numi(nums), deni(dens);
    if (deni == 0) throw ParseError("zero denominator", line, 1);
    Rational r(numi, deni);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

GroundField parse_field_name(const std::string& v, int line) {
    if (v == "Q") return GroundField::Q;
    if (v == "Q(t)") return GroundField::Qt;
    throw ParseError("unknown ground field '" + v + "' (expected Q or Q(t))", line, 1);
}

// line-oriented reader shared by the three file formats
struct Lines {
    std::vector<std::string> raw;
    std::size_t i = 0;
    std::string what;

    Lines(const std::string& text, std::string w) : what(std::move(w)) {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                raw.push_back(cur);
                cur.clear();
            } else cur += c;
        }
        if (!cur.empty()) raw.push_back(cur);
    }

    int lineno() const { return static_cast<int>(i) + 1; }
    bool done() const { return i >= raw.size(); }
    // peek at the next meaningful line (skips blanks and comments)
    const std::string* peek() {
        while (i < raw.size()) {
            std::string t = trim(raw[i]);
            if (t.empty() || t[0] == '#') { ++i; continue; }
            return &raw[i];
        }
        return nullptr;
    }
    std::string take() {
        const std::string* p = peek();
        if (!p) throw ParseError("unexpected end of " + what, lineno(), 1);
        std::string s = *p;
        ++i;
        return s;
    }

    void expect_magic(const std::string& magic) {
        std::string l = trim(take());
        if (l != magic)
            throw ParseError(what + " must start with '" + magic + "'", lineno() - 1 >= 1 ? lineno() - 1 : 1, 1);
    }

    // "key: value"; returns false (without consuming) when the next line is a
    // section header or input is exhausted
    bool key_value(std::string& key, std::string& value) {
        const std::string* p = peek();
        if (!p) return false;
        std::string t = trim(*p);
        if (!t.empty() && t[0] == '[') return false;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value' line", lineno(), 1);
        key = trim(t.substr(0, colon));
        value = trim(t.substr(colon + 1));
        ++i;
        return true;
    }

    // consumes "[name]"; error when absent
    void expect_section(const std::string& name) {
        std::string t = trim(take());
        if (t != "[" + name + "]")
            throw ParseError("expected section [" + name + "]", lineno() - 1, 1);
    }
    bool at_section(const std::string& name) {
        const std::string* p = peek();
        return p && trim(*p) == "[" + name + "]";
    }
    // lines until the next section header / EOF
    std::vector<std::pair<std::string, int>> section_lines() {
        std::vector<std::pair<std::string, int>> out;
        while (const std::string* p = peek()) {
            std::string t = trim(*p);
            if (!t.empty() && t[0] == '[') break;
            out.push_back({*p, lineno()});
            ++i;
        }
        return out;
    }
};

} // namespace

Polynomial parse_poly(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx, 1);
    Polynomial r = p.parse_expr();
    p.expect_end();
    return r;
}

QFFormula parse_formula(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx, 1);
    QFFormula f = p.parse_disj();
    p.expect_end();
    return f;
}

std::string print_poly(const Polynomial& p, PrintStyle style) {
    if (p.is_zero()) return "0";
    const char* plus = style == PrintStyle::Standard ? " + " : "+";
    const char* minus = style == PrintStyle::Standard ? " - " : "-";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        bool neg = c.num().lc() < 0;
        GroundElement body = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? minus : plus;
        }
        out += term_body(body, m, style);
    }
    return out;
}

std::string print_formula(const QFFormula& f, PrintStyle style) {
    bool spaced = style == PrintStyle::Standard;
    switch (f.kind()) {
        case QFFormula::Kind::Atom:
            return print_poly(f.atom(), style) + (spaced ? " = 0" : "=0");
        case QFFormula::Kind::Not:
            return "!(" + print_formula(f.left(), style) + ")";
        case QFFormula::Kind::And:
            return "(" + print_formula(f.left(), style) + (spaced ? ") & (" : ")&(") +
                   print_formula(f.right(), style) + ")";
        case QFFormula::Kind::Or:
            return "(" + print_formula(f.left(), style) + (spaced ? ") | (" : ")|(") +
                   print_formula(f.right(), style) + ")";
    }
    throw InternalError("unknown formula kind");
}

// ----- pair manifests -----

PairManifest parse_pair_manifest(const std::string& text, const std::string& what) {
    Lines ls(text, what);
    ls.expect_magic("taugen-pair 1");
    PairManifest m;
    bool have_n = false, have_field = false;
    std::string key, value;
    while (ls.key_value(key, value)) {
        int ln = ls.lineno() - 1;
        if (key == "field") { m.field = parse_field_name(value, ln); have_field = true; }
        else if (key == "n") {
            Rational r = parse_rational_str(value, ln);
            if (r.get_den() != 1 || r <= 0)
                throw ParseError("n must be a positive integer", ln, 1);
            m.n = static_cast<std::uint32_t>(r.get_num().get_ui());
            have_n = true;
        }
        else if (key == "primality") {
            if (value != "asserted" && value.rfind("constructed:", 0) != 0)
                throw ParseError("primality must be 'asserted' or 'constructed:<family>'", ln, 1);
            m.primality = value;
        }
        else if (key == "recipe") m.recipe = value;
        else throw ParseError("unknown manifest key '" + key + "'", ln, 1);
    }
    if (!have_field || !have_n)
        throw ParseError("manifest must declare 'field' and 'n'", ls.lineno(), 1);

    ParseContext vctx{m.field, m.n, false, false};
    ParseContext wctx{m.field, m.n, true, false};
    ls.expect_section("V");
    for (auto& [line, ln] : ls.section_lines()) {
        try {
            m.v_gens.push_back(parse_poly(trim(line), vctx));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (in [V])", ln, e.column);
        }
    }
    ls.expect_section("W");
    for (auto& [line, ln] : ls.section_lines()) {
        try {
            m.w_gens.push_back(parse_poly(trim(line), wctx));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " (in [W])", ln, e.column);
        }
    }
    if (ls.at_section("point")) {
        ls.expect_section("point");
        PointSpec pt;
        pt.coords.assign(m.n, Rational(0));
        std::vector<bool> seen(m.n, false);
        for (auto& [line, ln] : ls.section_lines()) {
            std::string t = trim(line);
            std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw ParseError("point lines have the form 'x<i> = value'", ln, 1);
            std::string lhs = trim(t.substr(0, eq));
            Rational val = parse_rational_str(t.substr(eq + 1), ln);
            if (lhs == "t0") {
                if (m.field != GroundField::Qt)
                    throw ParseError("t0 is only meaningful over Q(t)", ln, 1);
                pt.t0 = val;
            } else if (lhs.size() >= 2 && lhs[0] == 'x') {
                Rational idx = parse_rational_str(lhs.substr(1), ln);
                if (idx.get_den() != 1 || idx < 1 || idx > m.n)
                    throw ParseError("point coordinate index out of range", ln, 1);
                std::size_t k = idx.get_num().get_ui() - 1;
                pt.coords[k] = val;
                seen[k] = true;
            } else {
                throw ParseError("unknown point coordinate '" + lhs + "'", ln, 1);
            }
        }
        for (std::uint32_t k = 0; k < m.n; ++k)
            if (!seen[k])
                throw ParseError("point must assign every coordinate x1..x" + std::to_string(m.n),
                                 ls.lineno(), 1);
        if (m.field == GroundField::Qt && !pt.t0)
            throw ParseError("a point over Q(t) must set t0", ls.lineno(), 1);
        m.point = std::move(pt);
    }
    if (const std::string* p = ls.peek())
        throw ParseError("unexpected content '" + trim(*p) + "'", ls.lineno(), 1);
    return m;
}

std::string format_pair_manifest(const PairManifest& m) {
    std::ostringstream os;
    os << "taugen-pair 1\n";
    os << "field: " << field_name(m.field) << "\n";
    os << "n: " << m.n << "\n";
    os << "primality: " << m.primality << "\n";
    if (!m.recipe.empty()) os << "recipe: " << m.recipe << "\n";
    os << "[V]\n";
    for (auto& g : m.v_gens) os << print_poly(g) << "\n";
    os << "[W]\n";
    for (auto& g : m.w_gens) os << print_poly(g) << "\n";
    if (m.point) {
        os << "[point]\n";
        if (m.point->t0) os << "t0 = " << rational_str(*m.point->t0) << "\n";
        for (std::uint32_t i = 0; i < m.n; ++i)
            os << "x" << (i + 1) << " = " << rational_str(m.point->coords[i]) << "\n";
    }
    return os.str();
}

// ----- ideal files -----

IdealFile parse_ideal_file(const std::string& text, const std::string& what) {
    Lines ls(text, what);
    ls.expect_magic("taugen-ideal 1");
    IdealFile f;
    bool have_n = false, have_field = false;
    std::string key, value;
    while (ls.key_value(key, value)) {
        int ln = ls.lineno() - 1;
        if (key == "field") { f.field = parse_field_name(value, ln); have_field = true; }
        else if (key == "n") {
            Rational r = parse_rational_str(value, ln);
            if (r.get_den() != 1 || r <= 0)
                throw ParseError("n must be a positive integer", ln, 1);
            f.n = static_cast<std::uint32_t>(r.get_num().get_ui());
            have_n = true;
        }
        else if (key == "vars") {
            if (value == "x") f.with_u = false;
            else if (value == "xu") f.with_u = true;
            else throw ParseError("vars must be 'x' or 'xu'", ln, 1);
        }
        else throw ParseError("unknown ideal-file key '" + key + "'", ln, 1);
    }
    if (!have_field || !have_n)
        throw ParseError("ideal file must declare 'field' and 'n'", ls.lineno(), 1);
    ls.expect_section("generators");
    ParseContext ctx{f.field, f.n, f.with_u, false};
    for (auto& [line, ln] : ls.section_lines()) {
        try {
            f.gens.push_back(parse_poly(trim(line), ctx));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), ln, e.column);
        }
    }
    if (const std::string* p = ls.peek())
        throw ParseError("unexpected content '" + trim(*p) + "'", ls.lineno(), 1);
    return f;
}

std::string format_ideal_file(const IdealFile& f) {
    std::ostringstream os;
    os << "taugen-ideal 1\n";
    os << "field: " << field_name(f.field) << "\n";
    os << "n: " << f.n << "\n";
    os << "vars: " << (f.with_u ? "xu" : "x") << "\n";
    os << "[generators]\n";
    for (auto& g : f.gens) os << print_poly(g) << "\n";
    return os.str();
}

// ----- system files -----

SystemFile parse_system_file(const std::string& text, const std::string& what) {
    Lines ls(text, what);
    ls.expect_magic("taugen-system 1");
    SystemFile f;
    bool have_n = false, have_field = false;
    std::string key, value;
    while (ls.key_value(key, value)) {
        int ln = ls.lineno() - 1;
        if (key == "field") { f.field = parse_field_name(value, ln); have_field = true; }
        else if (key == "n") {
            Rational r = parse_rational_str(value, ln);
            if (r.get_den() != 1 || r <= 0)
                throw ParseError("n must be a positive integer", ln, 1);
            f.n = static_cast<std::uint32_t>(r.get_num().get_ui());
            have_n = true;
        }
        else throw ParseError("unknown system-file key '" + key + "'", ln, 1);
    }
    if (!have_field || !have_n)
        throw ParseError("system file must declare 'field' and 'n'", ls.lineno(), 1);
    ls.expect_section("equations");
    ParseContext ctx{f.field, f.n, false, true};
    for (auto& [line, ln] : ls.section_lines()) {
        std::string t = trim(line);
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("equations have the form 'x<i><derivative> = expr'", ln, 1);
        Polynomial lhs, rhs;
        try {
            lhs = parse_poly(trim(t.substr(0, eq)), ctx);
            rhs = parse_poly(trim(t.substr(eq + 1)), ctx);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), ln, e.column);
        }
        // the left side must be a single derivative variable of order >= 1
        bool ok = lhs.term_count() == 1 && lhs.terms()[0].second.is_one() &&
                  lhs.terms()[0].first.entries().size() == 1 &&
                  lhs.terms()[0].first.entries()[0].second == 1 &&
                  lhs.terms()[0].first.entries()[0].first.kind == VarKind::Deriv;
        if (!ok)
            throw ParseError("equation left side must be a single derivative like x1''", ln, 1);
        f.equations.push_back({lhs.terms()[0].first.entries()[0].first, rhs});
    }
    if (const std::string* p = ls.peek())
        throw ParseError("unexpected content '" + trim(*p) + "'", ls.lineno(), 1);
    return f;
}

std::string format_system_file(const SystemFile& f) {
    std::ostringstream os;
    os << "taugen-system 1\n";
    os << "field: " << field_name(f.field) << "\n";
    os << "n: " << f.n << "\n";
    os << "[equations]\n";
    for (auto& [v, rhs] : f.equations) os << v.name() << " = " << print_poly(rhs) << "\n";
    return os.str();
}

// ----- reports and file helpers -----

std::string Report::str() const {
    std::ostringstream os;
    for (auto& [k, v] : header) os << k << ": " << v << "\n";
    os << "\n";
    for (auto& l : payload) os << l << "\n";
    return os.str();
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spew_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write file '" + path + "'", 0, 0);
    out << content;
    if (!out) throw ParseError("write failed for '" + path + "'", 0, 0);
}

PairManifest read_pair_manifest(const std::string& path) {
    return parse_pair_manifest(slurp_file(path), path);
}
void write_pair_manifest(const PairManifest& m, const std::string& path) {
    spew_file(path, format_pair_manifest(m));
}
IdealFile read_ideal_file(const std::string& path) {
    return parse_ideal_file(slurp_file(path), path);
}
void write_ideal_file(const IdealFile& f, const std::string& path) {
    spew_file(path, format_ideal_file(f));
}
SystemFile read_system_file(const std::string& path) {
    return parse_system_file(slurp_file(path), path);
}
void write_system_file(const SystemFile& f, const std::string& path) {
    spew_file(path, format_system_file(f));
}

} // namespace taugen
