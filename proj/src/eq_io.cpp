#include "fpp/eq_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fpp {

namespace {

struct Token {
    enum Kind { Num, Name, Sym, End } kind = End;
    std::string text;
    size_t col = 0;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    [[noreturn]] void err(const std::string& what, size_t col) const {
        std::ostringstream os;
        os << "line " << line_ << ", col " << (col + 1) << ": " << what;
        fail(errc::parse_error, os.str());
    }
    [[noreturn]] void err_here(const std::string& what) const { err(what, cur_.col); }
    int line() const { return line_; }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.col = i_;
        if (i_ >= s_.size()) {
            cur_.kind = Token::End;
            cur_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Token::Num, s_.substr(i_, j - i_), i_};
            i_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_ + 1;
            while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = {Token::Name, s_.substr(i_, j - i_), i_};
            i_ = j;
        } else {
            cur_ = {Token::Sym, std::string(1, c), i_};
            ++i_;
        }
    }

    const std::string& s_;
    int line_;
    size_t i_ = 0;
    Token cur_;
};

bool is_sym(const Token& t, char c) { return t.kind == Token::Sym && t.text[0] == c; }

Int parse_int_tok(Lexer& lx) {
    Token t = lx.take();
    if (t.kind != Token::Num) lx.err("expected integer", t.col);
    return Int(t.text);
}

// NUM [ '/' NUM ]
Rat parse_rational(Lexer& lx) {
    Int num = parse_int_tok(lx);
    if (is_sym(lx.peek(), '/')) {
        lx.take();
        Int den = parse_int_tok(lx);
        if (den == 0) lx.err_here("zero denominator");
        return make_rat(num, den);
    }
    return Rat(num);
}

// inside parentheses: [sign] qterm (sign qterm)*, qterm = rational ['*' w] | w
QuadElt parse_quad_sum(Lexer& lx) {
    QuadElt acc;
    bool first = true;
    while (true) {
        int sign = 1;
        if (is_sym(lx.peek(), '+')) {
            lx.take();
        } else if (is_sym(lx.peek(), '-')) {
            sign = -1;
            lx.take();
        } else if (!first) {
            break;
        }
        Rat r(1);
        bool have_num = false;
        if (lx.peek().kind == Token::Num) {
            r = parse_rational(lx);
            have_num = true;
        }
        bool is_w = false;
        if (have_num && is_sym(lx.peek(), '*')) {
            // lookahead: only consume '*' if followed by w
            Lexer probe = lx;
            probe.take();
            if (probe.peek().kind == Token::Name && probe.peek().text == "w") {
                lx.take();
                lx.take();
                is_w = true;
            }
        } else if (lx.peek().kind == Token::Name && lx.peek().text == "w") {
            lx.take();
            is_w = true;
        }
        if (!have_num && !is_w) lx.err_here("expected rational or w");
        if (sign < 0) r = -r;
        if (is_w)
            acc.b += r;
        else
            acc.a += r;
        first = false;
    }
    return acc;
}

// coefficient atom: integer | a/c | w | '(' quadsum ')' ['/' c]
QuadElt parse_coeff_atom(Lexer& lx) {
    if (is_sym(lx.peek(), '(')) {
        lx.take();
        QuadElt q = parse_quad_sum(lx);
        if (!is_sym(lx.peek(), ')')) lx.err_here("expected ')'");
        lx.take();
        if (is_sym(lx.peek(), '/')) {
            lx.take();
            Int den = parse_int_tok(lx);
            if (den <= 0) lx.err_here("denominator must be positive");
            Rat d(den);
            q.a /= d;
            q.b /= d;
        }
        return q;
    }
    if (lx.peek().kind == Token::Name && lx.peek().text == "w") {
        lx.take();
        return quad_w();
    }
    return QuadElt(parse_rational(lx));
}

struct VarRef {
    int index;
    int family;  // 0 = U (10 vars), 1 = Z (6 vars)
};

VarRef parse_var(Lexer& lx) {
    Token t = lx.take();
    const std::string& s = t.text;
    if (s.size() < 2) lx.err("unknown variable '" + s + "'", t.col);
    char fam = s[0];
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            lx.err("unknown variable '" + s + "'", t.col);
    int idx = std::stoi(s.substr(1));
    if (fam == 'U') {
        if (idx < 0 || idx > 9) lx.err("variable index out of range: " + s, t.col);
        return {idx, 0};
    }
    if (fam == 'Z') {
        if (idx < 1 || idx > 6) lx.err("variable index out of range: " + s, t.col);
        return {idx - 1, 1};
    }
    lx.err("unknown variable family '" + s + "'", t.col);
}

}  // namespace

Poly<QuadElt> parse_polynomial_line(const std::string& line, int lineno) {
    Lexer lx(line, lineno);
    int family = -1;
    struct Term {
        QuadElt coeff;
        std::map<int, int> exps;
    };
    std::vector<Term> terms;
    bool first = true;
    while (lx.peek().kind != Token::End) {
        int sign = 1;
        if (is_sym(lx.peek(), '+')) {
            lx.take();
        } else if (is_sym(lx.peek(), '-')) {
            sign = -1;
            lx.take();
        } else if (!first) {
            lx.err_here("expected '+' or '-' between terms");
        }
        Term t;
        t.coeff = QuadElt(1L);
        bool any_factor = false;
        while (true) {
            const Token& pk = lx.peek();
            if (pk.kind == Token::Num || is_sym(pk, '(') ||
                (pk.kind == Token::Name && pk.text == "w")) {
                t.coeff *= parse_coeff_atom(lx);
            } else if (pk.kind == Token::Name) {
                VarRef v = parse_var(lx);
                if (family < 0) family = v.family;
                if (family != v.family) lx.err_here("mixed variable families in one file");
                int e = 1;
                if (is_sym(lx.peek(), '^')) {
                    lx.take();
                    Int ee = parse_int_tok(lx);
                    if (ee < 0 || ee > 64) lx.err_here("exponent out of range");
                    e = static_cast<int>(ee.get_si());
                }
                t.exps[v.index] += e;
            } else {
                lx.err_here("expected coefficient or variable");
            }
            any_factor = true;
            if (is_sym(lx.peek(), '*')) {
                lx.take();
                continue;
            }
            break;
        }
        if (!any_factor) lx.err_here("empty term");
        if (sign < 0) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        first = false;
    }
    if (terms.empty()) fail(errc::parse_error, "empty polynomial");
    int nvars = family == 1 ? 6 : 10;
    Poly<QuadElt> f(nvars);
    for (const auto& t : terms) {
        Mono m(static_cast<size_t>(nvars));
        for (const auto& [idx, e] : t.exps) {
            if (idx >= nvars) fail(errc::parse_error, "variable index exceeds family size");
            m.e[idx] = static_cast<uint8_t>(e);
        }
        f.add_term(m, t.coeff);
    }
    if (!f.is_homogeneous()) {
        std::ostringstream os;
        os << "line " << lineno << ": polynomial is not homogeneous";
        fail(errc::degree_mismatch, os.str());
    }
    return f;
}

Poly<QuadElt> parse_polynomial(const std::string& line) { return parse_polynomial_line(line, 1); }

namespace {
std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}
}  // namespace

std::vector<Poly<QuadElt>> parse_equations(const std::string& text) {
    std::vector<Poly<QuadElt>> eqs;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        eqs.push_back(parse_polynomial_line(body, lineno));
    }
    return eqs;
}

namespace {

std::string render_rat(const Rat& r) { return r.get_str(); }

// canonical coefficient text; `lead` suppresses "1*" for unit coefficients
std::string render_coeff(const QuadElt& q, bool unit_monomial_follows) {
    if (q.b == 0) {
        if (q.a == 1 && unit_monomial_follows) return "";
        return render_rat(q.a);
    }
    // common denominator form (A + B*w)/c
    Int c = lcm(rat_den(q.a), rat_den(q.b));
    Int A = rat_num(q.a) * (c / rat_den(q.a));
    Int B = rat_num(q.b) * (c / rat_den(q.b));
    std::string inner;
    if (A != 0) inner += A.get_str();
    if (B != 0) {
        Int Babs = abs(B);
        if (!inner.empty())
            inner += (B > 0 ? " + " : " - ");
        else if (B < 0)
            inner += "-";
        if (Babs != 1)
            inner += Babs.get_str() + "*w";
        else
            inner += "w";
    }
    std::string out = "(" + inner + ")";
    if (c != 1) out += "/" + c.get_str();
    return out;
}

std::string render_mono(const Mono& m, char fam, int offset) {
    std::string out;
    for (size_t i = 0; i < m.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += fam;
        out += std::to_string(static_cast<int>(i) + offset);
        if (m.e[i] > 1) out += "^" + std::to_string(static_cast<int>(m.e[i]));
    }
    return out;
}

}  // namespace

std::string serialize_equation(const Poly<QuadElt>& f) {
    char fam = f.nvars == 6 ? 'Z' : 'U';
    int offset = f.nvars == 6 ? 1 : 0;
    if (f.terms.empty()) return "0*" + std::string(1, fam) + std::to_string(offset);
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms) {
        QuadElt coeff = c;
        std::string sep;
        if (!first) {
            // pull an overall minus out of plain-rational coefficients
            if (coeff.b == 0 && coeff.a < 0) {
                sep = " - ";
                coeff = -coeff;
            } else {
                sep = " + ";
            }
        } else if (coeff.b == 0 && coeff.a < 0) {
            sep = "-";
            coeff = -coeff;
        }
        std::string mono = render_mono(m, fam, offset);
        std::string cs = render_coeff(coeff, !mono.empty());
        std::string term;
        if (cs.empty())
            term = mono;
        else if (mono.empty())
            term = cs;
        else
            term = cs + "*" + mono;
        out += sep + term;
        first = false;
    }
    return out;
}

std::string serialize_equations(const std::vector<Poly<QuadElt>>& eqs) {
    std::string out;
    for (const auto& f : eqs) out += serialize_equation(f) + "\n";
    return out;
}

std::vector<Poly<QuadElt>> load_equation_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) fail(errc::dataset_missing, "cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_equations(buf.str());
}

void save_equation_file(const std::string& path, const std::vector<Poly<QuadElt>>& eqs,
                        const std::string& header_comment) {
    std::ofstream os(path);
    if (!os) fail(errc::internal, "cannot write " + path);
    if (!header_comment.empty()) os << "# " << header_comment << "\n";
    os << serialize_equations(eqs);
}

const Poly<QuadElt>& Fixtures::poly(const std::string& name) const {
    auto it = polys.find(name);
    if (it == polys.end()) fail(errc::dataset_missing, "fixture polynomial '" + name + "'");
    return it->second;
}

const std::vector<Rat>& Fixtures::point(const std::string& name) const {
    auto it = points.find(name);
    if (it == points.end()) fail(errc::dataset_missing, "fixture point '" + name + "'");
    return it->second;
}

Fixtures load_fixtures(const std::string& path) {
    std::ifstream is(path);
    if (!is) fail(errc::dataset_missing, "cannot open " + path);
    Fixtures fx;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos) fail(errc::parse_error, "fixtures: expected name = value");
        std::string name = trim(body.substr(0, eq));
        std::string rhs = trim(body.substr(eq + 1));
        if (rhs.empty()) fail(errc::parse_error, "fixtures: empty value for " + name);
        if (rhs.front() == '[') {
            if (rhs.back() != ']') fail(errc::parse_error, "fixtures: unterminated point");
            std::string inner = rhs.substr(1, rhs.size() - 2);
            std::vector<Rat> coords;
            std::string cur;
            std::istringstream cs(inner);
            while (std::getline(cs, cur, ':')) {
                std::string v = trim(cur);
                if (v.empty()) fail(errc::parse_error, "fixtures: empty coordinate");
                coords.emplace_back(Rat(v));
            }
            for (auto& c : coords) c.canonicalize();
            fx.points.emplace(name, std::move(coords));
        } else {
            fx.polys.emplace(name, parse_polynomial_line(rhs, lineno));
        }
    }
    return fx;
}

}  // namespace fpp
