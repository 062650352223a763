#include "btl/parser.hpp"

#include <cctype>
#include <vector>

namespace btl {

ParseError::ParseError(Code code, SourceSpan span, std::string message, std::set<std::string> expected)
    : std::runtime_error([&] {
          std::string m = message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end);
          if (!expected.empty()) {
              m += " (expected";
              for (const auto& e : expected) m += " '" + e + "'";
              m += ")";
          }
          return m;
      }()),
      code_(code),
      span_(span),
      expected_(std::move(expected)),
      detail_(std::move(message)) {}

namespace {

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {"E", "A", "X", "U", "F", "G", "Y", "S", "wY",
                                             "Finf", "Ginf", "down", "root", "true", "false"};
    return kw;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}

bool is_var_word(const std::string& w) {
    if (w.size() < 2 || w[0] != 'x') return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
    return true;
}

enum class Tok { Ident, Sym, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (true) {
            while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
            if (i >= s_.size()) break;
            std::size_t start = i;
            char c = s_[i];
            if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
                while (i < s_.size() && ident_char(s_[i])) ++i;
                out.push_back({Tok::Ident, s_.substr(start, i - start), {start, i}});
                continue;
            }
            static const char* syms[] = {"<->", "->", "@root", "&", "|", "!", "(", ")", ".", "@"};
            bool matched = false;
            for (const char* sym : syms) {
                std::string t(sym);
                if (s_.compare(i, t.size(), t) == 0) {
                    // "@root" only when not followed by more identifier chars.
                    if (t == "@root" && i + t.size() < s_.size() && ident_char(s_[i + t.size()])) continue;
                    out.push_back({Tok::Sym, t, {i, i + t.size()}});
                    i += t.size();
                    matched = true;
                    break;
                }
            }
            if (!matched)
                throw ParseError(ParseError::Code::Syntax, {i, i + 1},
                                 std::string("unexpected character '") + c + "'");
        }
        out.push_back({Tok::End, "", {s_.size(), s_.size()}});
        return out;
    }

private:
    const std::string& s_;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = formula();
        if (cur().type != Tok::End) fail({"end of input", "&", "|", "->", "<->", "U", "S"});
        return f;
    }

private:
    const Token& cur() const { return t_[pos_]; }
    bool is_sym(const char* s) const { return cur().type == Tok::Sym && cur().text == s; }
    bool is_word(const char* s) const { return cur().type == Tok::Ident && cur().text == s; }

    [[noreturn]] void fail(std::set<std::string> expected) const {
        std::string got = cur().type == Tok::End ? "end of input" : "'" + cur().text + "'";
        throw ParseError(ParseError::Code::Syntax, cur().span, "unexpected " + got, std::move(expected));
    }

    Formula formula() {
        Formula f = imp();
        while (is_sym("<->")) {
            ++pos_;
            f = iff(f, imp());
        }
        return f;
    }

    Formula imp() {
        Formula f = disjunction();
        if (is_sym("->")) {
            ++pos_;
            return implies(f, imp());
        }
        return f;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (is_sym("|")) {
            ++pos_;
            f = disj(f, conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = temporal_binary();
        while (is_sym("&")) {
            ++pos_;
            f = conj(f, temporal_binary());
        }
        return f;
    }

    Formula temporal_binary() {
        Formula f = unary();
        if (is_word("U")) {
            ++pos_;
            return until(f, temporal_binary());
        }
        if (is_word("S")) {
            ++pos_;
            return since(f, temporal_binary());
        }
        return f;
    }

    int variable(bool in_binder) {
        const Token& tk = cur();
        if (tk.type != Tok::Ident || !is_var_word(tk.text)) {
            if (in_binder)
                throw ParseError(ParseError::Code::MalformedBinder, tk.span,
                                 "binder needs a variable x1, x2, ...", {"xN"});
            fail({"xN"});
        }
        long idx = std::stol(tk.text.substr(1));
        if (idx == 0)
            throw ParseError(ParseError::Code::VarIndexZero, tk.span, "variable index 0 (indices start at 1)");
        ++pos_;
        return static_cast<int>(idx);
    }

    Formula unary() {
        const Token& tk = cur();
        if (tk.type == Tok::Sym) {
            if (tk.text == "!") { ++pos_; return neg(unary()); }
            if (tk.text == "@root") { ++pos_; return at_root(unary()); }
            if (tk.text == "@") {
                ++pos_;
                int v = variable(false);
                return at_var(v, unary());
            }
            if (tk.text == "(") {
                ++pos_;
                Formula f = formula();
                if (!is_sym(")")) fail({")"});
                ++pos_;
                return f;
            }
            fail({"formula"});
        }
        if (tk.type == Tok::End) fail({"formula"});
        const std::string& w = tk.text;
        if (w == "X") { ++pos_; return next(unary()); }
        if (w == "F") { ++pos_; return eventually(unary()); }
        if (w == "G") { ++pos_; return always(unary()); }
        if (w == "Y") { ++pos_; return prev(unary()); }
        if (w == "wY") { ++pos_; return weak_prev(unary()); }
        if (w == "Finf") { ++pos_; return inf_often(unary()); }
        if (w == "Ginf") { ++pos_; return almost_always(unary()); }
        if (w == "E") { ++pos_; return exists(formula()); }
        if (w == "A") { ++pos_; return forall(formula()); }
        if (w == "down") {
            SourceSpan start = tk.span;
            ++pos_;
            int v = variable(true);
            if (!is_sym("."))
                throw ParseError(ParseError::Code::MalformedBinder, {start.start, cur().span.end},
                                 "binder 'down xN' must be followed by '.'", {"."});
            ++pos_;
            return bind(v, formula());
        }
        if (w == "true") { ++pos_; return top(); }
        if (w == "false") { ++pos_; return bot(); }
        if (w == "root") { ++pos_; return root(); }
        if (is_var_word(w)) return var(variable(false));
        if (keywords().count(w) || !ident_start(w[0])) fail({"formula"});
        ++pos_;
        return prop(w);
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

// Precedence levels, loosest first.
enum Prec { P_IFF = 1, P_IMP, P_OR, P_AND, P_UNTIL, P_UNARY, P_ATOM };

int prec_of(Kind k) {
    switch (k) {
        case Kind::Iff: return P_IFF;
        case Kind::Implies: return P_IMP;
        case Kind::Or: return P_OR;
        case Kind::And: return P_AND;
        case Kind::Until: case Kind::Since: return P_UNTIL;
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
            return P_ATOM;
        default: return P_UNARY;
    }
}

bool extends_right(Kind k) { return k == Kind::Exists || k == Kind::Forall || k == Kind::Bind; }

void print_rec(const Formula& f, int min_prec, bool tail_open, std::string& out) {
    Kind k = f.kind();
    int p = prec_of(k);
    bool parens = p < min_prec || (extends_right(k) && !tail_open);
    if (parens) {
        out += '(';
        tail_open = true;
    }
    switch (k) {
        case Kind::True: out += "true"; break;
        case Kind::False: out += "false"; break;
        case Kind::Prop: out += f.name(); break;
        case Kind::Var: out += "x" + std::to_string(f.var()); break;
        case Kind::Root: out += "root"; break;
        case Kind::Exists: case Kind::Forall:
            out += k == Kind::Exists ? "E " : "A ";
            print_rec(f.lhs(), P_IFF, tail_open, out);
            break;
        case Kind::Bind:
            out += "down x" + std::to_string(f.var()) + " . ";
            print_rec(f.lhs(), P_IFF, tail_open, out);
            break;
        case Kind::Not: case Kind::AtVar: case Kind::AtRoot: case Kind::Next: case Kind::Eventually:
        case Kind::Always: case Kind::Prev: case Kind::WeakPrev: case Kind::InfOften:
        case Kind::AlmostAlways: {
            switch (k) {
                case Kind::Not: out += "!"; break;
                case Kind::AtVar: out += "@x" + std::to_string(f.var()) + " "; break;
                case Kind::AtRoot: out += "@root "; break;
                case Kind::Next: out += "X "; break;
                case Kind::Eventually: out += "F "; break;
                case Kind::Always: out += "G "; break;
                case Kind::Prev: out += "Y "; break;
                case Kind::WeakPrev: out += "wY "; break;
                case Kind::InfOften: out += "Finf "; break;
                default: out += "Ginf "; break;
            }
            print_rec(f.lhs(), P_UNARY, tail_open, out);
            break;
        }
        default: {
            const char* op = "";
            bool right_assoc = false;
            switch (k) {
                case Kind::Iff: op = " <-> "; break;
                case Kind::Implies: op = " -> "; right_assoc = true; break;
                case Kind::Or: op = " | "; break;
                case Kind::And: op = " & "; break;
                case Kind::Until: op = " U "; right_assoc = true; break;
                default: op = " S "; right_assoc = true; break;
            }
            print_rec(f.lhs(), right_assoc ? p + 1 : p, false, out);
            out += op;
            print_rec(f.rhs(), right_assoc ? p : p + 1, tail_open, out);
            break;
        }
    }
    if (parens) out += ')';
}

Formula parse_any(const std::string& text) {
    Lexer lx(text);
    Parser ps(lx.run());
    return ps.parse_all();
}

}  // namespace

Formula parse_formula(const std::string& text) {
    Formula f = parse_any(text);
    if (!is_state_formula(f))
        throw ParseError(ParseError::Code::NotStateFormula, {0, text.size()},
                         "path formula outside a quantifier");
    return f;
}

Formula parse_path_formula(const std::string& text) { return parse_any(text); }

std::string print_formula(const Formula& f) {
    std::string out;
    print_rec(f, P_IFF, true, out);
    return out;
}

bool is_keyword(const std::string& word) { return keywords().count(word) > 0 || is_var_word(word); }

bool is_valid_prop_name(const std::string& word) {
    if (word.empty() || !ident_start(word[0]) || is_keyword(word)) return false;
    for (char c : word)
        if (!ident_char(c)) return false;
    return true;
}

}  // namespace btl
