#ifndef ZERODIM_PARSE_HPP
#define ZERODIM_PARSE_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "zerodim/mpoly.hpp"
#include "zerodim/variety.hpp"

namespace zerodim {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := INT | VAR ('^' INT)? | '(' expr ')'
// VAR    := 'x' INT (indices start at 1); '#' starts a comment.
struct ParseError : DomainError {
    ParseError(const std::string& what, int line, int col)
        : DomainError(what + " (line " + std::to_string(line) + ", col " + std::to_string(col) +
                      ")"),
          line(line),
          col(col) {}
    int line, col;
};

namespace detail {

struct Token {
    enum Kind { Integer, Variable, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Int value;  // Integer: literal; Variable: 1-based index
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, 0, line, col};
        char c = text_[pos_];
        switch (c) {
            case '+': advance(); return {Token::Plus, 0, line, col};
            case '-': advance(); return {Token::Minus, 0, line, col};
            case '*': advance(); return {Token::Star, 0, line, col};
            case '^': advance(); return {Token::Caret, 0, line, col};
            case '(': advance(); return {Token::LParen, 0, line, col};
            case ')': advance(); return {Token::RParen, 0, line, col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return {Token::Integer, digits(), line, col};
        if (c == 'x') {
            advance();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected variable index after 'x'", line_, col_);
            Int idx = digits();
            if (idx < 1) throw ParseError("variable indices start at 1", line, col);
            return {Token::Variable, idx, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Int digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        return Int(s);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// Parses into a fixed-size term list first; the variable universe is the
// highest index used.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : lex_(text) { shift(); }

    MPoly parse() {
        MPoly f = expr();
        expect(Token::End, "trailing input after polynomial");
        return f;
    }

    int max_index() const { return max_index_; }

private:
    void shift() { tok_ = lex_.next(); }

    void expect(detail::Token::Kind k, const char* msg) {
        if (tok_.kind != k) throw ParseError(msg, tok_.line, tok_.col);
    }

    MPoly expr() {
        bool negate = false;
        if (tok_.kind == Token::Minus) {
            negate = true;
            shift();
        }
        MPoly acc = term();
        if (negate) acc = -acc;
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            shift();
            MPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (tok_.kind == Token::Star) {
            shift();
            acc = acc * factor();
        }
        return acc;
    }

    MPoly factor() {
        switch (tok_.kind) {
            case Token::Integer: {
                MPoly c = constant_poly(Rat(tok_.value));
                shift();
                return c;
            }
            case Token::Variable: {
                if (tok_.value > kMaxVars)
                    throw ParseError("variable index exceeds the supported maximum of " +
                                         std::to_string(kMaxVars),
                                     tok_.line, tok_.col);
                int idx = static_cast<int>(tok_.value.get_si());
                max_index_ = std::max(max_index_, idx);
                shift();
                unsigned long e = 1;
                if (tok_.kind == Token::Caret) {
                    shift();
                    if (tok_.kind != Token::Integer)
                        throw ParseError("expected integer exponent", tok_.line, tok_.col);
                    if (tok_.value < 0) throw ParseError("negative exponent", tok_.line, tok_.col);
                    e = tok_.value.get_ui();
                    shift();
                }
                return var_power(idx, e);
            }
            case Token::LParen: {
                shift();
                MPoly inner = expr();
                expect(Token::RParen, "expected ')'");
                shift();
                return inner;
            }
            default:
                throw ParseError("expected integer, variable or '('", tok_.line, tok_.col);
        }
    }

    // polynomials are built in a growing universe and padded at the end
    MPoly constant_poly(const Rat& c) { return MPoly::constant(kMaxVars, c); }

    MPoly var_power(int idx, unsigned long e) {
        Exponents exp(kMaxVars, 0);
        exp[idx - 1] = static_cast<unsigned>(e);
        return MPoly::monomial(kMaxVars, std::move(exp), Rat(1));
    }

    static constexpr int kMaxVars = 64;

    Lexer lex_;
    Token tok_;
    int max_index_ = 0;
};

inline MPoly shrink_to(const MPoly& f, int nvars) {
    MPoly r(nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponents small(e.begin(), e.begin() + nvars);
        for (std::size_t i = static_cast<std::size_t>(nvars); i < e.size(); ++i)
            if (e[i] != 0) throw InternalError("nonzero exponent beyond inferred universe");
        r.add_term(std::move(small), c);
    }
    return r;
}

}  // namespace detail

// Parses one polynomial; the variable universe is x1..xN for the highest N
// used (constants live in a zero-variable universe).
inline MPoly parse_poly(const std::string& text) {
    detail::PolyParser p(text);
    MPoly wide = p.parse();
    return detail::shrink_to(wide, p.max_index());
}

// One polynomial per line; blank and comment lines skipped; all polynomials
// are placed in the common universe of the whole file.
inline std::vector<MPoly> parse_system(const std::string& text) {
    std::vector<MPoly> polys;
    int max_index = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        detail::PolyParser p(stripped);
        polys.push_back(p.parse());
        max_index = std::max(max_index, p.max_index());
    }
    if (polys.empty()) throw DomainError("no polynomials in system file");
    std::vector<MPoly> out;
    for (const MPoly& f : polys) out.push_back(detail::shrink_to(f, max_index));
    return out;
}

// One point per line, comma-separated rationals "a/b" or integers.
inline PointVariety parse_points(const std::string& text) {
    std::vector<std::vector<Rat>> points;
    std::istringstream in(text);
    std::string line;
    int n = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rat> pt;
        std::istringstream ls(stripped);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            std::size_t b = cell.find_first_not_of(" \t\r");
            std::size_t e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos)
                throw ParseError("empty coordinate", lineno, 1);
            pt.push_back(parse_rat(cell.substr(b, e - b + 1)));
        }
        if (n < 0) n = static_cast<int>(pt.size());
        if (static_cast<int>(pt.size()) != n)
            throw ParseError("inconsistent point dimension", lineno, 1);
        points.push_back(std::move(pt));
    }
    if (points.empty()) throw DomainError("no points in points file");
    return PointVariety::from_points(n, std::move(points));
}

// Canonical text form: terms in descending graded-lex order; coefficient 1
// omitted except on the constant term.
inline std::string print_poly(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool has_vars = total_degree(e) > 0;
        if (a != 1 || !has_vars) {
            out += to_string(a);
            if (has_vars) out += "*";
        }
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) out += "*";
            first = false;
            out += "x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace zerodim

#endif
