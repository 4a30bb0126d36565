#include "edd/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "edd/errors.hpp"

namespace edd {

std::string to_string(RingTag tag) {
    switch (tag) {
        case RingTag::PolyQ: return "polyQ";
        case RingTag::IntZ: return "int";
        case RingTag::Analytic: return "analytic";
    }
    return "?";
}

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t at = i_;
        if (i_ >= s_.size()) return {Token::Kind::End, "", at};
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Kind::Number, s_.substr(i_, j - i_), at};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Kind::Ident, s_.substr(i_, j - i_), at};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", at};
            case '-': return {Token::Kind::Minus, "-", at};
            case '*': return {Token::Kind::Star, "*", at};
            case '^': return {Token::Kind::Caret, "^", at};
            case '/': return {Token::Kind::Slash, "/", at};
            case '(': return {Token::Kind::LParen, "(", at};
            case ')': return {Token::Kind::RParen, ")", at};
            default: throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

using ExprPtr = std::unique_ptr<EntryExpr>;

ExprPtr make_node(EntryExpr::Kind kind) {
    auto e = std::make_unique<EntryExpr>();
    e->kind = kind;
    return e;
}

class Parser {
public:
    Parser(const std::string& text, RingTag ring) : lex_(text), ring_(ring) { advance(); }

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "end of entry");
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.pos);
        advance();
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            const auto kind = cur_.kind == Token::Kind::Plus ? EntryExpr::Kind::Add : EntryExpr::Kind::Sub;
            advance();
            ExprPtr node = make_node(kind);
            node->args.push_back(std::move(e));
            node->args.push_back(term());
            e = std::move(node);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (cur_.kind == Token::Kind::Star) {
            advance();
            ExprPtr node = make_node(EntryExpr::Kind::Mul);
            node->args.push_back(std::move(e));
            node->args.push_back(unary());
            e = std::move(node);
        }
        return e;
    }

    ExprPtr unary() {
        if (cur_.kind == Token::Kind::Minus) {
            advance();
            ExprPtr node = make_node(EntryExpr::Kind::Neg);
            node->args.push_back(unary());
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            if (cur_.kind != Token::Kind::Number) throw ParseError("expected a nonnegative integer exponent", cur_.pos);
            ExprPtr node = make_node(EntryExpr::Kind::Pow);
            node->exponent = std::stoi(cur_.text);
            advance();
            node->args.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprPtr atom() {
        const Token t = cur_;
        switch (t.kind) {
            case Token::Kind::Number: {
                advance();
                Int num(t.text);
                if (cur_.kind == Token::Kind::Slash) {
                    advance();
                    if (cur_.kind != Token::Kind::Number) throw ParseError("expected a denominator", cur_.pos);
                    Int den(cur_.text);
                    if (den == 0) throw ParseError("zero denominator", cur_.pos);
                    advance();
                    ExprPtr node = make_node(EntryExpr::Kind::Literal);
                    node->literal = Rational(num, den);
                    return node;
                }
                ExprPtr node = make_node(EntryExpr::Kind::Literal);
                node->literal = Rational(num);
                return node;
            }
            case Token::Kind::Ident: {
                advance();
                if (cur_.kind == Token::Kind::LParen) return builtin_call(t);
                return variable(t);
            }
            case Token::Kind::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.pos);
        }
    }

    ExprPtr variable(const Token& t) {
        const char expected = ring_ == RingTag::Analytic ? 'z' : 'x';
        if (ring_ == RingTag::IntZ)
            throw ParseError("variables are not allowed in integer matrices", t.pos);
        if (t.text.size() != 1 || t.text[0] != expected)
            throw ParseError("unknown identifier '" + t.text + "' (the variable here is '" +
                                 std::string(1, expected) + "')",
                             t.pos);
        return make_node(EntryExpr::Kind::Variable);
    }

    ExprPtr builtin_call(const Token& name) {
        if (ring_ != RingTag::Analytic)
            throw ParseError("builtin '" + name.text + "' is only allowed in analytic matrices", name.pos);
        JetBuiltin b;
        if (name.text == "exp") b = JetBuiltin::Exp;
        else if (name.text == "sin") b = JetBuiltin::Sin;
        else if (name.text == "cos") b = JetBuiltin::Cos;
        else if (name.text == "sinh") b = JetBuiltin::Sinh;
        else if (name.text == "cosh") b = JetBuiltin::Cosh;
        else throw ParseError("unknown builtin '" + name.text + "'", name.pos);
        expect(Token::Kind::LParen, "'('");
        ExprPtr arg = expr();
        expect(Token::Kind::RParen, "')'");
        // The argument must be (rational) * z, checked by lowering it as a
        // polynomial in the formal variable.
        const Poly p = lower_to_poly(*arg);
        if (p.coeff(0) != 0 || (!p.is_zero() && p.degree() > 1))
            throw ParseError("builtin argument must be a rational multiple of z", name.pos);
        ExprPtr node = make_node(EntryExpr::Kind::Builtin);
        node->builtin = b;
        node->builtin_scale = p.coeff(1);
        return node;
    }

    Lexer lex_;
    RingTag ring_;
    Token cur_;
};

}  // namespace

std::unique_ptr<EntryExpr> parse_entry_expr(const std::string& text, RingTag ring) {
    return Parser(text, ring).parse();
}

Poly lower_to_poly(const EntryExpr& e) {
    switch (e.kind) {
        case EntryExpr::Kind::Literal: return Poly(e.literal);
        case EntryExpr::Kind::Variable: return Poly::variable();
        case EntryExpr::Kind::Add: return lower_to_poly(*e.args[0]) + lower_to_poly(*e.args[1]);
        case EntryExpr::Kind::Sub: return lower_to_poly(*e.args[0]) - lower_to_poly(*e.args[1]);
        case EntryExpr::Kind::Neg: return -lower_to_poly(*e.args[0]);
        case EntryExpr::Kind::Mul: return lower_to_poly(*e.args[0]) * lower_to_poly(*e.args[1]);
        case EntryExpr::Kind::Pow: return lower_to_poly(*e.args[0]).pow(e.exponent);
        case EntryExpr::Kind::Builtin: throw DomainError("builtin expression in a polynomial context");
    }
    throw DomainError("malformed expression tree");
}

Jet lower_to_jet(const EntryExpr& e, const Rational& point, int truncation) {
    switch (e.kind) {
        case EntryExpr::Kind::Literal:
            return e.literal == 0 ? Jet::zero(point, truncation) : Jet::constant(e.literal, point, truncation);
        case EntryExpr::Kind::Variable:
            return builtin_jet(JetBuiltin::Poly, Rational(1), point, truncation);
        case EntryExpr::Kind::Add:
            return lower_to_jet(*e.args[0], point, truncation) + lower_to_jet(*e.args[1], point, truncation);
        case EntryExpr::Kind::Sub:
            return lower_to_jet(*e.args[0], point, truncation) - lower_to_jet(*e.args[1], point, truncation);
        case EntryExpr::Kind::Neg:
            return -lower_to_jet(*e.args[0], point, truncation);
        case EntryExpr::Kind::Mul:
            return lower_to_jet(*e.args[0], point, truncation) * lower_to_jet(*e.args[1], point, truncation);
        case EntryExpr::Kind::Pow:
            return lower_to_jet(*e.args[0], point, truncation).pow(e.exponent);
        case EntryExpr::Kind::Builtin:
            return builtin_jet(e.builtin, e.builtin_scale, point, truncation);
    }
    throw DomainError("malformed expression tree");
}

Poly parse_poly_entry(const std::string& text) {
    return lower_to_poly(*parse_entry_expr(text, RingTag::PolyQ));
}

Int parse_int_entry(const std::string& text) {
    const Poly p = lower_to_poly(*parse_entry_expr(text, RingTag::IntZ));
    if (!p.is_constant()) throw ParseError("integer entry is not constant", 0);
    const Rational v = p.coeff(0);
    if (!is_integer(v)) throw ParseError("entry '" + text + "' is not an integer", 0);
    return rat_num(v);
}

Jet parse_jet_entry(const std::string& text, const Rational& point, int truncation) {
    return lower_to_jet(*parse_entry_expr(text, RingTag::Analytic), point, truncation);
}

namespace {

std::string strip_comments(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trimmed(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in, int truncation_override) {
    std::string line;
    std::string header;
    std::vector<std::string> body_lines;
    while (std::getline(in, line)) {
        const std::string content = trimmed(strip_comments(line));
        if (content.empty()) continue;
        if (header.empty()) header = content;
        else body_lines.push_back(content);
    }
    if (header.empty()) throw ParseError("empty matrix file", 0);

    std::istringstream hs(header);
    std::string ring_word;
    MatrixFile file;
    hs >> ring_word >> file.rows >> file.cols;
    if (!hs) throw ParseError("malformed matrix header '" + header + "'", 0);
    if (ring_word == "polyQ") file.ring = RingTag::PolyQ;
    else if (ring_word == "int") file.ring = RingTag::IntZ;
    else if (ring_word == "analytic") file.ring = RingTag::Analytic;
    else throw ParseError("unknown ring tag '" + ring_word + "'", 0);
    if (file.rows < 1 || file.cols < 1) throw ParseError("matrix dimensions must be positive", 0);

    if (file.ring == RingTag::Analytic) {
        std::string point_word;
        hs >> point_word >> file.truncation;
        if (!hs) throw ParseError("analytic header needs an expansion point and a truncation order", 0);
        const auto pt = parse_rational(point_word);
        if (!pt) throw ParseError("bad expansion point '" + point_word + "'", 0);
        file.point = *pt;
        if (truncation_override > 0) file.truncation = truncation_override;
        if (file.truncation < 1) throw ParseError("truncation order must be >= 1", 0);
    } else {
        std::string extra;
        if (hs >> extra) throw ParseError("unexpected token '" + extra + "' in header", 0);
    }

    // Rows are separated by ';' or line breaks, entries by ','.
    std::string body;
    for (const std::string& b : body_lines) {
        body += b;
        body += ';';
    }
    std::vector<std::string> row_texts;
    for (const std::string& r : split(body, ';'))
        if (!trimmed(r).empty()) row_texts.push_back(r);
    if (static_cast<int>(row_texts.size()) != file.rows)
        throw ParseError("expected " + std::to_string(file.rows) + " rows, found " +
                             std::to_string(row_texts.size()),
                         0);

    std::vector<std::vector<std::string>> cells;
    for (const std::string& r : row_texts) {
        std::vector<std::string> entries = split(r, ',');
        if (static_cast<int>(entries.size()) != file.cols)
            throw ParseError("expected " + std::to_string(file.cols) + " entries in row '" + trimmed(r) + "'", 0);
        cells.push_back(std::move(entries));
    }

    switch (file.ring) {
        case RingTag::PolyQ: {
            RingMatrix<Poly> m(file.rows, file.cols, Poly());
            for (int i = 0; i < file.rows; ++i)
                for (int j = 0; j < file.cols; ++j)
                    m(i, j) = parse_poly_entry(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            file.matrix = std::move(m);
            break;
        }
        case RingTag::IntZ: {
            RingMatrix<Int> m(file.rows, file.cols, Int(0));
            for (int i = 0; i < file.rows; ++i)
                for (int j = 0; j < file.cols; ++j)
                    m(i, j) = parse_int_entry(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            file.matrix = std::move(m);
            break;
        }
        case RingTag::Analytic: {
            RingMatrix<Jet> m(file.rows, file.cols, Jet::zero(file.point, file.truncation));
            for (int i = 0; i < file.rows; ++i)
                for (int j = 0; j < file.cols; ++j)
                    m(i, j) = parse_jet_entry(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                              file.point, file.truncation);
            file.matrix = std::move(m);
            break;
        }
    }
    return file;
}

MatrixFile read_matrix_file_from_path(const std::string& path, int truncation_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'", 0);
    return read_matrix_file(in, truncation_override);
}

std::vector<Poly> parse_poly_vector(const std::string& text, int expected_size) {
    std::vector<Poly> out;
    for (const std::string& cell : split(text, ','))
        out.push_back(parse_poly_entry(cell));
    if (static_cast<int>(out.size()) != expected_size)
        throw ParseError("expected a vector with " + std::to_string(expected_size) + " entries", 0);
    return out;
}

std::vector<Jet> parse_jet_vector(const std::string& text, int expected_size, const Rational& point,
                                  int truncation) {
    std::vector<Jet> out;
    for (const std::string& cell : split(text, ','))
        out.push_back(parse_jet_entry(cell, point, truncation));
    if (static_cast<int>(out.size()) != expected_size)
        throw ParseError("expected a vector with " + std::to_string(expected_size) + " entries", 0);
    return out;
}

}  // namespace edd
