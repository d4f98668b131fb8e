#pragma once

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mellin/core.hpp"
#include "mellin/gamma.hpp"
#include "mellin/polynomials.hpp"
#include "mellin/zeta.hpp"

namespace mellin {

struct ParseError : std::runtime_error {
    int position;  // 0-based column into the source string
    ParseError(const std::string& msg, int pos)
        : std::runtime_error(msg), position(pos) {}
};

struct UnboundVariable : DomainError {
    std::string name;
    explicit UnboundVariable(const std::string& n)
        : DomainError("unbound variable: " + n), name(n) {}
};

enum class TokenKind {
    number,
    identifier,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    comma,
    end
};

struct Token {
    TokenKind kind;
    std::string text;
    int position;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](TokenKind k, size_t start, size_t len) {
        out.push_back({k, src.substr(start, len), int(start)});
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            // exponent only with at least one digit; otherwise the 'e' is
            // left for the identifier lexer (longest match that still scans)
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    ++j;
                    while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
                    i = j;
                }
            }
            // imaginary literal: a trailing 'i' that is not the start of a
            // longer identifier, so "2i" is one number and "2in" is not
            if (i < src.size() && src[i] == 'i' &&
                (i + 1 >= src.size() ||
                 (!std::isalnum(static_cast<unsigned char>(src[i + 1])) &&
                  src[i + 1] != '_')))
                ++i;
            push(TokenKind::number, start, i - start);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            push(TokenKind::identifier, start, i - start);
            continue;
        }
        TokenKind k;
        switch (c) {
            case '+': k = TokenKind::plus; break;
            case '-': k = TokenKind::minus; break;
            case '*': k = TokenKind::star; break;
            case '/': k = TokenKind::slash; break;
            case '^': k = TokenKind::caret; break;
            case '(': k = TokenKind::lparen; break;
            case ')': k = TokenKind::rparen; break;
            case ',': k = TokenKind::comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", int(i));
        }
        push(k, i, 1);
        ++i;
    }
    out.push_back({TokenKind::end, "", int(src.size())});
    return out;
}

struct ExprAst;
using ExprPtr = std::unique_ptr<ExprAst>;

struct ExprAst {
    enum class Kind { literal, variable, neg, binary, call } kind;
    double literal = 0.0;
    bool literal_imag = false;  // literal came with the 'i' suffix
    std::string name;  // variable name, call name, or binary op symbol
    std::vector<ExprPtr> children;
    int position = 0;
};

namespace detail {

// name -> arity; parse-time contract for calls
inline const std::map<std::string, int>& builtin_arity() {
    static const std::map<std::string, int> table = {
        {"gamma", 1}, {"sin", 1},  {"cos", 1},     {"exp", 1},  {"log", 1},
        {"cosh", 1},  {"sqrt", 1}, {"abs", 1},     {"re", 1},   {"im", 1},
        {"zeta", 2},  {"eta", 2},  {"L", 1},       {"hermite", 2},
        {"bell", 2},
    };
    return table;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (peek().kind != TokenKind::end)
            throw ParseError("trailing input after expression", peek().position);
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool eat(TokenKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    static ExprPtr node(ExprAst::Kind k, int pos) {
        auto p = std::make_unique<ExprAst>();
        p->kind = k;
        p->position = pos;
        return p;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            Token op = take();
            ExprPtr b = node(ExprAst::Kind::binary, op.position);
            b->name = op.text;
            b->children.push_back(std::move(lhs));
            b->children.push_back(term());
            lhs = std::move(b);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            Token op = take();
            ExprPtr b = node(ExprAst::Kind::binary, op.position);
            b->name = op.text;
            b->children.push_back(std::move(lhs));
            b->children.push_back(unary());
            lhs = std::move(b);
        }
        return lhs;
    }

    // unary minus binds looser than '^': -s^2 parses as -(s^2)
    ExprPtr unary() {
        if (peek().kind == TokenKind::minus) {
            Token op = take();
            ExprPtr n = node(ExprAst::Kind::neg, op.position);
            n->children.push_back(unary());
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (peek().kind == TokenKind::caret) {
            Token op = take();
            ExprPtr b = node(ExprAst::Kind::binary, op.position);
            b->name = "^";
            b->children.push_back(std::move(base));
            b->children.push_back(unary());  // right-assoc, exponent may be signed
            return b;
        }
        return base;
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::number: {
                Token num = take();
                ExprPtr n = node(ExprAst::Kind::literal, num.position);
                if (num.text.back() == 'i') {
                    n->literal_imag = true;
                    n->literal = std::stod(num.text.substr(0, num.text.size() - 1));
                } else {
                    n->literal = std::stod(num.text);
                }
                return n;
            }
            case TokenKind::identifier: {
                Token id = take();
                if (peek().kind != TokenKind::lparen) {
                    ExprPtr n = node(ExprAst::Kind::variable, id.position);
                    n->name = id.text;
                    return n;
                }
                take();  // '('
                ExprPtr n = node(ExprAst::Kind::call, id.position);
                n->name = id.text;
                if (!eat(TokenKind::rparen)) {
                    do n->children.push_back(expr());
                    while (eat(TokenKind::comma));
                    if (!eat(TokenKind::rparen))
                        throw ParseError("expected ')' or ','", peek().position);
                }
                auto it = builtin_arity().find(n->name);
                if (it == builtin_arity().end())
                    throw ParseError("unknown function: " + n->name, id.position);
                if (int(n->children.size()) != it->second)
                    throw ParseError(n->name + " expects " +
                                         std::to_string(it->second) + " argument(s)",
                                     id.position);
                return n;
            }
            case TokenKind::lparen: {
                take();
                ExprPtr inner = expr();
                if (!eat(TokenKind::rparen))
                    throw ParseError("expected ')'", peek().position);
                return inner;
            }
            default:
                throw ParseError("expected a value", t.position);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

inline int int_arg(Complex v, const std::string& fn, int position) {
    double r = std::round(v.real());
    if (std::abs(v.imag()) > 1e-9 || std::abs(v.real() - r) > 1e-9 || r < 0)
        throw DomainError(fn + ": first argument must be a nonnegative integer (at column " +
                          std::to_string(position) + ")");
    return int(r);
}

}  // namespace detail

inline ExprPtr parse(std::vector<Token> tokens) {
    return detail::Parser(std::move(tokens)).run();
}

inline ExprPtr parse(const std::string& src) { return parse(tokenize(src)); }

using Bindings = std::map<std::string, Complex>;

inline Complex evaluate(const ExprAst& ast, const Bindings& bindings) {
    switch (ast.kind) {
        case ExprAst::Kind::literal:
            return ast.literal_imag ? Complex{0.0, ast.literal}
                                    : Complex{ast.literal};
        case ExprAst::Kind::variable: {
            if (auto it = bindings.find(ast.name); it != bindings.end())
                return it->second;
            if (ast.name == "pi") return Complex{pi};
            if (ast.name == "e") return Complex{2.718281828459045235};
            if (ast.name == "i") return Complex{0.0, 1.0};
            throw UnboundVariable(ast.name);
        }
        case ExprAst::Kind::neg:
            return -evaluate(*ast.children[0], bindings);
        case ExprAst::Kind::binary: {
            Complex a = evaluate(*ast.children[0], bindings);
            Complex b = evaluate(*ast.children[1], bindings);
            switch (ast.name[0]) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);  // principal branch
            }
            throw DomainError("unknown operator " + ast.name);
        }
        case ExprAst::Kind::call: {
            std::vector<Complex> args;
            args.reserve(ast.children.size());
            for (const auto& c : ast.children) args.push_back(evaluate(*c, bindings));
            const std::string& f = ast.name;
            try {
                if (f == "gamma") return gamma(args[0]);
                if (f == "sin") return std::sin(args[0]);
                if (f == "cos") return std::cos(args[0]);
                if (f == "exp") return std::exp(args[0]);
                if (f == "log") return std::log(args[0]);
                if (f == "cosh") return std::cosh(args[0]);
                if (f == "sqrt") return std::sqrt(args[0]);
                if (f == "abs") return Complex{std::abs(args[0])};
                if (f == "re") return Complex{args[0].real()};
                if (f == "im") return Complex{args[0].imag()};
                if (f == "zeta") return hurwitz_zeta(args[0], args[1]);
                if (f == "eta") return alt_hurwitz_eta(args[0], args[1]);
                if (f == "L") return euler_L(args[0]);
                if (f == "hermite")
                    return hermite(detail::int_arg(args[0], f, ast.position), args[1]);
                if (f == "bell")
                    return exp_poly(detail::int_arg(args[0], f, ast.position), args[1]);
            } catch (const DomainError& err) {
                throw DomainError(std::string(err.what()) + " (in " + f +
                                  " at column " + std::to_string(ast.position) + ")");
            }
            throw DomainError("unknown function " + f);
        }
    }
    throw DomainError("corrupt expression tree");
}

// Full parentheses; parse(print(ast)) reproduces the tree exactly.
inline std::string print_expr(const ExprAst& ast) {
    char buf[32];
    switch (ast.kind) {
        case ExprAst::Kind::literal:
            std::snprintf(buf, sizeof buf, ast.literal_imag ? "%.17gi" : "%.17g",
                          ast.literal);
            return buf;
        case ExprAst::Kind::variable:
            return ast.name;
        case ExprAst::Kind::neg:
            return "(-" + print_expr(*ast.children[0]) + ")";
        case ExprAst::Kind::binary:
            return "(" + print_expr(*ast.children[0]) + ast.name +
                   print_expr(*ast.children[1]) + ")";
        case ExprAst::Kind::call: {
            std::string s = ast.name + "(";
            for (size_t k = 0; k < ast.children.size(); ++k) {
                if (k) s += ",";
                s += print_expr(*ast.children[k]);
            }
            return s + ")";
        }
    }
    return "";
}

inline bool expr_equal(const ExprAst& a, const ExprAst& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    if (a.kind == ExprAst::Kind::literal &&
        (a.literal != b.literal || a.literal_imag != b.literal_imag))
        return false;
    if (a.name != b.name) return false;
    for (size_t k = 0; k < a.children.size(); ++k)
        if (!expr_equal(*a.children[k], *b.children[k])) return false;
    return true;
}

}  // namespace mellin
