#pragma once

/**
 * @file expr.hpp
 * @brief Tokenizer, recursive-descent parser and evaluator for the
 *        calculator's expression language.
 *
 * Grammar, lowest to highest precedence:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := unary ('^' integer)?
 *   unary  := '-' unary | atom
 *   atom   := number | ident | ident '(' expr ')'
 *           | '(' expr ',' expr ',' expr ')' | '(' expr ')'
 *
 * A parenthesized triple of real-valued expressions is a ternion
 * literal. '/' divides through the inverse, '^' takes a nonnegative
 * integer literal exponent, and real scalars mix with ternions under
 * '*' and '/' but not '+' or '-'. Every failure is reported as an
 * ExprError carrying a 0-based character position.
 */

#include "ternion/seminorm.hpp"
#include "ternion/sigma_plane.hpp"
#include "ternion/structure.hpp"
#include "ternion/ternion.hpp"

#include <json.hpp>

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ternion::expr {

struct Token {
    enum class Kind { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Slash, Caret };
    Kind kind;
    std::string text;  ///< exact source slice
    std::size_t pos;   ///< 0-based character offset
};

/// Lex, Parse and Arity are syntax errors (CLI exit code 2); the rest
/// surface during evaluation (exit code 1).
enum class ErrorKind { Lex, Parse, Arity, Type, NotInvertible, UnknownName, Overflow };

class ExprError : public std::runtime_error {
public:
    ExprError(ErrorKind kind, std::size_t pos, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + " at position "
                             + std::to_string(pos) + ": " + detail),
          kind_(kind), pos_(pos) {}

    [[nodiscard]] ErrorKind kind() const { return kind_; }
    [[nodiscard]] std::size_t pos() const { return pos_; }

    [[nodiscard]] bool is_syntax_error() const {
        return kind_ == ErrorKind::Lex || kind_ == ErrorKind::Parse
            || kind_ == ErrorKind::Arity;
    }

    static std::string_view kind_name(ErrorKind k) {
        switch (k) {
            case ErrorKind::Lex: return "LexError";
            case ErrorKind::Parse: return "ParseError";
            case ErrorKind::Arity: return "ArityError";
            case ErrorKind::Type: return "TypeError";
            case ErrorKind::NotInvertible: return "NotInvertible";
            case ErrorKind::UnknownName: return "NameError";
            case ErrorKind::Overflow: return "OverflowError";
        }
        return "Error";
    }

private:
    ErrorKind kind_;
    std::size_t pos_;
};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }
inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

inline std::string char_repr(char c) {
    const auto b = static_cast<unsigned char>(c);
    if (b >= 0x20 && b < 0x7f) return std::string("'") + c + "'";
    char buf[16];
    std::snprintf(buf, sizeof buf, "'\\x%02x'", b);
    return buf;
}

}  // namespace detail

/// Split the input into tokens. Numbers are decimal with an optional
/// fraction and exponent; identifiers are ASCII letters or underscores
/// followed by alphanumerics; whitespace separates. Throws ExprError
/// (Lex) on any other character.
inline std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = input.size();
    auto single = [&](Token::Kind k) {
        out.push_back({k, std::string(1, input[i]), i});
        ++i;
    };
    while (i < n) {
        const char c = input[i];
        if (detail::is_space(c)) { ++i; continue; }
        switch (c) {
            case '(': single(Token::Kind::LParen); continue;
            case ')': single(Token::Kind::RParen); continue;
            case ',': single(Token::Kind::Comma); continue;
            case '+': single(Token::Kind::Plus); continue;
            case '-': single(Token::Kind::Minus); continue;
            case '*': single(Token::Kind::Star); continue;
            case '/': single(Token::Kind::Slash); continue;
            case '^': single(Token::Kind::Caret); continue;
            default: break;
        }
        if (detail::is_digit(c)) {
            const std::size_t start = i;
            while (i < n && detail::is_digit(input[i])) ++i;
            if (i + 1 < n && input[i] == '.' && detail::is_digit(input[i + 1])) {
                ++i;
                while (i < n && detail::is_digit(input[i])) ++i;
            }
            if (i < n && (input[i] == 'e' || input[i] == 'E')) {
                // consume the exponent only when well-formed, otherwise
                // leave the 'e' to lex as an identifier
                std::size_t k = i + 1;
                if (k < n && (input[k] == '+' || input[k] == '-')) ++k;
                if (k < n && detail::is_digit(input[k])) {
                    i = k;
                    while (i < n && detail::is_digit(input[i])) ++i;
                }
            }
            out.push_back({Token::Kind::Number,
                           std::string(input.substr(start, i - start)), start});
            continue;
        }
        if (detail::is_ident_start(c)) {
            const std::size_t start = i;
            while (i < n && detail::is_ident_char(input[i])) ++i;
            out.push_back({Token::Kind::Ident,
                           std::string(input.substr(start, i - start)), start});
            continue;
        }
        throw ExprError(ErrorKind::Lex, i,
                        "unexpected character " + detail::char_repr(c));
    }
    return out;
}

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    struct Literal     { Ternion value; };
    struct RealLiteral { double value; };
    struct ConstRef    { std::string name; };
    struct Unary       { char op; ExprPtr operand; };
    struct Binary      { char op; ExprPtr lhs; ExprPtr rhs; };
    struct Call        { std::string func; std::vector<ExprPtr> args; };
    struct Triple      { std::array<ExprPtr, 3> parts; };

    std::variant<Literal, RealLiteral, ConstRef, Unary, Binary, Call, Triple> node;
    std::size_t pos = 0;
};

namespace detail {

inline bool is_known_function(std::string_view name) {
    return name == "conj" || name == "norm" || name == "A" || name == "B"
        || name == "projD" || name == "projG" || name == "inv"
        || name == "reduce" || name == "split";
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expression();
        if (!at_end())
            throw ExprError(ErrorKind::Parse, peek().pos,
                            "unexpected token '" + peek().text + "'");
        return e;
    }

private:
    static constexpr int max_depth = 256;

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    int depth_ = 0;

    [[nodiscard]] bool at_end() const { return index_ >= tokens_.size(); }
    [[nodiscard]] const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    [[nodiscard]] std::size_t here() const {
        if (!at_end()) return peek().pos;
        if (!tokens_.empty()) {
            const Token& last = tokens_.back();
            return last.pos + last.text.size();
        }
        return 0;
    }

    [[nodiscard]] bool match(Token::Kind k) {
        if (!at_end() && peek().kind == k) { ++index_; return true; }
        return false;
    }

    const Token& expect(Token::Kind k, const char* what) {
        if (at_end() || peek().kind != k)
            throw ExprError(ErrorKind::Parse, here(),
                            std::string("expected ") + what);
        return advance();
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > max_depth)
                throw ExprError(ErrorKind::Parse, p_.here(),
                                "expression nested too deeply");
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    static ExprPtr make(std::size_t pos, auto&& node) {
        auto e = std::make_unique<ExprNode>();
        e->node = std::forward<decltype(node)>(node);
        e->pos = pos;
        return e;
    }

    ExprPtr expression() {
        DepthGuard guard(*this);
        ExprPtr lhs = term();
        while (!at_end()
               && (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus)) {
            const Token& op = advance();
            lhs = make(op.pos, ExprNode::Binary{op.text[0], std::move(lhs), term()});
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (!at_end()
               && (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash)) {
            const Token& op = advance();
            lhs = make(op.pos, ExprNode::Binary{op.text[0], std::move(lhs), factor()});
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr base = unary();
        if (!at_end() && peek().kind == Token::Kind::Caret) {
            const Token& op = advance();
            const Token& e = expect(Token::Kind::Number,
                                    "nonnegative integer exponent after '^'");
            unsigned long long n = 0;
            const auto [end, ec] =
                std::from_chars(e.text.data(), e.text.data() + e.text.size(), n);
            if (ec != std::errc{} || end != e.text.data() + e.text.size())
                throw ExprError(ErrorKind::Parse, e.pos,
                                "exponent must be a nonnegative integer literal");
            if (n > (1ull << 53))
                throw ExprError(ErrorKind::Parse, e.pos, "exponent too large");
            base = make(op.pos,
                        ExprNode::Binary{'^', std::move(base),
                                         make(e.pos, ExprNode::RealLiteral{double(n)})});
        }
        return base;
    }

    ExprPtr unary() {
        DepthGuard guard(*this);
        if (!at_end() && peek().kind == Token::Kind::Minus) {
            const Token& op = advance();
            return make(op.pos, ExprNode::Unary{'-', unary()});
        }
        return atom();
    }

    ExprPtr atom() {
        if (at_end())
            throw ExprError(ErrorKind::Parse, here(), "expected expression");
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                advance();
                double value = 0.0;
                const auto [end, ec] =
                    std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
                if (ec != std::errc{} || end != t.text.data() + t.text.size()
                    || !std::isfinite(value))
                    throw ExprError(ErrorKind::Parse, t.pos,
                                    "number literal out of range");
                return make(t.pos, ExprNode::RealLiteral{value});
            }
            case Token::Kind::Ident: {
                advance();
                if (!at_end() && peek().kind == Token::Kind::LParen) return call(t);
                return make(t.pos, ExprNode::ConstRef{t.text});
            }
            case Token::Kind::LParen: return parenthesized(t);
            default:
                throw ExprError(ErrorKind::Parse, t.pos,
                                "expected expression, got '" + t.text + "'");
        }
    }

    ExprPtr call(const Token& name) {
        advance();  // '('
        std::vector<ExprPtr> args;
        args.push_back(expression());
        while (match(Token::Kind::Comma)) args.push_back(expression());
        expect(Token::Kind::RParen, "')' to close the argument list");
        if (detail::is_known_function(name.text) && args.size() != 1)
            throw ExprError(ErrorKind::Arity, name.pos,
                            name.text + " expects exactly 1 argument, got "
                                + std::to_string(args.size()));
        return make(name.pos, ExprNode::Call{name.text, std::move(args)});
    }

    ExprPtr parenthesized(const Token& open) {
        advance();  // '('
        ExprPtr first = expression();
        if (match(Token::Kind::RParen)) return first;
        expect(Token::Kind::Comma, "')' or ','");
        ExprPtr second = expression();
        expect(Token::Kind::Comma, "',' in ternion literal");
        ExprPtr third = expression();
        expect(Token::Kind::RParen, "')' to close the ternion literal");
        return fold_triple(open.pos, std::move(first), std::move(second),
                           std::move(third));
    }

    /// Triples of plain (optionally negated) number literals collapse to
    /// a ternion literal at parse time; anything else stays a Triple and
    /// is checked for real-valued parts during evaluation.
    static ExprPtr fold_triple(std::size_t pos, ExprPtr a, ExprPtr b, ExprPtr c) {
        const auto as_const = [](const ExprPtr& e, double& out) {
            if (const auto* lit = std::get_if<ExprNode::RealLiteral>(&e->node)) {
                out = lit->value;
                return true;
            }
            if (const auto* un = std::get_if<ExprNode::Unary>(&e->node)) {
                if (const auto* lit =
                        std::get_if<ExprNode::RealLiteral>(&un->operand->node)) {
                    out = -lit->value;
                    return true;
                }
            }
            return false;
        };
        double x = 0, y = 0, z = 0;
        if (as_const(a, x) && as_const(b, y) && as_const(c, z))
            return make(pos, ExprNode::Literal{Ternion{x, y, z}});
        return make(pos, ExprNode::Triple{{std::move(a), std::move(b), std::move(c)}});
    }
};

}  // namespace detail

/// Parse a token stream into an expression tree. Throws ExprError.
inline ExprPtr parse(std::vector<Token> tokens) {
    return detail::Parser(std::move(tokens)).run();
}

inline ExprPtr parse_expression(std::string_view input) {
    return parse(tokenize(input));
}

/// Evaluation produces a ternion, a real, or a split form.
using EvalResult = std::variant<Ternion, double, SplitForm>;

namespace detail {

inline const Ternion* constant_by_name(std::string_view name) {
    static const struct Entry { std::string_view name; Ternion value; } table[] = {
        {"one", Ternion::one()},
        {"u", Ternion::unit_u()},
        {"v", Ternion::unit_v()},
        {"delta", Ternion::delta()},
        {"j", hyperbolic_unit()},
        {"oneD", one_d()},
        {"oneG", one_g()},
        {"iG", i_g()},
        {"zero", Ternion::zero()},
    };
    for (const auto& e : table)
        if (e.name == name) return &e.value;
    return nullptr;
}

class Evaluator {
public:
    explicit Evaluator(double tol) : tol_(tol) {}

    EvalResult eval(const ExprNode& e) {
        EvalResult r = std::visit([&](const auto& n) { return dispatch(e, n); },
                                  e.node);
        check_finite(r, e.pos);
        return r;
    }

private:
    double tol_;

    [[noreturn]] static void type_error(std::size_t pos, const std::string& what) {
        throw ExprError(ErrorKind::Type, pos, what);
    }

    static void check_finite(const EvalResult& r, std::size_t pos) {
        const bool ok = std::visit(
            [](const auto& value) {
                using T = std::decay_t<decltype(value)>;
                if constexpr (std::is_same_v<T, Ternion>) return is_finite(value);
                else if constexpr (std::is_same_v<T, double>) return std::isfinite(value);
                else
                    return std::isfinite(value.z.real()) && std::isfinite(value.z.imag())
                        && std::isfinite(value.r);
            },
            r);
        if (!ok) throw ExprError(ErrorKind::Overflow, pos, "result is not finite");
    }

    EvalResult dispatch(const ExprNode&, const ExprNode::Literal& n) { return n.value; }
    EvalResult dispatch(const ExprNode&, const ExprNode::RealLiteral& n) { return n.value; }

    EvalResult dispatch(const ExprNode& e, const ExprNode::ConstRef& n) {
        if (const Ternion* c = constant_by_name(n.name)) return *c;
        throw ExprError(ErrorKind::UnknownName, e.pos,
                        "unknown identifier '" + n.name + "'");
    }

    EvalResult dispatch(const ExprNode& e, const ExprNode::Unary& n) {
        EvalResult operand = eval(*n.operand);
        if (const auto* t = std::get_if<Ternion>(&operand)) return -*t;
        if (const auto* r = std::get_if<double>(&operand)) return -*r;
        type_error(e.pos, "cannot negate a split value");
    }

    EvalResult dispatch(const ExprNode&, const ExprNode::Triple& n) {
        std::array<double, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) {
            EvalResult part = eval(*n.parts[i]);
            const auto* r = std::get_if<double>(&part);
            if (!r)
                type_error(n.parts[i]->pos,
                           "ternion literal components must be real");
            c[i] = *r;
        }
        return Ternion{c[0], c[1], c[2]};
    }

    EvalResult dispatch(const ExprNode& e, const ExprNode::Binary& n) {
        EvalResult lhs = eval(*n.lhs);
        if (n.op == '^') {
            const auto& exponent = std::get<ExprNode::RealLiteral>(n.rhs->node);
            return power(lhs, static_cast<unsigned long long>(exponent.value), e.pos);
        }
        EvalResult rhs = eval(*n.rhs);
        if (std::holds_alternative<SplitForm>(lhs) || std::holds_alternative<SplitForm>(rhs))
            type_error(e.pos, "split values do not support arithmetic");
        const auto* lt = std::get_if<Ternion>(&lhs);
        const auto* rt = std::get_if<Ternion>(&rhs);
        const auto* lr = std::get_if<double>(&lhs);
        const auto* rr = std::get_if<double>(&rhs);
        switch (n.op) {
            case '+':
                if (lt && rt) return *lt + *rt;
                if (lr && rr) return *lr + *rr;
                type_error(e.pos, "cannot add a real and a ternion");
            case '-':
                if (lt && rt) return *lt - *rt;
                if (lr && rr) return *lr - *rr;
                type_error(e.pos, "cannot subtract a real and a ternion");
            case '*':
                if (lt && rt) return *lt * *rt;
                if (lr && rt) return *lr * *rt;
                if (lt && rr) return *lt * *rr;
                return *lr * *rr;
            case '/': return divide(lhs, rhs, e.pos);
            default: break;
        }
        type_error(e.pos, std::string("unsupported operator '") + n.op + "'");
    }

    EvalResult divide(const EvalResult& lhs, const EvalResult& rhs, std::size_t pos) {
        if (const auto* rt = std::get_if<Ternion>(&rhs)) {
            const std::optional<Ternion> inverse = invert(*rt, tol_);
            if (!inverse)
                throw ExprError(ErrorKind::NotInvertible, pos,
                                "divisor is a zero divisor or zero");
            if (const auto* lt = std::get_if<Ternion>(&lhs)) return *lt * *inverse;
            return std::get<double>(lhs) * *inverse;
        }
        const double den = std::get<double>(rhs);
        if (std::fabs(den) <= tol_)
            throw ExprError(ErrorKind::NotInvertible, pos, "division by zero");
        if (const auto* lt = std::get_if<Ternion>(&lhs)) return *lt / den;
        return std::get<double>(lhs) / den;
    }

    /// Exponentiation by squaring; x^0 is the respective unit.
    static EvalResult power(const EvalResult& base, unsigned long long n,
                            std::size_t pos) {
        if (const auto* t = std::get_if<Ternion>(&base)) {
            Ternion acc = Ternion::one();
            Ternion b = *t;
            while (n > 0) {
                if (n & 1ull) acc = acc * b;
                b = b * b;
                n >>= 1ull;
            }
            return acc;
        }
        if (const auto* r = std::get_if<double>(&base)) {
            double acc = 1.0;
            double b = *r;
            while (n > 0) {
                if (n & 1ull) acc *= b;
                b *= b;
                n >>= 1ull;
            }
            return acc;
        }
        type_error(pos, "split values do not support exponentiation");
    }

    EvalResult dispatch(const ExprNode& e, const ExprNode::Call& n) {
        if (!is_known_function(n.func))
            throw ExprError(ErrorKind::UnknownName, e.pos,
                            "unknown function '" + n.func + "'");
        EvalResult arg = eval(*n.args[0]);
        const auto* t = std::get_if<Ternion>(&arg);
        if (!t) type_error(e.pos, n.func + " expects a ternion argument");
        if (n.func == "conj") return conj(*t);
        if (n.func == "norm") return abs_value(*t);
        if (n.func == "A") return quad_forms(*t).a;
        if (n.func == "B") return quad_forms(*t).b;
        if (n.func == "projD") return proj_d(*t);
        if (n.func == "projG") return proj_g(*t);
        if (n.func == "reduce") return reduce_mod_d(*t);
        if (n.func == "split") return split(*t);
        // inv
        const std::optional<Ternion> inverse = invert(*t, tol_);
        if (!inverse)
            throw ExprError(ErrorKind::NotInvertible, e.pos,
                            "argument is a zero divisor or zero");
        return *inverse;
    }
};

}  // namespace detail

/// Evaluate a parsed tree. Constants: one, u, v, delta, j, oneD, oneG,
/// iG, zero. Functions: conj, norm, A, B, projD, projG, inv, reduce,
/// split. tol is forwarded to inversion. Throws ExprError.
inline EvalResult evaluate(const ExprNode& node, double tol = default_rel_tol) {
    return detail::Evaluator(tol).eval(node);
}

enum class OutputMode { Tuple, Split, Json };

/// One number, 12 significant digits, trailing zeros trimmed, -0
/// normalized to 0.
inline std::string format_real(double value) {
    if (value == 0.0) value = 0.0;  // squash negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace detail {

/// Integral doubles serialize as JSON integers, everything else keeps
/// the shortest round-trip double form.
inline nlohmann::ordered_json json_number(double value) {
    if (value == 0.0) value = 0.0;
    constexpr double exact_int_limit = 9007199254740992.0;  // 2^53
    if (std::nearbyint(value) == value && std::fabs(value) <= exact_int_limit)
        return static_cast<std::int64_t>(value);
    return value;
}

inline std::string format_split(const SplitForm& f) {
    return "z = " + format_real(f.z.real()) + " + " + format_real(f.z.imag())
         + "i, r = " + format_real(f.r);
}

}  // namespace detail

/// The {"kind": ..., "value": ...} object used by JSON output.
inline nlohmann::ordered_json result_to_json(const EvalResult& r) {
    nlohmann::ordered_json j;
    if (const auto* t = std::get_if<Ternion>(&r)) {
        j["kind"] = "ternion";
        j["value"] = {detail::json_number(t->s), detail::json_number(t->u),
                      detail::json_number(t->v)};
    } else if (const auto* d = std::get_if<double>(&r)) {
        j["kind"] = "real";
        j["value"] = detail::json_number(*d);
    } else {
        const auto& f = std::get<SplitForm>(r);
        j["kind"] = "split";
        j["value"] = {{"z_re", detail::json_number(f.z.real())},
                      {"z_im", detail::json_number(f.z.imag())},
                      {"r", detail::json_number(f.r)}};
    }
    return j;
}

/// Render a result. Tuple mode prints ternions as "(a, b, c)" and reals
/// bare; split mode shows any ternion in its C x R coordinates; split
/// forms print as "z = <re> + <im>i, r = <r>" in both text modes.
inline std::string format_result(const EvalResult& r, OutputMode mode) {
    if (mode == OutputMode::Json) return result_to_json(r).dump();
    if (const auto* d = std::get_if<double>(&r)) return format_real(*d);
    if (const auto* f = std::get_if<SplitForm>(&r)) return detail::format_split(*f);
    const Ternion& t = std::get<Ternion>(r);
    if (mode == OutputMode::Split) return detail::format_split(split(t));
    return "(" + format_real(t.s) + ", " + format_real(t.u) + ", "
         + format_real(t.v) + ")";
}

}  // namespace ternion::expr
