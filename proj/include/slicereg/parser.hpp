#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "slicereg/polynomial.hpp"

namespace slicereg {

struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& m, std::size_t p)
        : Error("SyntaxError at " + std::to_string(p) + ": " + m), pos(p) {}
};

struct UnknownVariable : Error {
    UnknownVariable(const std::string& name, std::size_t p)
        : Error("UnknownVariable at " + std::to_string(p) + ": " + name) {}
};

// Surface expressions: rationals "p/q", unit literals i/j/k (optionally
// scaled, "3/2j"), variables q1..qn (plain "q" allowed when nvars = 1),
// unary minus, +, - , * (always the star product) and ^ (star power).
// Precedence: ^ > unary - > * > +/-. Juxtaposition is not multiplication.
struct Expr {
    enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    Quaternion value;      // Constant
    unsigned var = 0;      // Variable (1-based)
    unsigned exponent = 0;  // Pow
    std::vector<std::unique_ptr<Expr>> args;
};

using ExprPtr = std::unique_ptr<Expr>;

namespace detail {

class Parser {
public:
    Parser(const std::string& text, unsigned nvars) : text_(text), nvars_(nvars) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = text_[pos_++];
                ExprPtr rhs = parse_product();
                auto n = std::make_unique<Expr>();
                n->kind = op == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
                n->args.push_back(std::move(e));
                n->args.push_back(std::move(rhs));
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                ExprPtr rhs = parse_unary();
                auto n = std::make_unique<Expr>();
                n->kind = Expr::Kind::Mul;
                n->args.push_back(std::move(e));
                n->args.push_back(std::move(rhs));
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            auto n = std::make_unique<Expr>();
            n->kind = Expr::Kind::Neg;
            n->args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) throw SyntaxError("exponent must be a nonnegative integer", pos_);
            unsigned e = 0;
            while (std::isdigit(peek())) e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            auto n = std::make_unique<Expr>();
            n->kind = Expr::Kind::Pow;
            n->exponent = e;
            n->args.push_back(std::move(base));
            return n;
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(c)) {
            Rational r = lex_rational();
            // A unit glued to a number is a scaled unit literal, e.g. "3/2j".
            char u = peek();
            if (u == 'i' || u == 'j' || u == 'k') {
                ++pos_;
                return constant(unit(u) * r);
            }
            return constant(Quaternion(r));
        }
        if (c == 'i' || c == 'j' || c == 'k') {
            ++pos_;
            return constant(unit(c));
        }
        if (c == 'q') {
            ++pos_;
            unsigned idx = 0;
            bool has_digits = false;
            while (std::isdigit(peek())) {
                has_digits = true;
                idx = idx * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            }
            if (!has_digits) {
                if (nvars_ != 1) throw UnknownVariable("q", start);
                idx = 1;
            }
            if (idx < 1 || idx > nvars_)
                throw UnknownVariable("q" + std::to_string(idx), start);
            auto n = std::make_unique<Expr>();
            n->kind = Expr::Kind::Variable;
            n->var = idx;
            return n;
        }
        throw SyntaxError("expected an atom", pos_);
    }

    Rational lex_rational() {
        Integer num = lex_integer();
        if (peek() == '/') {
            std::size_t p = pos_++;
            if (!std::isdigit(peek())) throw SyntaxError("expected denominator", p + 1);
            Integer den = lex_integer();
            if (den == 0) throw SyntaxError("zero denominator", p + 1);
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer lex_integer() {
        std::string digits;
        while (std::isdigit(peek())) digits += text_[pos_++];
        return Integer(digits);
    }

    static Quaternion unit(char c) {
        if (c == 'i') return Quaternion::unit_i();
        if (c == 'j') return Quaternion::unit_j();
        return Quaternion::unit_k();
    }

    static ExprPtr constant(const Quaternion& q) {
        auto n = std::make_unique<Expr>();
        n->kind = Expr::Kind::Constant;
        n->value = q;
        return n;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    unsigned nvars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(const std::string& text, unsigned nvars) {
    return detail::Parser(text, nvars).parse();
}

// Lowering goes through the ring operations, so the noncommutative
// coefficient placement is automatic.
inline SlicePoly lower(const Expr& e, unsigned nvars) {
    switch (e.kind) {
        case Expr::Kind::Constant: return SlicePoly::constant(nvars, e.value);
        case Expr::Kind::Variable: return SlicePoly::variable(nvars, e.var);
        case Expr::Kind::Neg: return -lower(*e.args[0], nvars);
        case Expr::Kind::Add: return lower(*e.args[0], nvars) + lower(*e.args[1], nvars);
        case Expr::Kind::Sub: return lower(*e.args[0], nvars) - lower(*e.args[1], nvars);
        case Expr::Kind::Mul: return star_mul(lower(*e.args[0], nvars), lower(*e.args[1], nvars));
        case Expr::Kind::Pow: return star_pow(lower(*e.args[0], nvars), e.exponent);
    }
    throw Error("unreachable expression kind");
}

inline SlicePoly parse_poly(const std::string& text, unsigned nvars) {
    return lower(*parse(text, nvars), nvars);
}

// Quaternion with zero parts omitted and unit scales dropped: "0", "-1",
// "i", "1+2i-1/2k". Each form re-lexes to the same value.
inline std::string compact(const Quaternion& q) {
    std::string s;
    auto piece = [&](const Rational& r, const char* unit) {
        if (r == 0) return;
        std::string mag = to_string(r < 0 ? -r : r);
        if (unit[0] != '\0' && mag == "1") mag.clear();
        if (s.empty()) s += (r < 0 ? "-" : "") + mag + unit;
        else s += (r < 0 ? " - " : " + ") + mag + unit;
    };
    piece(q.w, "");
    piece(q.x, "i");
    piece(q.y, "j");
    piece(q.z, "k");
    return s.empty() ? "0" : s;
}

// Canonical printer: terms in descending graded lex order, each term as
// monomial * parenthesized coefficient with the coefficient rightmost
// (omitted when it is 1). The output re-parses to the same polynomial.
inline std::string to_string(const SlicePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "q" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += "(" + compact(c) + ")";
        else if (c == Quaternion(1)) out += mono;
        else out += mono + "*(" + compact(c) + ")";
    }
    return out;
}

}  // namespace slicereg
