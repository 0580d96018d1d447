#pragma once

/**
 * @file parse.hpp
 * @brief Text parser for symmetric-function expressions.
 *
 * Grammar (whitespace-insensitive):
 *   expr     := ('+'|'-')? term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := atom ('^' nat)?
 *   atom     := rational | 'e' nat | 'p' nat | '(' expr ')'
 *   rational := nat ('/' nat)?
 *
 * Power-sum generators p<k> are eliminated at parse time via Newton's
 * identities, so the result lives in the elementary basis. The same
 * machinery parses Bernoulli witness polynomials over x3, x5, ...
 */

#include <symcong/symfunc.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace symcong {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

namespace detail {

/// Recursive-descent parser over a ring Value; Atom maps a generator
/// letter and index to a Value (or nullopt for an unknown letter).
template <class Value, class Atom>
class ExprParser {
public:
    ExprParser(std::string_view text, Atom atom) : text_(text), atom_(atom) {}

    Value parse() {
        Value f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    Value expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Value f = term();
        if (negate) f = -f;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Value t = term();
            if (c == '+') f += t;
            else f -= t;
        }
        return f;
    }

    Value term() {
        Value f = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            f = f * factor();
        }
        return f;
    }

    Value factor() {
        Value f = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            f = f.pow(static_cast<unsigned>(nat("exponent")));
        }
        return f;
    }

    Value atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Value f = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t at = pos_;
            take();
            unsigned long k = nat("generator index");
            std::optional<Value> v;
            try {
                v = atom_(c, static_cast<unsigned>(k));
            } catch (const std::domain_error& e) {
                throw ParseError(at, e.what());
            }
            if (!v) throw ParseError(at, std::string("unknown generator '") + c + "'");
            return std::move(*v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(static_cast<unsigned long>(nat("number")));
            skip_ws();
            if (peek() == '/') {
                take();
                unsigned long den = nat("denominator");
                if (den == 0) fail("zero denominator");
                return Value(make_rat(num, Int(den)));
            }
            return Value(Rat(num));
        }
        fail("expected rational, generator, or '('");
    }

    unsigned long nat(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(take() - '0');
            if (v > 1'000'000'000UL) fail("number too large");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    std::string_view text_;
    Atom atom_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression in generators e<k>, p<k> with rational
/// coefficients into a SymFunc in the elementary basis.
/// Throws ParseError (with position) on malformed input.
inline SymFunc parse_symfunc(std::string_view text) {
    auto atom = [](char letter, unsigned k) -> std::optional<SymFunc> {
        if (letter != 'e' && letter != 'p') return std::nullopt;
        if (k == 0) throw std::domain_error("generator index must be >= 1");
        if (letter == 'e') return SymFunc::generator(k);
        return power_sum_to_e(k);
    };
    return detail::ExprParser<SymFunc, decltype(atom)>(text, atom).parse();
}

}  // namespace symcong
