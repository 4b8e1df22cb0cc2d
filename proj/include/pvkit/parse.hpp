#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "pvkit/diffpoly.hpp"
#include "pvkit/error.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

namespace detail {

/// Recursive-descent parser shared by the RatFunc and DiffPoly front ends.
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := primary ['^' integer]
///   primary := integer | 't' | indet | '(' expr ')'
///   indet   := 'x' [1-9] ("'" | "''" | "^(" integer ")")
///
/// A leading minus is accepted only at the start of an expression.
template <class V>
class ExprParser {
public:
    ExprParser(std::string_view text, bool allow_indeterminates)
        : s_(text), allow_x_(allow_indeterminates) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

    bool saw_plain() const noexcept { return saw_plain_; }
    bool saw_indexed() const noexcept { return saw_indexed_; }
    std::uint32_t max_index() const noexcept { return max_index_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    bool allow_x_;
    bool saw_plain_ = false, saw_indexed_ = false;
    std::uint32_t max_index_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw syntax_error(pos_ + 1, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string &msg) const { throw syntax_error(at + 1, msg); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    Integer digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) {
            if (pos_ >= s_.size()) fail("unexpected end of input");
            fail("expected integer");
        }
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    unsigned small_integer(unsigned limit) {
        skip();
        std::size_t at = pos_;
        Integer k = digits();
        if (k > limit) fail_at(at, "integer too large");
        return static_cast<unsigned>(k.get_ui());
    }

    V expr() {
        V v;
        bool negate = accept('-');
        v = term();
        if (negate) v = -v;
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    V term() {
        V v = factor();
        for (;;) {
            if (accept('*')) {
                v = v * factor();
            } else if (peek('/')) {
                std::size_t at = pos_++;
                v = divide(v, factor(), at);
            } else {
                return v;
            }
        }
    }

    V factor() {
        V v = primary();
        if (accept('^')) v = v.pow(small_integer(1000));
        return v;
    }

    V primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return V(RatFunc(Rational(digits())));
        if (c == 't') {
            ++pos_;
            return V(RatFunc::t());
        }
        if (c == 'x' && allow_x_) return indeterminate();
        if (c == '(') {
            ++pos_;
            V v = expr();
            expect(')');
            return v;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    V indeterminate() {
        ++pos_;
        std::uint32_t index = 0;
        if (pos_ < s_.size() && s_[pos_] >= '1' && s_[pos_] <= '9') {
            index = static_cast<std::uint32_t>(s_[pos_] - '1');
            ++pos_;
            saw_indexed_ = true;
            max_index_ = std::max(max_index_, index + 1);
        } else {
            saw_plain_ = true;
        }
        std::uint32_t order = 0;
        while (pos_ < s_.size() && s_[pos_] == '\'') {
            if (++order > 2) fail("more than two primes");
            ++pos_;
        }
        if (order == 0 && s_.substr(pos_, 2) == "^(") {
            pos_ += 2;
            order = small_integer(10000);
            expect(')');
        }
        if constexpr (std::is_same_v<V, DiffPoly>) {
            return DiffPoly::variable(DerivVar{index, order});
        } else {
            fail("indeterminate not allowed here");
        }
    }

    static V divide(const V &a, const V &b, std::size_t at) {
        if constexpr (std::is_same_v<V, DiffPoly>) {
            if (!b.is_constant()) throw syntax_error(at + 1, "divisor must not contain indeterminates");
            if (b.is_zero()) throw error(errc::division_by_zero, "division by zero");
            return a.scaled(b.constant_value().inverse());
        } else {
            return a / b;
        }
    }
};

} // namespace detail

/// Parses a rational function of t; the result lives in Q(t).
inline RatFunc parse_ratfunc(std::string_view text) {
    detail::ExprParser<RatFunc> p(text, false);
    return p.parse().retagged(FieldTag::rational_functions);
}

/// Parses a differential polynomial in x or in x1..x9 (never both).
inline DiffPoly parse_diffpoly(std::string_view text) {
    detail::ExprParser<DiffPoly> p(text, true);
    DiffPoly v = p.parse();
    if (p.saw_plain() && p.saw_indexed())
        throw error(errc::mixed_arity, "both x and indexed indeterminates appear");
    DiffPoly out;
    for (const auto &[mono, c] : v.terms())
        out += DiffPoly::term(mono, c.retagged(FieldTag::rational_functions));
    out.set_num_indeterminates(std::max<std::size_t>(1, p.max_index()));
    return out;
}

} // namespace pvkit
