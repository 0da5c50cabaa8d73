#pragma once

// Arithmetic expressions over a graded ring: named generators, integer and
// p/q literals, monomials t[1,2] (or t^(1,2)), + - * ^ and parentheses.

#include "gradedk/ring/monoid_ring.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace gradedk {

class ExpressionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Scalar S>
class ExpressionParser {
public:
    ExpressionParser(const GradedRing<S>& ring, std::string_view text) : ring_(ring), s_(text) {}

    RingElem<S> parse() {
        auto x = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ExpressionError("expression column " + std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    RingElem<S> sum() {
        auto x = product();
        while (true) {
            if (eat('+')) x = x + product();
            else if (eat('-')) x = x - product();
            else return x;
        }
    }
    RingElem<S> product() {
        auto x = unary();
        while (eat('*')) x = x * unary();
        return x;
    }
    RingElem<S> unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RingElem<S> power() {
        auto x = atom();
        if (eat('^')) {
            skip();
            auto k = integer();
            if (k < 0) fail("negative exponent");
            if (k > 10000) fail("exponent too large");
            x = x.pow(static_cast<unsigned>(k));
        }
        return x;
    }

    std::int64_t integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string t(s_.substr(start, pos_ - start));
        if (t.empty() || t == "-") fail("expected an integer");
        try {
            return std::stoll(t);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    LatticePoint exponent(char close) {
        std::vector<std::int64_t> c{integer()};
        while (eat(',')) c.push_back(integer());
        expect(close);
        return LatticePoint(std::move(c));
    }

    RingElem<S> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto x = sum();
            expect(')');
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            std::string lit(s_.substr(start, pos_ - start));
            Rational r;
            try {
                r = Rational::parse(lit);
            } catch (const std::exception& ex) {
                fail(ex.what());
            }
            return ring_.constant(scalar_of(r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "t") {
                if (eat('[')) return ring_.monomial(checked_exp(exponent(']')));
                if (eat('^')) {
                    expect('(');
                    return ring_.monomial(checked_exp(exponent(')')));
                }
                fail("expected '[' or '^(' after t");
            }
            return ring_.generator(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    LatticePoint checked_exp(LatticePoint p) const {
        if (p.dim() != ring_.dim()) throw ExpressionError("monomial " + p.to_string() + " has the wrong number of coordinates");
        return p;
    }

    /// Image of a rational literal in S (numerator times inverse denominator).
    S scalar_of(const Rational& r) const {
        auto to_s = [&](const BigInt& v) {
            if constexpr (std::is_same_v<S, Rational>) {
                return Rational(v);
            } else {
                BigInt lim(std::numeric_limits<std::int64_t>::max());
                if (v > lim) throw ExpressionError("literal too large for this base");
                return from_int_like(ring_.base_one(), static_cast<std::int64_t>(v));
            }
        };
        return to_s(r.numerator()) * inverse(to_s(r.denominator()));
    }

    const GradedRing<S>& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <Scalar S>
RingElem<S> parse_expression(const GradedRing<S>& ring, std::string_view text) {
    return ExpressionParser<S>(ring, text).parse();
}

}  // namespace gradedk
