#pragma once

// Text encodings of coefficients. Rationals are "p/q" ("p" when q = 1),
// field elements "v mod p" (a bare integer is reduced modulo p), product
// elements "(c1, c2, ...)".

#include "gradedk/exact/scalar.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gradedk {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return std::string(s.substr(b, e - b));
}

/// Splits on commas at parenthesis depth zero.
inline std::vector<std::string> split_top_level(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

}  // namespace detail

inline Rational parse_coefficient(std::string_view text, const Rational&) { return Rational::parse(detail::trim(text)); }

inline PrimeFieldElem parse_coefficient(std::string_view text, const PrimeFieldElem& proto) {
    auto t = detail::trim(text);
    if (t.find(" mod ") != std::string::npos) {
        auto x = PrimeFieldElem::parse(t);
        if (x.modulus() != proto.modulus())
            throw std::invalid_argument("element '" + t + "' is not in the field of " + std::to_string(proto.modulus()) +
                                        " elements");
        return x;
    }
    Rational r = Rational::parse(t);
    auto reduce = [&](const BigInt& v) {
        BigInt m = v % BigInt(proto.modulus());
        if (m < 0) m += BigInt(proto.modulus());
        return PrimeFieldElem(static_cast<std::int64_t>(m), proto.modulus());
    };
    return reduce(r.numerator()) * inverse(reduce(r.denominator()));
}

template <class F>
Product<F> parse_coefficient(std::string_view text, const Product<F>& proto) {
    auto t = detail::trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("product element '" + t + "' must be written as (c1, ..., cm)");
    auto parts = detail::split_top_level(std::string_view(t).substr(1, t.size() - 2));
    if (parts.size() != proto.size())
        throw std::invalid_argument("product element '" + t + "' has " + std::to_string(parts.size()) +
                                    " components, expected " + std::to_string(proto.size()));
    std::vector<F> c;
    for (std::size_t i = 0; i < parts.size(); ++i) c.push_back(parse_coefficient(parts[i], proto[i]));
    return Product<F>(std::move(c));
}

}  // namespace gradedk
