#pragma once

// Arbitrary-precision rationals in canonical form (lowest terms, positive
// denominator). Text encoding is "p/q", or "p" when q = 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedk {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
    Rational(const BigInt& v) : value_(v) {}  // NOLINT(implicit)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        // cpp_rational rejects negative denominators.
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    int sign() const { return value_.sign(); }
    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Largest integer not exceeding this value.
    BigInt floor() const {
        BigInt q = numerator() / denominator();  // truncates toward zero
        if (sign() < 0 && q * denominator() != numerator()) q -= 1;
        return q;
    }
    BigInt ceil() const { return -Rational(-value_).floor(); }

    double to_double() const { return value_.convert_to<double>(); }

    std::string to_string() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view t) {
            std::size_t i = 0;
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            for (std::size_t k = i; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9')
                    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            BigInt v(std::string(t.substr(t[0] == '+' ? 1 : 0)));
            return v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, std::int64_t v) { return Rational(v); }
inline Rational inverse(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    return Rational(1) / x;
}
inline int sign(const Rational& x) { return x.sign(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline BigInt floor(const Rational& x) { return x.floor(); }
inline BigInt ceil(const Rational& x) { return x.ceil(); }
inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace gradedk
