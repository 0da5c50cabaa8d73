#pragma once

// Elements a + b·√d of a real quadratic field ℚ(√d), d squarefree and ≥ 2.
//
// A value with b = 0 may be built without committing to a radical (d = 0);
// it then combines with values of any radical. Two values carrying different
// nonzero radicals cannot be combined and raise std::domain_error.

#include "gradedk/exact/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedk {

inline bool is_squarefree(std::int64_t d) {
    if (d < 2) return false;
    for (std::int64_t p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

class QuadraticReal {
public:
    QuadraticReal() = default;
    QuadraticReal(std::int64_t a) : a_(a) {}  // NOLINT(implicit)
    QuadraticReal(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
    QuadraticReal(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!is_squarefree(d)) throw std::domain_error("radicand " + std::to_string(d) + " is not squarefree >= 2");
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    /// Radicand, or 0 when the value has not been tied to a field.
    std::int64_t radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Sign of a + b√d as a real number, decided in exact integer arithmetic.
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // Opposite signs: compare a² with d·b².
        Rational lhs = a_ * a_;
        Rational rhs = Rational(d_) * b_ * b_;
        return lhs > rhs ? sa : sb;
    }

    QuadraticReal operator-() const { return QuadraticReal(-a_, -b_, d_, Raw{}); }

    friend QuadraticReal operator+(const QuadraticReal& x, const QuadraticReal& y) {
        return QuadraticReal(x.a_ + y.a_, x.b_ + y.b_, join(x, y), Raw{});
    }
    friend QuadraticReal operator-(const QuadraticReal& x, const QuadraticReal& y) {
        return QuadraticReal(x.a_ - y.a_, x.b_ - y.b_, join(x, y), Raw{});
    }
    friend QuadraticReal operator*(const QuadraticReal& x, const QuadraticReal& y) {
        std::int64_t d = join(x, y);
        return QuadraticReal(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d, Raw{});
    }
    friend QuadraticReal operator/(const QuadraticReal& x, const QuadraticReal& y) { return x * y.inverse(); }
    QuadraticReal& operator+=(const QuadraticReal& o) { return *this = *this + o; }
    QuadraticReal& operator-=(const QuadraticReal& o) { return *this = *this - o; }
    QuadraticReal& operator*=(const QuadraticReal& o) { return *this = *this * o; }

    QuadraticReal inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // (a - b√d) / (a² - d b²); the norm is nonzero since √d is irrational.
        Rational norm = a_ * a_ - Rational(d_) * b_ * b_;
        return QuadraticReal(a_ / norm, -b_ / norm, d_, Raw{});
    }

    friend bool operator==(const QuadraticReal& x, const QuadraticReal& y) {
        if (!x.b_.is_zero() && !y.b_.is_zero() && x.d_ != y.d_) throw mixed(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QuadraticReal& x, const QuadraticReal& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigInt floor() const {
        if (b_.is_zero()) return a_.floor();
        // floor(|b|√d) = floor(isqrt(p²d) / q) for |b| = p/q.
        BigInt p = boost::multiprecision::abs(b_.numerator());
        BigInt q = b_.denominator();
        BigInt root = boost::multiprecision::sqrt(BigInt(p * p * d_));
        BigInt fy = root / q;
        if (b_.sign() < 0) fy = -fy - 1;  // b√d is irrational, never an integer
        BigInt c = a_.floor() + fy;
        if ((*this - QuadraticReal(Rational(BigInt(c + 1)))).sign() >= 0) c += 1;
        return c;
    }
    BigInt ceil() const { return -(-*this).floor(); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string radical = "√" + std::to_string(d_);
        std::string bs = (b_.sign() < 0 ? -b_ : b_).to_string();
        if (bs == "1") bs.clear();
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs + radical;
        return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + bs + radical;
    }

    /// Parses "a", "b√d", "a+b√d", "a-b√d" (rational a, b; "√d" alone means b = 1).
    /// "sqrt(d)" is accepted in place of "√d". When `expected_d` is nonzero the
    /// radicand must match it.
    static QuadraticReal parse(std::string_view text, std::int64_t expected_d = 0) {
        std::string t(text);
        for (std::string::size_type pos; (pos = t.find("sqrt(")) != std::string::npos;) {
            auto close = t.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("malformed quadratic '" + std::string(text) + "'");
            t = t.substr(0, pos) + "√" + t.substr(pos + 5, close - pos - 5) + t.substr(close + 1);
        }
        auto root = t.find("√");
        if (root == std::string::npos) return QuadraticReal(Rational::parse(t));
        std::string dtext = t.substr(root + std::string("√").size());
        if (dtext.empty()) throw std::invalid_argument("missing radicand in '" + std::string(text) + "'");
        for (char ch : dtext)
            if (ch < '0' || ch > '9') throw std::invalid_argument("malformed radicand in '" + std::string(text) + "'");
        std::int64_t d = std::stoll(dtext);
        if (expected_d != 0 && d != expected_d)
            throw std::invalid_argument("radicand " + dtext + " does not match field radicand " + std::to_string(expected_d));
        std::string head = t.substr(0, root);
        // Split head into rational part and coefficient at the last sign not in first position.
        std::size_t split = std::string::npos;
        for (std::size_t i = head.size(); i-- > 1;)
            if (head[i] == '+' || head[i] == '-') { split = i; break; }
        std::string atext = split == std::string::npos ? "" : head.substr(0, split);
        std::string btext = split == std::string::npos ? head : head.substr(split);
        if (btext.empty() || btext == "+") btext = "1";
        if (btext == "-") btext = "-1";
        if (btext.size() > 1 && btext.back() == '*') btext.pop_back();
        Rational a = atext.empty() ? Rational(0) : Rational::parse(atext);
        return QuadraticReal(a, Rational::parse(btext), d);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticReal& x) { return os << x.to_string(); }

private:
    struct Raw {};
    QuadraticReal(Rational a, Rational b, std::int64_t d, Raw) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static std::domain_error mixed(const QuadraticReal& x, const QuadraticReal& y) {
        return std::domain_error("mixed radicals √" + std::to_string(x.d_) + " and √" + std::to_string(y.d_));
    }
    static std::int64_t join(const QuadraticReal& x, const QuadraticReal& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw mixed(x, y);
    }

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

inline bool is_zero(const QuadraticReal& x) { return x.is_zero(); }
inline QuadraticReal zero_like(const QuadraticReal&) { return QuadraticReal(0); }
inline QuadraticReal one_like(const QuadraticReal&) { return QuadraticReal(1); }
inline QuadraticReal from_int_like(const QuadraticReal&, std::int64_t v) { return QuadraticReal(v); }
inline QuadraticReal inverse(const QuadraticReal& x) { return x.inverse(); }
inline int sign(const QuadraticReal& x) { return x.sign(); }
inline std::string to_string(const QuadraticReal& x) { return x.to_string(); }
inline BigInt floor(const QuadraticReal& x) { return x.floor(); }
inline BigInt ceil(const QuadraticReal& x) { return x.ceil(); }
inline QuadraticReal abs(const QuadraticReal& x) { return x.sign() < 0 ? -x : x; }

/// Convenience: sign of a + b√d.
inline int sign_quadratic(const QuadraticReal& x) { return x.sign(); }

}  // namespace gradedk
