#pragma once

// Elements of the prime field 𝔽_p. The modulus travels with each value;
// combining values of different moduli is a domain error.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedk {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

class PrimeFieldElem {
public:
    /// Moduli are capped so that products of residues fit in 64 bits.
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31);

    PrimeFieldElem(std::int64_t value, std::uint64_t p) : p_(p) {
        if (p >= max_modulus || !is_prime(p))
            throw std::domain_error("modulus " + std::to_string(p) + " is not a supported prime");
        auto m = static_cast<std::int64_t>(p);
        std::int64_t r = value % m;
        value_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    PrimeFieldElem operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
    friend PrimeFieldElem operator+(const PrimeFieldElem& x, const PrimeFieldElem& y) {
        check(x, y);
        std::uint64_t s = x.value_ + y.value_;
        return raw(s >= x.p_ ? s - x.p_ : s, x.p_);
    }
    friend PrimeFieldElem operator-(const PrimeFieldElem& x, const PrimeFieldElem& y) { return x + (-y); }
    friend PrimeFieldElem operator*(const PrimeFieldElem& x, const PrimeFieldElem& y) {
        check(x, y);
        return raw(x.value_ * y.value_ % x.p_, x.p_);
    }
    friend PrimeFieldElem operator/(const PrimeFieldElem& x, const PrimeFieldElem& y) { return x * y.inverse(); }
    PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
    PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }

    PrimeFieldElem inverse() const {
        if (value_ == 0) throw std::domain_error("inverse of zero");
        // Extended Euclid on (value, p).
        std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(value_);
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            std::int64_t t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        return PrimeFieldElem(t0, p_);
    }

    friend bool operator==(const PrimeFieldElem& x, const PrimeFieldElem& y) {
        check(x, y);
        return x.value_ == y.value_;
    }

    std::string to_string() const { return std::to_string(value_) + " mod " + std::to_string(p_); }

    /// Parses "v mod p".
    static PrimeFieldElem parse(std::string_view text) {
        auto pos = text.find(" mod ");
        if (pos == std::string_view::npos) throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
        try {
            std::size_t used = 0;
            std::string vs(text.substr(0, pos)), ps(text.substr(pos + 5));
            std::int64_t v = std::stoll(vs, &used);
            if (used != vs.size()) throw std::invalid_argument("trailing");
            std::uint64_t p = std::stoull(ps, &used);
            if (used != ps.size()) throw std::invalid_argument("trailing");
            return PrimeFieldElem(v, p);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
        }
    }

private:
    PrimeFieldElem() = default;
    static PrimeFieldElem raw(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElem e;
        e.value_ = v;
        e.p_ = p;
        return e;
    }
    static void check(const PrimeFieldElem& x, const PrimeFieldElem& y) {
        if (x.p_ != y.p_)
            throw std::domain_error("mixed moduli " + std::to_string(x.p_) + " and " + std::to_string(y.p_));
    }

    std::uint64_t value_ = 0;
    std::uint64_t p_ = 2;
};

inline bool is_zero(const PrimeFieldElem& x) { return x.is_zero(); }
inline PrimeFieldElem zero_like(const PrimeFieldElem& x) { return PrimeFieldElem(0, x.modulus()); }
inline PrimeFieldElem one_like(const PrimeFieldElem& x) { return PrimeFieldElem(1, x.modulus()); }
inline PrimeFieldElem from_int_like(const PrimeFieldElem& x, std::int64_t v) { return PrimeFieldElem(v, x.modulus()); }
inline PrimeFieldElem inverse(const PrimeFieldElem& x) { return x.inverse(); }
inline std::string to_string(const PrimeFieldElem& x) { return x.to_string(); }

}  // namespace gradedk
