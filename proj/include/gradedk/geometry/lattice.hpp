#pragma once

// Integer points of ℤⁿ. Coordinates are 64-bit with overflow-checked
// arithmetic: an overflow throws std::overflow_error instead of wrapping.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gradedk {

namespace checked {
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}
}  // namespace checked

class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::size_t n) : c_(n, 0) {}
    explicit LatticePoint(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
    LatticePoint(std::initializer_list<std::int64_t> coords) : c_(coords) {}

    std::size_t dim() const { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    std::int64_t& operator[](std::size_t i) { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }

    static LatticePoint unit(std::size_t n, std::size_t axis) {
        LatticePoint e(n);
        e.c_.at(axis) = 1;
        return e;
    }

    LatticePoint operator-() const {
        LatticePoint r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = checked::sub(0, c_[i]);
        return r;
    }
    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        same_dim(a, b);
        LatticePoint r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = checked::add(a.c_[i], b.c_[i]);
        return r;
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        same_dim(a, b);
        LatticePoint r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = checked::sub(a.c_[i], b.c_[i]);
        return r;
    }
    friend LatticePoint operator*(std::int64_t k, const LatticePoint& a) {
        LatticePoint r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = checked::mul(k, a.c_[i]);
        return r;
    }

    // Lexicographic; the degree order lives in OrderForm.
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

    /// Parses comma-separated integers, optionally wrapped in parentheses: "1,0" or "(1,0)".
    static LatticePoint parse(std::string_view text) {
        std::string t(text);
        if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
        std::vector<std::int64_t> coords;
        std::size_t pos = 0;
        while (pos <= t.size()) {
            auto comma = t.find(',', pos);
            std::string part = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            while (!part.empty() && part.front() == ' ') part.erase(part.begin());
            while (!part.empty() && part.back() == ' ') part.pop_back();
            try {
                std::size_t used = 0;
                coords.push_back(std::stoll(part, &used));
                if (used != part.size()) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw std::invalid_argument("malformed lattice point '" + std::string(text) + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return LatticePoint(std::move(coords));
    }

    friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << p.to_string(); }

private:
    static void same_dim(const LatticePoint& a, const LatticePoint& b) {
        if (a.dim() != b.dim())
            throw std::invalid_argument("dimension mismatch: " + a.to_string() + " vs " + b.to_string());
    }
    std::vector<std::int64_t> c_;
};

inline std::int64_t dot(const std::vector<std::int64_t>& form, const LatticePoint& p) {
    if (form.size() != p.dim()) throw std::invalid_argument("dimension mismatch in linear form");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < form.size(); ++i) s = checked::add(s, checked::mul(form[i], p[i]));
    return s;
}

}  // namespace gradedk
