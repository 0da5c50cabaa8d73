#pragma once

// Finite products F₁ × … × F_m of fields of one kind (e.g. ℚ × ℚ, 𝔽₇ × 𝔽₇),
// with componentwise arithmetic. Text encoding: "(c₁, …, c_m)".

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gradedk {

namespace detail {
// Unqualified calls so argument-dependent lookup sees the factor's overloads.
template <class F> bool factor_is_zero(const F& x) { return is_zero(x); }
template <class F> F factor_inverse(const F& x) { return inverse(x); }
template <class F> std::string factor_to_string(const F& x) { return to_string(x); }
}  // namespace detail

template <class F>
class Product {
public:
    explicit Product(std::vector<F> components) : c_(std::move(components)) {
        if (c_.empty()) throw std::invalid_argument("product ring needs at least one factor");
    }

    std::size_t size() const { return c_.size(); }
    const F& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<F>& components() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!detail::factor_is_zero(x)) return false;
        return true;
    }
    bool is_unit() const {
        for (const auto& x : c_)
            if (detail::factor_is_zero(x)) return false;
        return true;
    }

    Product operator-() const {
        Product r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Product operator+(const Product& x, const Product& y) { return zip(x, y, [](const F& a, const F& b) { return a + b; }); }
    friend Product operator-(const Product& x, const Product& y) { return zip(x, y, [](const F& a, const F& b) { return a - b; }); }
    friend Product operator*(const Product& x, const Product& y) { return zip(x, y, [](const F& a, const F& b) { return a * b; }); }
    Product& operator+=(const Product& o) { return *this = *this + o; }
    Product& operator-=(const Product& o) { return *this = *this - o; }
    Product& operator*=(const Product& o) { return *this = *this * o; }

    Product inverse() const {
        if (!is_unit()) throw std::domain_error("element " + to_string() + " is not a unit");
        Product r = *this;
        for (auto& x : r.c_) x = detail::factor_inverse(x);
        return r;
    }

    friend bool operator==(const Product& x, const Product& y) {
        if (x.size() != y.size()) throw std::domain_error("mixed product rings");
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x.c_[i] == y.c_[i])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += detail::factor_to_string(c_[i]);
        }
        return s + ")";
    }

private:
    template <class Op>
    static Product zip(const Product& x, const Product& y, Op op) {
        if (x.size() != y.size()) throw std::domain_error("mixed product rings");
        std::vector<F> out;
        out.reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out.push_back(op(x.c_[i], y.c_[i]));
        return Product(std::move(out));
    }

    std::vector<F> c_;
};

template <class F>
bool is_zero(const Product<F>& x) { return x.is_zero(); }
template <class F>
Product<F> zero_like(const Product<F>& x) {
    std::vector<F> c;
    for (const auto& f : x.components()) c.push_back(zero_like(f));
    return Product<F>(std::move(c));
}
template <class F>
Product<F> one_like(const Product<F>& x) {
    std::vector<F> c;
    for (const auto& f : x.components()) c.push_back(one_like(f));
    return Product<F>(std::move(c));
}
template <class F>
Product<F> from_int_like(const Product<F>& x, std::int64_t v) {
    std::vector<F> c;
    for (const auto& f : x.components()) c.push_back(from_int_like(f, v));
    return Product<F>(std::move(c));
}
template <class F>
Product<F> inverse(const Product<F>& x) { return x.inverse(); }
template <class F>
std::string to_string(const Product<F>& x) { return x.to_string(); }

}  // namespace gradedk
