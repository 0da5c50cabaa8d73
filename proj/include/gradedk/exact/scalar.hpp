#pragma once

// Concepts over the exact scalar types and the split of a coefficient ring
// into simple factors (one factor for a field, m for an m-fold product).

#include "gradedk/exact/prime_field.hpp"
#include "gradedk/exact/product.hpp"
#include "gradedk/exact/quadratic.hpp"
#include "gradedk/exact/rational.hpp"

#include <concepts>
#include <cstddef>
#include <string>

namespace gradedk {

template <class T>
concept Scalar = std::copyable<T> && requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<T>;
    { one_like(a) } -> std::convertible_to<T>;
    { inverse(a) } -> std::convertible_to<T>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

/// Ordered fields usable for cone coordinates.
template <class T>
concept OrderedField = Scalar<T> && requires(const T& a) {
    { sign(a) } -> std::convertible_to<int>;
    { floor(a) } -> std::convertible_to<BigInt>;
    { ceil(a) } -> std::convertible_to<BigInt>;
};

template <class S>
struct factor_traits {
    using field_type = S;
    static constexpr bool is_field = true;
    static std::size_t count(const S&) { return 1; }
    static const S& factor(const S& x, std::size_t) { return x; }
};

template <class F>
struct factor_traits<Product<F>> {
    using field_type = F;
    static constexpr bool is_field = false;
    static std::size_t count(const Product<F>& x) { return x.size(); }
    static const F& factor(const Product<F>& x, std::size_t i) { return x[i]; }
};

template <class S>
using factor_field_t = typename factor_traits<S>::field_type;

/// True when x has a multiplicative inverse.
template <Scalar S>
bool is_unit(const S& x) {
    for (std::size_t i = 0; i < factor_traits<S>::count(x); ++i)
        if (is_zero(factor_traits<S>::factor(x, i))) return false;
    return true;
}

}  // namespace gradedk
