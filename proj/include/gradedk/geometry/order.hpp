#pragma once

// The total order on ℤⁿ: compare γ₀·a with γ₀·b for an integral form γ₀,
// breaking ties by ascending lexicographic order of coordinates. The
// tie-break stands in for a generic perturbation of γ₀ and keeps the order
// translation invariant.

#include "gradedk/geometry/cone.hpp"
#include "gradedk/geometry/lattice.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gradedk {

class OrderForm {
public:
    OrderForm() = default;
    explicit OrderForm(std::vector<std::int64_t> gamma0) : gamma_(std::move(gamma0)) {
        if (gamma_.empty()) throw GeometryError("order form needs at least one coordinate");
    }

    /// Checks γ₀·g > 0 for every generator of the cone.
    template <OrderedField K>
    static OrderForm for_cone(std::vector<std::int64_t> gamma0, const Cone<K>& cone) {
        OrderForm f(std::move(gamma0));
        if (f.dim() != cone.dim()) throw GeometryError("order form dimension does not match cone");
        for (const auto& g : cone.generators())
            if (sign(dot(f.gamma_, g)) <= 0)
                throw GeometryError("order form " + f.to_string() + " is not strictly positive on generator " + vec_to_string(g));
        return f;
    }

    std::size_t dim() const { return gamma_.size(); }
    const std::vector<std::int64_t>& gamma() const { return gamma_; }

    /// γ₀·a.
    std::int64_t degree(const LatticePoint& a) const { return dot(gamma_, a); }

    std::strong_ordering compare(const LatticePoint& a, const LatticePoint& b) const {
        auto da = degree(a), db = degree(b);
        if (da != db) return da <=> db;
        return a <=> b;
    }
    bool less(const LatticePoint& a, const LatticePoint& b) const { return compare(a, b) < 0; }
    bool less_equal(const LatticePoint& a, const LatticePoint& b) const { return compare(a, b) <= 0; }

    /// Strict-weak-ordering functor for sorting and ordered containers.
    struct Less {
        const OrderForm* order;
        bool operator()(const LatticePoint& a, const LatticePoint& b) const { return order->less(a, b); }
    };
    Less less_fn() const { return Less{this}; }

    std::string to_string() const { return LatticePoint(gamma_).to_string(); }

    friend bool operator==(const OrderForm&, const OrderForm&) = default;

private:
    std::vector<std::int64_t> gamma_;
};

/// Three-way comparison of lattice points under the order.
inline std::strong_ordering compare(const OrderForm& order, const LatticePoint& a, const LatticePoint& b) {
    return order.compare(a, b);
}

/// Upper bound on the number of box points scanned by enumerate_window.
inline constexpr std::uint64_t max_window_box = 20'000'000;

/// All x ∈ (base + C) ∩ ℤⁿ with γ₀·x ≤ bound, strictly ascending.
///
/// The slice {y ∈ C : γ₀·y ≤ s} is the convex hull of 0 and the generators
/// scaled to γ₀-height s, so its coordinate extremes are read off those
/// vertices; the resulting integer box is then filtered by membership.
template <OrderedField K>
std::vector<LatticePoint> enumerate_window(const OrderForm& order, const Cone<K>& cone, const LatticePoint& base,
                                           std::int64_t bound) {
    const std::size_t n = cone.dim();
    if (order.dim() != n || base.dim() != n) throw GeometryError("dimension mismatch in enumerate_window");
    std::vector<K> heights;
    for (const auto& g : cone.generators()) {
        K h = dot(order.gamma(), g);
        if (sign(h) <= 0) throw GeometryError("order form is not strictly positive on the cone; slice unbounded");
        heights.push_back(h);
    }
    std::int64_t slack = checked::sub(bound, order.degree(base));
    if (slack < 0) return {};

    std::vector<std::int64_t> lo(n, 0), hi(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        K mn(0), mx(0);
        for (std::size_t j = 0; j < heights.size(); ++j) {
            K c = cone.generators()[j][i] * K(slack) * inverse(heights[j]);
            if (c < mn) mn = c;
            if (c > mx) mx = c;
        }
        lo[i] = checked::add(base[i], static_cast<std::int64_t>(ceil(mn)));
        hi[i] = checked::add(base[i], static_cast<std::int64_t>(floor(mx)));
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        if (total > max_window_box) throw GeometryError("enumeration window too large");
    }

    std::vector<LatticePoint> out;
    LatticePoint x(lo);
    while (true) {
        if (order.degree(x) <= bound && cone.contains(x - base)) out.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end(), order.less_fn());
    return out;
}

}  // namespace gradedk
