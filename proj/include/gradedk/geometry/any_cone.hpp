#pragma once

// A cone over either coordinate field, chosen at run time. The ring layer
// only needs membership, the generators' heights and enumeration, so it works
// through this wrapper instead of being templated on the coordinate field.

#include "gradedk/geometry/cone.hpp"
#include "gradedk/geometry/order.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gradedk {

class AnyCone {
public:
    AnyCone(Cone<Rational> c) : v_(std::move(c)) {}  // NOLINT(implicit)
    AnyCone(Cone<QuadraticReal> c) : v_(std::move(c)) {}  // NOLINT(implicit)

    template <class F>
    decltype(auto) visit(F&& f) const {
        return std::visit(std::forward<F>(f), v_);
    }

    bool is_quadratic() const { return std::holds_alternative<Cone<QuadraticReal>>(v_); }
    std::size_t dim() const {
        return visit([](const auto& c) { return c.dim(); });
    }
    bool full_dimensional() const {
        return visit([](const auto& c) { return c.full_dimensional(); });
    }
    bool contains(const LatticePoint& p) const {
        return visit([&](const auto& c) { return c.contains(p); });
    }
    bool contains_strictly(const LatticePoint& p) const {
        return visit([&](const auto& c) { return c.contains_strictly(p); });
    }
    LatticePoint interior_vector() const {
        return visit([](const auto& c) { return gradedk::interior_vector(c); });
    }
    std::vector<LatticePoint> enumerate(const OrderForm& order, const LatticePoint& base, std::int64_t bound) const {
        return visit([&](const auto& c) { return enumerate_window(order, c, base, bound); });
    }
    /// Validates γ₀ against the generators and returns the order form.
    OrderForm order_form(std::vector<std::int64_t> gamma0) const {
        return visit([&](const auto& c) { return OrderForm::for_cone(gamma0, c); });
    }
    /// Integral pointedness witness, if the cone is pointed.
    std::optional<std::vector<std::int64_t>> pointed_witness() const {
        return visit([](const auto& c) { return is_pointed(c).witness; });
    }

    std::vector<std::string> generator_strings() const {
        return visit([](const auto& c) {
            std::vector<std::string> out;
            for (const auto& g : c.generators()) out.push_back(vec_to_string(g));
            return out;
        });
    }
    std::vector<std::string> facet_strings() const {
        return visit([](const auto& c) {
            std::vector<std::string> out;
            for (const auto& h : c.facets()) out.push_back(vec_to_string(h));
            return out;
        });
    }

private:
    std::variant<Cone<Rational>, Cone<QuadraticReal>> v_;
};

}  // namespace gradedk
