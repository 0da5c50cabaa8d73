#pragma once

// Brute-force oracles for the preset cones, independent of the library's
// facet and enumeration code.

#include "gradedk/cli/commands.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gradedk::testing {

inline LatticePoint pt(std::int64_t x, std::int64_t y) { return LatticePoint{x, y}; }

/// Membership in the preset cones by hand-written integer inequalities.
inline bool oracle_contains(const std::string& preset_name, const LatticePoint& p) {
    auto x = p[0], y = p[1];
    if (preset_name == "R1") return x >= 0 && y >= 0;
    if (preset_name == "R2") return y >= 0 && 2 * x - y >= 0;
    return x >= 0 && y >= 0 && y * y <= 2 * x * x;  // y ≤ √2·x
}

/// Scan of an explicit box around `base`, filtered by membership and bound.
inline std::vector<LatticePoint> oracle_window(const std::string& preset_name, const OrderForm& order,
                                               const LatticePoint& base, std::int64_t bound) {
    std::vector<LatticePoint> out;
    std::int64_t slack = bound - order.degree(base);
    if (slack < 0) return out;
    std::int64_t r = 2 * slack + 2;
    for (std::int64_t dx = -r; dx <= r; ++dx)
        for (std::int64_t dy = -r; dy <= r; ++dy) {
            LatticePoint a{base[0] + dx, base[1] + dy};
            if (oracle_contains(preset_name, a - base) && order.degree(a) <= bound) out.push_back(a);
        }
    std::sort(out.begin(), out.end(), order.less_fn());
    return out;
}

}  // namespace gradedk::testing
