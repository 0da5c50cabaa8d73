#pragma once

// The filtration F^a P (submodule generated by the homogeneous elements of
// degree ≤ a), the window index k, graded dimensions, and the check that
// two splittings differ only by elements of lower filtration.

#include "gradedk/modules/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gradedk {

/// ē restricted to the blocks whose shift satisfies `keep`.
template <Scalar S>
GradedMatrix<S> block_projector(const IdempotentPresentation<S>& p, const DecomposedForm<S>& dec,
                                const std::function<bool(const LatticePoint&)>& keep) {
    auto values = dense_filled(p.size(), p.size(), p.ring().base_zero());
    for (const auto& [b, block] : dec.blocks) {
        if (!keep(b)) continue;
        for (std::size_t r = 0; r < block.indices.size(); ++r)
            for (std::size_t c = 0; c < block.indices.size(); ++c)
                values[block.indices[r]][block.indices[c]] = block.matrix[r][c];
    }
    return GradedMatrix<S>::from_constants(p.ring(), p.shifts(), p.shifts(), values);
}

/// p_a = u⁻¹ · (Σ_{b ≤ a} ē_b) · u; its image is F^a P.
template <Scalar S>
GradedMatrix<S> filtration_matrix(const IdempotentPresentation<S>& p, const DecomposedForm<S>& dec,
                                  const LatticePoint& a) {
    const auto& order = p.ring().order();
    auto proj = block_projector(p, dec, [&](const LatticePoint& b) { return order.less_equal(b, a); });
    return dec.u_inv * proj * dec.u;
}

/// Presentation of F^a P inside the same free module.
template <Scalar S>
IdempotentPresentation<S> filtration_idempotent(const IdempotentPresentation<S>& p, const LatticePoint& a) {
    return IdempotentPresentation<S>(filtration_matrix(p, conjugator(p), a));
}

/// Shifts carrying a nonzero block, ascending in the ring order.
template <Scalar S>
std::vector<LatticePoint> generator_degrees(const IdempotentPresentation<S>& p, const DecomposedForm<S>& dec) {
    std::vector<LatticePoint> out;
    for (const auto& [b, block] : dec.blocks)
        if (!block.is_zero()) out.push_back(b);
    std::sort(out.begin(), out.end(), p.ring().order().less_fn());
    return out;
}

/// Smallest k such that every generator degree b has b + kv ∈ C, b ≤ kv and
/// b > −kv, i.e. P lies in the window category for k.
template <Scalar S>
std::int64_t window_index(const IdempotentPresentation<S>& p, const LatticePoint& v,
                          std::int64_t max_k = 1'000'000) {
    const auto& ring = p.ring();
    if (v.dim() != ring.dim() || !ring.cone().contains_strictly(v))
        throw GeometryError("window vector " + v.to_string() + " is not interior to the cone");
    auto degrees = generator_degrees(p, conjugator(p));
    const auto& order = ring.order();
    for (std::int64_t k = 0; k <= max_k; ++k) {
        LatticePoint kv = k * v;
        LatticePoint neg = -kv;
        bool ok = std::all_of(degrees.begin(), degrees.end(), [&](const LatticePoint& b) {
            return ring.cone().contains(b + kv) && order.less_equal(b, kv) && !order.less_equal(b, neg);
        });
        if (ok) return k;
    }
    throw GeometryError("window index exceeds search limit");
}

/// The ascending list −kv = a₀ < a₁ < … < a_m = kv of lattice points of
/// −kv + C that are ≤ kv.
template <Scalar S>
std::vector<LatticePoint> window_points(const GradedRing<S>& ring, const LatticePoint& v, std::int64_t k) {
    LatticePoint kv = k * v;
    auto pts = ring.cone().enumerate(ring.order(), -kv, ring.order().degree(kv));
    const auto& order = ring.order();
    pts.erase(std::remove_if(pts.begin(), pts.end(), [&](const LatticePoint& a) { return !order.less_equal(a, kv); }),
              pts.end());
    return pts;
}

/// dim_S P_a for a field S: rank of the coefficients of e on the positions i
/// with a − bᵢ ∈ C (each R_{a−bᵢ} is spanned by one monomial).
template <Scalar S>
std::size_t graded_dimension(const IdempotentPresentation<S>& p, const LatticePoint& a) {
    if constexpr (!factor_traits<S>::is_field) {
        throw std::invalid_argument("graded_dimension requires a field of coefficients");
    } else {
        const auto& shifts = p.shifts();
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < shifts.size(); ++i)
            if (p.ring().in_support(a - shifts[i])) live.push_back(i);
        auto coeffs = p.matrix().coefficients();
        DenseMatrix<S> sub;
        for (auto i : live) {
            std::vector<S> row;
            for (auto j : live) row.push_back(coeffs[i][j]);
            sub.push_back(std::move(row));
        }
        return rank(sub);
    }
}

/// Embeds the columns of block ē_b as maps R(−b) → ⊕ R(−bᵢ).
template <Scalar S>
std::vector<GradedMatrix<S>> block_columns(const IdempotentPresentation<S>& p, const DecomposedForm<S>& dec,
                                           const LatticePoint& b) {
    std::vector<GradedMatrix<S>> out;
    auto it = dec.blocks.find(b);
    if (it == dec.blocks.end()) return out;
    const auto& block = it->second;
    for (std::size_t c = 0; c < block.indices.size(); ++c) {
        auto col = dense_filled(p.size(), 1, p.ring().base_zero());
        bool nonzero = false;
        for (std::size_t r = 0; r < block.indices.size(); ++r) {
            col[block.indices[r]][0] = block.matrix[r][c];
            nonzero |= !is_zero(block.matrix[r][c]);
        }
        if (nonzero) out.push_back(GradedMatrix<S>::from_constants(p.ring(), p.shifts(), {b}, col));
    }
    return out;
}

/// Largest point of `window` strictly below a, if any.
inline std::optional<LatticePoint> predecessor(const OrderForm& order, const std::vector<LatticePoint>& window,
                                               const LatticePoint& a) {
    std::optional<LatticePoint> best;
    for (const auto& w : window)
        if (order.less(w, a) && (!best || order.less(*best, w))) best = w;
    return best;
}

/// Two splittings σ₁ = u₁⁻¹ and σ₂ = u₂⁻¹ of P → T(P) on block a_j differ by
/// elements of F^{a_{j−1}} P, where a_{j−1} is the predecessor of a_j in the
/// window for v (the first interior vector when none is given).
template <Scalar S>
bool splitting_difference_check(const IdempotentPresentation<S>& p, const LatticePoint& a_j,
                                std::optional<LatticePoint> v = std::nullopt) {
    const auto& ring = p.ring();
    if (!v) v = ring.cone().interior_vector();
    auto d1 = conjugator(p);
    auto d2 = mirror_conjugator(p);
    auto cols = block_columns(p, d1, a_j);
    if (cols.empty()) return true;
    auto k = window_index(p, *v);
    auto window = window_points(ring, *v, k);
    auto pred = predecessor(ring.order(), window, a_j);
    const auto& e = p.matrix();
    std::optional<GradedMatrix<S>> lower;
    if (pred) lower = filtration_matrix(p, d1, *pred);
    for (const auto& x : cols) {
        auto s1 = d1.u_inv * x;
        auto s2 = d2.u_inv * x;
        if (!(e * s1 == s1) || !(e * s2 == s2)) return false;
        auto delta = s1 - s2;
        if (!(e * delta == delta)) return false;
        if (lower ? !(*lower * delta == delta) : !delta.is_zero()) return false;
    }
    return true;
}

}  // namespace gradedk
