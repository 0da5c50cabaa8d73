#pragma once

// The functor T(P) = P/PR₊ and the explicit form of the decomposition
// P ≅ ⊕_b T(P)_b ⊗_{R₀} R(−b).
//
// With ē the reduction of e modulo R₊ (an idempotent over S that is
// block-diagonal across distinct shifts), u = ē·e + (1−ē)(1−e) satisfies
// u·e = ē·u, and ν = u − 1 has entries in R₊. Each entry of ν has γ₀-degree
// at least 1 (γ₀ is integral), while a product of k entries along a path has
// degree b_last − b_first, so ν^(D+1) = 0 for D the largest γ₀-degree of an
// admissible slot. Hence u⁻¹ = Σ_{k≤D} (−ν)^k.

#include "gradedk/exact/linalg.hpp"
#include "gradedk/modules/presentation.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedk {

/// An exact identity that must hold by construction failed; signals an
/// arithmetic bug, never bad input.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The block of ē at one shift value: the positions carrying that shift and
/// the S-idempotent presenting T(P)_b.
template <Scalar S>
struct Block {
    std::vector<std::size_t> indices;
    DenseMatrix<S> matrix;

    bool is_zero() const {
        for (const auto& row : matrix)
            for (const auto& x : row)
                if (!gradedk::is_zero(x)) return false;
        return true;
    }
};

/// Blocks keyed by shift (lexicographic map order).
template <Scalar S>
using BlockMap = std::map<LatticePoint, Block<S>>;

template <Scalar S>
BlockMap<S> blocks_of(const ShiftList& shifts, const DenseMatrix<S>& reduced) {
    BlockMap<S> out;
    for (std::size_t i = 0; i < shifts.size(); ++i) out[shifts[i]].indices.push_back(i);
    for (auto& [b, block] : out) {
        for (auto i : block.indices) {
            std::vector<S> row;
            for (auto j : block.indices) row.push_back(reduced[i][j]);
            block.matrix.push_back(std::move(row));
        }
    }
    return out;
}

/// ē over S, with entries between different shifts checked to vanish.
template <Scalar S>
DenseMatrix<S> reduced_idempotent(const IdempotentPresentation<S>& p) {
    auto ebar = reduce_entries(p.matrix());
    const auto& shifts = p.shifts();
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (std::size_t j = 0; j < shifts.size(); ++j)
            if (shifts[i] != shifts[j] && !is_zero(ebar[i][j]))
                throw VerificationError("reduction is not block-diagonal across shifts");
    return ebar;
}

/// T(P) as blocks b ↦ ē_b.
template <Scalar S>
BlockMap<S> reduce_matrix(const IdempotentPresentation<S>& p) {
    return blocks_of(p.shifts(), reduced_idempotent(p));
}

/// Block data of T(P); the block at b presents the projective R₀-module T(P)_b.
template <Scalar S>
BlockMap<S> tp_blocks(const IdempotentPresentation<S>& p) {
    return reduce_matrix(p);
}

/// Largest γ₀-degree of a slot that can hold a nonzero element of R₊ (0 if none).
template <Scalar S>
std::int64_t nilpotency_bound(const GradedMatrix<S>& m) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto deg = m.slot_degree(i, j);
            if (!deg.is_zero() && m.ring().in_support(deg)) d = std::max(d, m.ring().order().degree(deg));
        }
    return d;
}

template <Scalar S>
struct UnipotentInverse {
    GradedMatrix<S> inverse;
    /// Smallest k with ν^k = 0.
    unsigned nilpotency_index = 0;
};

/// Inverse of u = 1 + ν with ν ≡ 0 mod R₊, via the terminating geometric series.
template <Scalar S>
UnipotentInverse<S> unipotent_inverse(const GradedMatrix<S>& u, std::int64_t bound) {
    const auto id = GradedMatrix<S>::identity(u.ring(), u.source());
    const auto nu = u - id;
    for (const auto& row : reduce_entries(nu))
        for (const auto& x : row)
            if (!is_zero(x)) throw VerificationError("correction term has a degree-zero part");
    const auto minus_nu = -nu;
    auto sum = id;
    auto term = id;
    unsigned index = 0;
    for (std::int64_t k = 1; k <= bound + 1; ++k) {
        term = term * minus_nu;
        if (term.is_zero()) {
            index = static_cast<unsigned>(k);
            break;
        }
        sum = sum + term;
    }
    if (index == 0) throw VerificationError("correction term is not nilpotent within the degree bound");
    return {std::move(sum), index};
}

template <Scalar S>
struct DecomposedForm {
    BlockMap<S> blocks;
    GradedMatrix<S> ebar;
    GradedMatrix<S> u;
    GradedMatrix<S> u_inv;
    /// D: ν^(D+1) = 0 is guaranteed.
    std::int64_t nilpotency_bound = 0;
    /// Observed smallest k with ν^k = 0.
    unsigned nilpotency_index = 0;
};

namespace detail {

template <Scalar S>
DecomposedForm<S> finish_decomposition(const IdempotentPresentation<S>& p, GradedMatrix<S> ebar, GradedMatrix<S> u,
                                       GradedMatrix<S> u_inv, std::int64_t bound, unsigned index) {
    const auto& e = p.matrix();
    const auto id = GradedMatrix<S>::identity(p.ring(), p.shifts());
    if (!(u * u_inv == id) || !(u_inv * u == id)) throw VerificationError("conjugator is not invertible");
    if (!(u * e * u_inv == ebar)) throw VerificationError("u·e·u⁻¹ differs from ē");
    return DecomposedForm<S>{blocks_of(p.shifts(), reduced_idempotent(p)), std::move(ebar), std::move(u),
                             std::move(u_inv), bound, index};
}

}  // namespace detail

/// ē as a graded matrix of constants.
template <Scalar S>
GradedMatrix<S> reduced_matrix(const IdempotentPresentation<S>& p) {
    return GradedMatrix<S>::from_constants(p.ring(), p.shifts(), p.shifts(), reduced_idempotent(p));
}

/// Explicit form of the decomposition: u·e·u⁻¹ = ē with u ≡ 1 mod R₊.
template <Scalar S>
DecomposedForm<S> conjugator(const IdempotentPresentation<S>& p) {
    const auto& e = p.matrix();
    const auto id = GradedMatrix<S>::identity(p.ring(), p.shifts());
    auto ebar = reduced_matrix(p);
    if (!(ebar * ebar == ebar)) throw VerificationError("reduction of an idempotent is not idempotent");
    auto u = ebar * e + (id - ebar) * (id - e);
    if (!(u * e == ebar * u)) throw VerificationError("u·e differs from ē·u");
    auto bound = nilpotency_bound(e);
    auto inv = unipotent_inverse(u, bound);
    return detail::finish_decomposition(p, std::move(ebar), std::move(u), std::move(inv.inverse), bound,
                                        inv.nilpotency_index);
}

/// A second conjugator from the mirrored formula w = e·ē + (1−e)(1−ē), which
/// satisfies w·ē = e·w; the conjugator is w⁻¹ and its inverse is w.
template <Scalar S>
DecomposedForm<S> mirror_conjugator(const IdempotentPresentation<S>& p) {
    const auto& e = p.matrix();
    const auto id = GradedMatrix<S>::identity(p.ring(), p.shifts());
    auto ebar = reduced_matrix(p);
    auto w = e * ebar + (id - e) * (id - ebar);
    if (!(w * ebar == e * w)) throw VerificationError("w·ē differs from e·w");
    auto bound = nilpotency_bound(e);
    auto inv = unipotent_inverse(w, bound);
    return detail::finish_decomposition(p, std::move(ebar), std::move(inv.inverse), std::move(w), bound,
                                        inv.nilpotency_index);
}

}  // namespace gradedk
