#pragma once

// Seeded generators for property tests and sample sets: random scalars,
// block-diagonal S-idempotents, and graded idempotents obtained by
// conjugating those with a random unipotent matrix 1 + N, N ≡ 0 mod R₊.

#include "gradedk/modules/decomposition.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace gradedk {

using Rng = std::mt19937_64;

/// Uniform draw in [lo, hi]; modulo reduction keeps results identical across
/// standard libraries.
inline std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

inline Rational random_scalar(const Rational&, Rng& rng) {
    std::int64_t den = draw(rng, 1, 3);
    return Rational(BigInt(draw(rng, -4, 4)), BigInt(den));
}
inline PrimeFieldElem random_scalar(const PrimeFieldElem& proto, Rng& rng) {
    return PrimeFieldElem(draw(rng, 0, static_cast<std::int64_t>(proto.modulus()) - 1), proto.modulus());
}
template <class F>
Product<F> random_scalar(const Product<F>& proto, Rng& rng) {
    std::vector<F> c;
    for (const auto& f : proto.components()) c.push_back(random_scalar(f, rng));
    return Product<F>(std::move(c));
}

/// Random idempotent m×m matrix over a field: Q·diag(1,…,1,0,…,0)·Q⁻¹.
template <Scalar F>
DenseMatrix<F> random_field_idempotent(std::size_t m, const F& proto, Rng& rng) {
    auto r = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m)));
    while (true) {
        auto q = dense_filled(m, m, zero_like(proto));
        for (auto& row : q)
            for (auto& x : row) x = random_scalar(proto, rng);
        auto qi = dense_inverse(q, proto);
        if (!qi) continue;
        auto d = dense_filled(m, m, zero_like(proto));
        for (std::size_t i = 0; i < r; ++i) d[i][i] = one_like(proto);
        return dense_multiply(dense_multiply(q, d, proto), *qi, proto);
    }
}

/// Random idempotent over S, built factor by factor for product rings.
template <Scalar S>
DenseMatrix<S> random_idempotent(std::size_t m, const S& proto, Rng& rng) {
    if constexpr (factor_traits<S>::is_field) {
        return random_field_idempotent(m, proto, rng);
    } else {
        std::vector<DenseMatrix<factor_field_t<S>>> parts;
        for (const auto& f : proto.components()) parts.push_back(random_field_idempotent(m, f, rng));
        auto out = dense_filled(m, m, zero_like(proto));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<factor_field_t<S>> c;
                for (const auto& part : parts) c.push_back(part[i][j]);
                out[i][j] = S(std::move(c));
            }
        return out;
    }
}

/// Random invertible matrix over S (per factor for product rings).
template <Scalar S>
DenseMatrix<S> random_invertible(std::size_t m, const S& proto, Rng& rng) {
    while (true) {
        auto q = dense_filled(m, m, zero_like(proto));
        for (auto& row : q)
            for (auto& x : row) x = random_scalar(proto, rng);
        bool ok = true;
        for (std::size_t f = 0; f < factor_traits<S>::count(proto) && ok; ++f) {
            DenseMatrix<factor_field_t<S>> proj;
            for (const auto& row : q) {
                std::vector<factor_field_t<S>> r;
                for (const auto& x : row) r.push_back(factor_traits<S>::factor(x, f));
                proj.push_back(std::move(r));
            }
            ok = rank(std::move(proj)) == m;
        }
        if (ok) return q;
    }
}

/// Inverse of an S-matrix that is invertible in every factor.
template <Scalar S>
DenseMatrix<S> block_inverse(const DenseMatrix<S>& m, const S& proto) {
    if constexpr (factor_traits<S>::is_field) {
        auto inv = dense_inverse(m, proto);
        if (!inv) throw std::invalid_argument("matrix is singular");
        return *inv;
    } else {
        std::vector<DenseMatrix<factor_field_t<S>>> parts;
        for (std::size_t f = 0; f < proto.size(); ++f) {
            DenseMatrix<factor_field_t<S>> proj;
            for (const auto& row : m) {
                std::vector<factor_field_t<S>> r;
                for (const auto& x : row) r.push_back(x[f]);
                proj.push_back(std::move(r));
            }
            auto inv = dense_inverse(proj, proto[f]);
            if (!inv) throw std::invalid_argument("matrix is singular in a factor");
            parts.push_back(std::move(*inv));
        }
        auto out = dense_filled(m.size(), m.size(), zero_like(proto));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) {
                std::vector<factor_field_t<S>> c;
                for (const auto& part : parts) c.push_back(part[i][j]);
                out[i][j] = S(std::move(c));
            }
        return out;
    }
}

/// Block-diagonal S-matrix with one random block per distinct shift.
template <Scalar S, class BlockGen>
GradedMatrix<S> random_block_diagonal(const GradedRing<S>& ring, const ShiftList& shifts, BlockGen gen) {
    std::map<LatticePoint, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < shifts.size(); ++i) groups[shifts[i]].push_back(i);
    auto values = dense_filled(shifts.size(), shifts.size(), ring.base_zero());
    for (const auto& [b, idx] : groups) {
        auto block = gen(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) values[idx[r]][idx[c]] = block[r][c];
    }
    return GradedMatrix<S>::from_constants(ring, shifts, shifts, values);
}

/// 1 + N with random homogeneous entries of N in the admissible slots of nonzero degree.
template <Scalar S>
GradedMatrix<S> random_unipotent(const GradedRing<S>& ring, const ShiftList& shifts, Rng& rng) {
    auto m = GradedMatrix<S>::identity(ring, shifts);
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (std::size_t j = 0; j < shifts.size(); ++j) {
            auto deg = m.slot_degree(i, j);
            if (deg.is_zero() || !ring.in_support(deg) || draw(rng, 0, 3) == 0) continue;
            m.set(i, j, ring.monomial(deg, random_scalar(ring.base_one(), rng)));
        }
    return m;
}

/// Random graded idempotent on the given shifts: w⁻¹·ē₀·w for a random
/// block-diagonal S-idempotent ē₀ and random unipotent w.
template <Scalar S>
IdempotentPresentation<S> random_presentation(const GradedRing<S>& ring, const ShiftList& shifts, Rng& rng) {
    const S one = ring.base_one();
    auto e0 = random_block_diagonal(ring, shifts, [&](std::size_t m) { return random_idempotent(m, one, rng); });
    auto w = random_unipotent(ring, shifts, rng);
    auto w_inv = unipotent_inverse(w, nilpotency_bound(w)).inverse;
    return IdempotentPresentation<S>(w_inv * e0 * w);
}

/// Random degree-zero automorphism G·(1 + N) of ⊕ R(−bᵢ), with inverse.
template <Scalar S>
std::pair<GradedMatrix<S>, GradedMatrix<S>> random_graded_automorphism(const GradedRing<S>& ring, const ShiftList& shifts,
                                                                        Rng& rng) {
    const S one = ring.base_one();
    auto g = random_block_diagonal(ring, shifts, [&](std::size_t m) { return random_invertible(m, one, rng); });
    auto w = random_unipotent(ring, shifts, rng);
    auto w_inv = unipotent_inverse(w, nilpotency_bound(w)).inverse;
    // Block-diagonal constant part inverted blockwise over S.
    auto g_inv_values = dense_filled(shifts.size(), shifts.size(), ring.base_zero());
    auto blocks = blocks_of(shifts, g.coefficients());
    for (const auto& [b, block] : blocks) {
        auto inv = block_inverse(block.matrix, one);
        for (std::size_t r = 0; r < block.indices.size(); ++r)
            for (std::size_t c = 0; c < block.indices.size(); ++c) g_inv_values[block.indices[r]][block.indices[c]] = inv[r][c];
    }
    auto g_inv = GradedMatrix<S>::from_constants(ring, shifts, shifts, g_inv_values);
    return {g * w, w_inv * g_inv};
}

/// Lattice points of C with γ₀-degree at most `max_degree`, in ascending order.
template <Scalar S>
std::vector<LatticePoint> support_pool(const GradedRing<S>& ring, std::int64_t max_degree) {
    return ring.cone().enumerate(ring.order(), LatticePoint(ring.dim()), max_degree);
}

/// `count` shifts drawn with replacement from `pool`.
inline ShiftList random_shifts(const std::vector<LatticePoint>& pool, std::size_t count, Rng& rng) {
    ShiftList out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(pool.at(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))));
    return out;
}

}  // namespace gradedk
