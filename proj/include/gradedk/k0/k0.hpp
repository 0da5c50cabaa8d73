#pragma once

// K₀ classes over the coefficient ring and the graded rank
//   P ↦ Σ_b [T(P)_b] · t^b  ∈  K₀(R₀) ⊗ ℤ[t₁^±1, …, tₙ^±1],
// its one-sided inverse b, x ↦ x ⊗_{R₀} R(−b), and the translation action.

#include "gradedk/modules/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedk {

/// Rank vector over the simple factors of the coefficient ring.
class K0Class {
public:
    K0Class() = default;
    explicit K0Class(std::vector<std::int64_t> components) : c_(std::move(components)) {}

    const std::vector<std::int64_t>& components() const { return c_; }
    std::size_t factors() const { return c_.size(); }
    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }

    friend K0Class operator+(const K0Class& a, const K0Class& b) { return zip(a, b, 1); }
    friend K0Class operator-(const K0Class& a, const K0Class& b) { return zip(a, b, -1); }
    friend bool operator==(const K0Class&, const K0Class&) = default;

    /// "r" for one factor, "(r₁,…,r_m)" otherwise.
    std::string to_string() const {
        if (c_.size() == 1) return std::to_string(c_[0]);
        return LatticePoint(c_).to_string();
    }

private:
    static K0Class zip(const K0Class& a, const K0Class& b, std::int64_t s) {
        if (a.c_.empty()) return s > 0 ? b : K0Class(std::vector<std::int64_t>(b.c_.size())) - b;
        if (b.c_.empty()) return a;
        if (a.c_.size() != b.c_.size()) throw std::invalid_argument("K0 classes over different bases");
        K0Class out = a;
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = checked::add(a.c_[i], checked::mul(s, b.c_[i]));
        return out;
    }
    std::vector<std::int64_t> c_;
};

class NonIdempotentBlockError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rank of an idempotent S-matrix in each simple factor of S.
template <Scalar S>
K0Class k0_of_idempotent(const DenseMatrix<S>& m, const S& proto) {
    if (!dense_equal(dense_multiply(m, m, proto), m)) throw NonIdempotentBlockError("matrix is not idempotent");
    using traits = factor_traits<S>;
    std::vector<std::int64_t> ranks;
    for (std::size_t f = 0; f < traits::count(proto); ++f) {
        DenseMatrix<factor_field_t<S>> proj;
        for (const auto& row : m) {
            std::vector<factor_field_t<S>> r;
            for (const auto& x : row) r.push_back(traits::factor(x, f));
            proj.push_back(std::move(r));
        }
        ranks.push_back(static_cast<std::int64_t>(rank(std::move(proj))));
    }
    return K0Class(std::move(ranks));
}

/// Finite sum Σ x_b · t^b with nonzero classes x_b.
class GradedRankClass {
public:
    using Terms = std::map<LatticePoint, K0Class>;

    GradedRankClass() = default;
    static GradedRankClass monomial(const LatticePoint& b, const K0Class& x) {
        GradedRankClass c;
        c.add(b, x);
        return c;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const LatticePoint& b, const K0Class& x) {
        if (x.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, x);
        if (inserted) return;
        it->second = it->second + x;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend GradedRankClass operator+(GradedRankClass a, const GradedRankClass& b) {
        for (const auto& [exp, x] : b.terms_) a.add(exp, x);
        return a;
    }
    friend bool operator==(const GradedRankClass&, const GradedRankClass&) = default;

    /// Multiplication by the Laurent monomial t^c.
    GradedRankClass times_monomial(const LatticePoint& c) const {
        GradedRankClass out;
        for (const auto& [exp, x] : terms_) out.add(exp + c, x);
        return out;
    }

    /// Laurent-style text, e.g. "t^(0,0) + 2*t^(1,0)"; terms ascending in `order`.
    std::string to_string(const OrderForm& order) const {
        if (terms_.empty()) return "0";
        std::vector<LatticePoint> exps;
        for (const auto& [exp, x] : terms_) exps.push_back(exp);
        std::sort(exps.begin(), exps.end(), order.less_fn());
        std::string s;
        for (const auto& exp : exps) {
            if (!s.empty()) s += " + ";
            std::string cs = terms_.at(exp).to_string();
            s += (cs == "1" ? std::string() : cs + "*") + "t^" + exp.to_string();
        }
        return s;
    }

private:
    Terms terms_;
};

/// Σ_b [T(P)_b]·t^b over the blocks of T(P).
template <Scalar S>
GradedRankClass graded_rank(const IdempotentPresentation<S>& p) {
    GradedRankClass out;
    const S one = p.ring().base_one();
    for (const auto& [b, block] : tp_blocks(p)) out.add(b, k0_of_idempotent(block.matrix, one));
    return out;
}

/// The primitive idempotent of factor f (the unit itself for a field).
template <Scalar S>
S factor_unit(const S& one, std::size_t f) {
    if constexpr (factor_traits<S>::is_field) {
        (void)f;
        return one;
    } else {
        std::vector<factor_field_t<S>> c;
        for (std::size_t i = 0; i < one.size(); ++i) c.push_back(i == f ? one[i] : zero_like(one[i]));
        return S(std::move(c));
    }
}

/// x ⊗ t^b ↦ P ⊗_{R₀} R(−b) for the diagonal S-idempotent of ranks x.
template <Scalar S>
IdempotentPresentation<S> phi_realize(const K0Class& x, const LatticePoint& b, const GradedRing<S>& ring) {
    using traits = factor_traits<S>;
    const S one = ring.base_one();
    if (x.factors() != traits::count(one))
        throw std::invalid_argument("class " + x.to_string() + " does not match the number of factors of the base");
    std::int64_t size = 0;
    for (auto r : x.components()) {
        if (r < 0) throw std::invalid_argument("class " + x.to_string() + " has a negative component");
        size = std::max(size, r);
    }
    ShiftList shifts(static_cast<std::size_t>(size), b);
    auto diag = dense_filled(shifts.size(), shifts.size(), ring.base_zero());
    for (std::int64_t i = 0; i < size; ++i) {
        // Entry i is 1 in factor f exactly when i < x_f.
        S entry = ring.base_zero();
        for (std::size_t f = 0; f < x.factors(); ++f) {
            if (i >= x.components()[f]) continue;
            entry = entry + factor_unit(one, f);
        }
        diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = entry;
    }
    return IdempotentPresentation<S>(GradedMatrix<S>::from_constants(ring, shifts, shifts, diag));
}

/// Action of t_axis^exponent on classes: t^b ↦ t^{b + exponent·e_axis}.
inline GradedRankClass l_action(const GradedRankClass& c, std::size_t axis, std::int64_t exponent, std::size_t n) {
    if (axis >= n) throw std::invalid_argument("axis out of range");
    return c.times_monomial(exponent * LatticePoint::unit(n, axis));
}

/// The translation realizing t_axis^exponent on modules: shift_module(P, −exponent·e_axis).
template <Scalar S>
IdempotentPresentation<S> l_action_module(const IdempotentPresentation<S>& p, std::size_t axis, std::int64_t exponent) {
    return shift_module(p, -(exponent * LatticePoint::unit(p.ring().dim(), axis)));
}

}  // namespace gradedk
