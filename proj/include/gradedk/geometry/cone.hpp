#pragma once

// Polyhedral cones cone{v₁,…,v_ℓ} ⊂ Kⁿ over an exact ordered field K, with
// derived facet inequalities, pointedness witnesses and interior points.

#include "gradedk/exact/linalg.hpp"
#include "gradedk/exact/scalar.hpp"
#include "gradedk/geometry/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gradedk {

/// Thrown for cone data that cannot be used (zero generator, wrong dimension,
/// lower-dimensional cone where facets are required, ...).
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
K dot(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw GeometryError("dimension mismatch in dot product");
    K s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

template <class K>
K dot(const Vec<K>& h, const LatticePoint& p) {
    if (h.size() != p.dim()) throw GeometryError("dimension mismatch: point " + p.to_string());
    K s(0);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (p[i] != 0) s = s + h[i] * K(p[i]);
    return s;
}

template <class K>
K dot(const std::vector<std::int64_t>& form, const Vec<K>& v) {
    if (form.size() != v.size()) throw GeometryError("dimension mismatch in linear form");
    K s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (form[i] != 0) s = s + K(form[i]) * v[i];
    return s;
}

inline std::optional<Rational> exact_rational(const Rational& x) { return x; }
inline std::optional<Rational> exact_rational(const QuadraticReal& x) {
    if (!x.is_rational()) return std::nullopt;
    return x.rational_part();
}

template <class K>
std::string vec_to_string(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

/// Primitive integer vector positively proportional to a rational vector.
inline std::vector<std::int64_t> primitive_integer(const std::vector<Rational>& v) {
    BigInt lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, x.denominator());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& x : v) {
        ints.push_back(x.numerator() * (lcm / x.denominator()));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints.back()));
    }
    std::vector<std::int64_t> out;
    for (auto& x : ints) {
        BigInt q = g == 0 ? x : x / g;
        if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("integer vector exceeds 64-bit range");
        out.push_back(static_cast<std::int64_t>(q));
    }
    return out;
}

/// Scales v by a positive factor so that its last nonzero entry is ±1, and
/// to a primitive integer vector when all entries are rational.
template <OrderedField K>
Vec<K> normalize_direction(Vec<K> v) {
    auto last = std::find_if(v.rbegin(), v.rend(), [](const K& x) { return !is_zero(x); });
    if (last == v.rend()) return v;
    K scale = inverse(abs(*last));
    for (auto& x : v) x = x * scale;
    std::vector<Rational> rat;
    for (const auto& x : v) {
        auto r = exact_rational(x);
        if (!r) return v;
        rat.push_back(*r);
    }
    Vec<K> out;
    for (auto c : primitive_integer(rat)) out.push_back(K(c));
    return out;
}

/// Nearest integer, halves rounded up.
template <OrderedField K>
BigInt round_nearest(const K& x) {
    return floor(x + K(Rational(1, 2)));
}

template <OrderedField K>
class Cone {
public:
    /// Validates the generators; facets are derived when the cone is full-dimensional.
    explicit Cone(std::vector<Vec<K>> generators) : gens_(std::move(generators)) {
        if (gens_.empty()) throw GeometryError("cone needs at least one generator");
        n_ = gens_[0].size();
        if (n_ == 0) throw GeometryError("cone ambient dimension must be positive");
        for (const auto& g : gens_) {
            if (g.size() != n_) throw GeometryError("generators of differing dimension");
            if (std::all_of(g.begin(), g.end(), [](const K& x) { return is_zero(x); }))
                throw GeometryError("zero vector among cone generators");
        }
        rank_ = rank(gens_);
        if (rank_ == n_) facets_ = derive_facets();
    }

    std::size_t dim() const { return n_; }
    const std::vector<Vec<K>>& generators() const { return gens_; }
    bool full_dimensional() const { return rank_ == n_; }
    std::size_t span_rank() const { return rank_; }

    const std::vector<Vec<K>>& facets() const {
        if (!full_dimensional()) throw GeometryError("facet description of a lower-dimensional cone is unsupported");
        return facets_;
    }

    bool contains(const LatticePoint& p) const {
        if (p.dim() != n_) throw GeometryError("dimension mismatch: point " + p.to_string());
        for (const auto& h : facets())
            if (sign(dot(h, p)) < 0) return false;
        return true;
    }
    bool contains_strictly(const LatticePoint& p) const {
        if (p.dim() != n_) throw GeometryError("dimension mismatch: point " + p.to_string());
        for (const auto& h : facets())
            if (sign(dot(h, p)) <= 0) return false;
        return true;
    }

private:
    // Every facet of a full-dimensional cone is spanned by n-1 independent
    // generators; keep the candidate normals that are one-signed on all generators.
    std::vector<Vec<K>> derive_facets() const {
        std::vector<Vec<K>> out;
        std::size_t k = n_ - 1, l = gens_.size();
        if (k > l) return out;
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        const K zero(0);
        while (true) {
            DenseMatrix<K> sub;
            for (auto i : idx) sub.push_back(gens_[i]);
            if (gradedk::rank(sub) == k) {
                auto ker = kernel_basis(sub, n_, zero);
                Vec<K> h = ker.at(0);
                bool pos = false, neg = false;
                for (const auto& g : gens_) {
                    int s = sign(dot(h, g));
                    pos |= s > 0;
                    neg |= s < 0;
                }
                if (!(pos && neg)) {
                    if (neg) for (auto& x : h) x = -x;
                    h = normalize_direction(h);
                    bool dup = std::any_of(out.begin(), out.end(), [&](const Vec<K>& o) { return o == h; });
                    if (!dup) out.push_back(std::move(h));
                }
            }
            // Next k-subset in lexicographic order.
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == l - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    }

    std::vector<Vec<K>> gens_;
    std::vector<Vec<K>> facets_;
    std::size_t n_ = 0;
    std::size_t rank_ = 0;
};

/// Inequality normals h with C = {x : h·x ≥ 0}.
template <OrderedField K>
std::vector<Vec<K>> facets_from_generators(const std::vector<Vec<K>>& generators) {
    return Cone<K>(generators).facets();
}

template <OrderedField K>
bool is_full_dimensional(const Cone<K>& cone) {
    return cone.full_dimensional();
}

template <OrderedField K>
struct Pointedness {
    bool pointed = false;
    /// Integral γ₀ with γ₀·g > 0 for every generator g.
    std::optional<std::vector<std::int64_t>> witness;
    /// When not pointed: a nonzero x with both x and -x in the cone.
    std::optional<Vec<K>> line;
};

namespace detail {

template <OrderedField K>
bool strictly_positive_on(const std::vector<std::int64_t>& form, const std::vector<Vec<K>>& gens) {
    for (const auto& g : gens)
        if (sign(dot(form, g)) <= 0) return false;
    return true;
}

// Integral form strictly positive on gens near the direction of w.
template <OrderedField K>
std::optional<std::vector<std::int64_t>> integral_witness(Vec<K> w, const std::vector<Vec<K>>& gens) {
    w = normalize_direction(w);
    std::vector<Rational> rat;
    bool exact = true;
    for (const auto& x : w) {
        auto r = exact_rational(x);
        if (!r) { exact = false; break; }
        rat.push_back(*r);
    }
    if (exact) {
        auto form = primitive_integer(rat);
        if (strictly_positive_on(form, gens)) return form;
    }
    K scale(1);
    for (int attempt = 0; attempt < 48; ++attempt, scale = scale * K(2)) {
        std::vector<std::int64_t> form;
        for (const auto& x : w) form.push_back(static_cast<std::int64_t>(round_nearest(K(scale * x))));
        std::vector<Rational> as_rat(form.begin(), form.end());
        if (std::all_of(form.begin(), form.end(), [](auto c) { return c == 0; })) continue;
        form = primitive_integer(as_rat);
        if (strictly_positive_on(form, gens)) return form;
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides whether the cone contains no line. On success returns an integral
/// witness form built from the sum of facet normals; otherwise a line direction.
template <OrderedField K>
Pointedness<K> is_pointed(const Cone<K>& cone) {
    const auto& gens = cone.generators();
    const std::size_t n = cone.dim();
    const K zero(0);

    // Coordinates of the generators in a basis of their span (the nonzero
    // RREF rows); at pivot columns that basis is the identity.
    DenseMatrix<K> rref = gens;
    auto pivots = row_reduce(rref);
    const std::size_t r = pivots.size();
    std::vector<Vec<K>> reduced;
    for (const auto& g : gens) {
        Vec<K> c;
        for (auto p : pivots) c.push_back(g[p]);
        reduced.push_back(std::move(c));
    }
    Cone<K> inner(reduced);
    const auto& facets = inner.facets();

    Pointedness<K> out;
    auto lineality = kernel_basis(DenseMatrix<K>(facets.begin(), facets.end()), r, zero);
    if (!lineality.empty()) {
        Vec<K> x(n, zero);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < n; ++j) x[j] = x[j] + lineality[0][k] * rref[k][j];
        out.line = std::move(x);
        return out;
    }
    Vec<K> sum(r, zero);
    for (const auto& h : facets)
        for (std::size_t k = 0; k < r; ++k) sum[k] = sum[k] + h[k];
    Vec<K> w(n, zero);
    for (std::size_t k = 0; k < r; ++k) w[pivots[k]] = sum[k];
    out.pointed = true;
    out.witness = detail::integral_witness(w, gens);
    if (!out.witness) throw GeometryError("could not round pointedness witness to an integral form");
    return out;
}

template <OrderedField K>
bool contains(const Cone<K>& cone, const LatticePoint& p) {
    return cone.contains(p);
}

/// Integral point strictly inside a full-dimensional pointed cone.
template <OrderedField K>
LatticePoint interior_vector(const Cone<K>& cone) {
    if (!cone.full_dimensional()) throw GeometryError("interior vector requires a full-dimensional cone");
    const std::size_t n = cone.dim();
    Vec<K> sum(n, K(0));
    for (const auto& g : cone.generators())
        for (std::size_t i = 0; i < n; ++i) sum[i] = sum[i] + g[i];
    std::vector<Rational> rat;
    for (const auto& x : sum) {
        auto r = exact_rational(x);
        if (!r) break;
        rat.push_back(*r);
    }
    if (rat.size() == n) {
        LatticePoint v(primitive_integer(rat));
        if (cone.contains_strictly(v)) return v;
    }
    K mean_scale = inverse(K(static_cast<std::int64_t>(cone.generators().size())));
    K scale = mean_scale;
    for (int attempt = 0; attempt < 48; ++attempt, scale = scale * K(2)) {
        LatticePoint v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(round_nearest(K(scale * sum[i])));
        if (!v.is_zero() && cone.contains_strictly(v)) return v;
    }
    throw GeometryError("no integral interior point found after repeated scaling");
}

}  // namespace gradedk
