#pragma once

// Degree-preserving maps between graded free modules ⊕ᵢ R(−bᵢ).
//
// Convention: elements are columns over the shift list. Entry (i, j) of a map
// from ⊕ R(−source_j) to ⊕ R(−target_i) is homogeneous of degree
// source_j − target_i, or zero; it is necessarily zero when that degree lies
// outside the cone.

#include "gradedk/exact/linalg.hpp"
#include "gradedk/ring/monoid_ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedk {

using ShiftList = std::vector<LatticePoint>;

/// An entry that is not homogeneous of the degree its slot requires, or
/// shift lists that do not line up.
class GradingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string shifts_to_string(const ShiftList& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string();
    return out + "]";
}

template <Scalar S>
class GradedMatrix {
public:
    using Elem = RingElem<S>;

    GradedMatrix(GradedRing<S> ring, ShiftList target, ShiftList source)
        : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)),
          entries_(target_.size() * source_.size(), ring_.zero()) {
        for (const auto& b : target_) check_dim(b);
        for (const auto& b : source_) check_dim(b);
    }

    static GradedMatrix zero(const GradedRing<S>& ring, const ShiftList& target, const ShiftList& source) {
        return GradedMatrix(ring, target, source);
    }
    static GradedMatrix identity(const GradedRing<S>& ring, const ShiftList& shifts) {
        GradedMatrix m(ring, shifts, shifts);
        for (std::size_t i = 0; i < shifts.size(); ++i) m.entries_[i * shifts.size() + i] = ring.one();
        return m;
    }
    /// Embeds an S-matrix as constant entries; nonzero entries must sit
    /// between equal shifts.
    static GradedMatrix from_constants(const GradedRing<S>& ring, const ShiftList& target, const ShiftList& source,
                                       const DenseMatrix<S>& values) {
        GradedMatrix m(ring, target, source);
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < source.size(); ++j)
                if (!gradedk::is_zero(values.at(i).at(j))) m.set(i, j, ring.constant(values[i][j]));
        return m;
    }

    const GradedRing<S>& ring() const { return ring_; }
    const ShiftList& target() const { return target_; }
    const ShiftList& source() const { return source_; }
    std::size_t rows() const { return target_.size(); }
    std::size_t cols() const { return source_.size(); }
    bool square() const { return target_ == source_; }

    /// Degree required of entry (i, j).
    LatticePoint slot_degree(std::size_t i, std::size_t j) const { return source_.at(j) - target_.at(i); }
    /// Whether slot (i, j) can hold a nonzero entry.
    bool slot_admissible(std::size_t i, std::size_t j) const { return ring_.in_support(slot_degree(i, j)); }

    const Elem& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

    /// Sets entry (i, j) after checking its degree.
    void set(std::size_t i, std::size_t j, Elem value) {
        if (i >= rows() || j >= cols()) throw GradingError("entry index out of range");
        if (!value.is_homogeneous_of(slot_degree(i, j)))
            throw GradingError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + value.to_string() +
                               " is not homogeneous of degree " + slot_degree(i, j).to_string());
        entries_[i * cols() + j] = std::move(value);
    }

    /// Re-checks every entry's degree (entries can only be set through set()).
    bool valid() const {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (!at(i, j).is_homogeneous_of(slot_degree(i, j))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Coefficient matrix over S (entry (i, j) read off at its slot degree).
    DenseMatrix<S> coefficients() const {
        auto out = dense_filled(rows(), cols(), ring_.base_zero());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (!at(i, j).is_zero()) out[i][j] = at(i, j).terms().begin()->second;
        return out;
    }

    friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
        if (a.source_ != b.target_)
            throw GradingError("shift mismatch in composition: " + shifts_to_string(a.source_) + " vs " +
                               shifts_to_string(b.target_));
        GradedMatrix out(a.ring_, a.target_, b.source_);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Elem& x = a.at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    const Elem& y = b.at(k, j);
                    if (!y.is_zero()) out.entries_[i * out.cols() + j] += x * y;
                }
            }
        return out;
    }
    friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
        same_shape(a, b);
        GradedMatrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
        return out;
    }
    friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
        same_shape(a, b);
        GradedMatrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
        return out;
    }
    GradedMatrix operator-() const {
        GradedMatrix out = *this;
        for (auto& e : out.entries_) e = -e;
        return out;
    }
    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        if (a.target_ != b.target_ || a.source_ != b.source_) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            if (!(a.entries_[k] == b.entries_[k])) return false;
        return true;
    }

    /// Block-diagonal sum.
    friend GradedMatrix direct_sum(const GradedMatrix& a, const GradedMatrix& b) {
        ShiftList t = a.target_, s = a.source_;
        t.insert(t.end(), b.target_.begin(), b.target_.end());
        s.insert(s.end(), b.source_.begin(), b.source_.end());
        GradedMatrix out(a.ring_, t, s);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) out.entries_[i * out.cols() + j] = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.entries_[(a.rows() + i) * out.cols() + a.cols() + j] = b.at(i, j);
        return out;
    }

    /// Same entries over translated shift lists (entry degrees are unchanged).
    GradedMatrix translated(const LatticePoint& delta) const {
        GradedMatrix out = *this;
        for (auto& b : out.target_) b = b + delta;
        for (auto& b : out.source_) b = b + delta;
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows(); ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols(); ++j) s += (j ? ", " : "") + at(i, j).to_string();
            s += "]\n";
        }
        return s;
    }

private:
    void check_dim(const LatticePoint& b) const {
        if (b.dim() != ring_.dim()) throw GradingError("shift " + b.to_string() + " has the wrong dimension");
    }
    static void same_shape(const GradedMatrix& a, const GradedMatrix& b) {
        if (a.target_ != b.target_ || a.source_ != b.source_) throw GradingError("shift mismatch in matrix sum");
        if (!(a.ring_.same_context(b.ring_))) throw RingError("matrices over different rings");
    }

    GradedRing<S> ring_;
    ShiftList target_;
    ShiftList source_;
    std::vector<Elem> entries_;
};

/// Matrix power by repeated multiplication (k = 0 gives the identity).
template <Scalar S>
GradedMatrix<S> matrix_power(const GradedMatrix<S>& m, unsigned k) {
    auto out = GradedMatrix<S>::identity(m.ring(), m.source());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

/// Entrywise reduction modulo R₊.
template <Scalar S>
DenseMatrix<S> reduce_entries(const GradedMatrix<S>& m) {
    auto out = dense_filled(m.rows(), m.cols(), m.ring().base_zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = reduce_mod_plus(m.at(i, j));
    return out;
}

}  // namespace gradedk
