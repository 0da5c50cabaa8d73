#pragma once

// Finitely generated graded projective modules P = image(e) ⊆ ⊕ᵢ R(−bᵢ),
// presented by a degree-zero idempotent e.

#include "gradedk/modules/graded_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gradedk {

class NotIdempotentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Scalar S>
class IdempotentPresentation {
public:
    /// Checks that e is square over one shift list and that e·e = e exactly.
    explicit IdempotentPresentation(GradedMatrix<S> e) : e_(std::move(e)) {
        if (!e_.square()) throw GradingError("presentation matrix must have equal source and target shifts");
        if (!e_.valid()) throw GradingError("presentation matrix has an inhomogeneous entry");
        if (!(e_ * e_ == e_)) throw NotIdempotentError("presentation matrix is not idempotent");
    }

    /// The graded free module ⊕ R(−bᵢ).
    static IdempotentPresentation free(const GradedRing<S>& ring, const ShiftList& shifts) {
        return IdempotentPresentation(GradedMatrix<S>::identity(ring, shifts));
    }

    const GradedRing<S>& ring() const { return e_.ring(); }
    const ShiftList& shifts() const { return e_.source(); }
    const GradedMatrix<S>& matrix() const { return e_; }
    std::size_t size() const { return e_.rows(); }

    friend IdempotentPresentation direct_sum(const IdempotentPresentation& p, const IdempotentPresentation& q) {
        return IdempotentPresentation(direct_sum(p.e_, q.e_), Trusted{});
    }

    /// Translation functor: M ↦ M(c), with M(c)_a = M_{c+a}; every shift moves by −c.
    friend IdempotentPresentation shift_module(const IdempotentPresentation& p, const LatticePoint& c) {
        return IdempotentPresentation(p.e_.translated(-c), Trusted{});
    }

    friend bool operator==(const IdempotentPresentation& a, const IdempotentPresentation& b) { return a.e_ == b.e_; }

private:
    struct Trusted {};
    IdempotentPresentation(GradedMatrix<S> e, Trusted) : e_(std::move(e)) {}

    GradedMatrix<S> e_;
};

}  // namespace gradedk
