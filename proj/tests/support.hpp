#pragma once

// Shared fixtures for the unit tests: preset rings over the common bases.

#include "oracle.hpp"

#include <gtest/gtest.h>

namespace gradedk::testing {

inline Rational q1() { return Rational(1); }
inline PrimeFieldElem f7() { return PrimeFieldElem(1, 7); }
inline Product<Rational> qq() { return Product<Rational>({Rational(1), Rational(1)}); }

template <Scalar S>
GradedRing<S> preset_ring(const std::string& name, const S& one) {
    return build_ring(preset(name), one);
}

}  // namespace gradedk::testing
