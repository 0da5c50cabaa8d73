// Builds S[X, Y] graded by the positive orthant, presents the summand of
// R ⊕ R(−(1,0)) cut out by e = [[1, X], [0, 0]], and walks through its
// decomposition, filtration and K₀ class.

#include "gradedk/k0/verify.hpp"

#include <iostream>

int main() {
    using namespace gradedk;

    Cone<Rational> orthant({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    GradedRing<Rational> ring(orthant, OrderForm({2, 3}), Rational(1), {{"X", {1, 0}}, {"Y", {0, 1}}}, "R1");

    ShiftList shifts{{0, 0}, {1, 0}};
    auto e = GradedMatrix<Rational>::zero(ring, shifts, shifts);
    e.set(0, 0, ring.one());
    e.set(0, 1, ring.generator("X"));
    IdempotentPresentation<Rational> p(e);

    auto dec = conjugator(p);
    std::cout << "e =\n" << p.matrix().to_string();
    std::cout << "u =\n" << dec.u.to_string();
    std::cout << "u^-1 =\n" << dec.u_inv.to_string();
    std::cout << "graded rank: " << graded_rank(p).to_string(ring.order()) << "\n";

    LatticePoint v = ring.cone().interior_vector();
    std::cout << "window index along " << v.to_string() << ": " << window_index(p, v) << "\n";
    std::cout << "dim P_(2,1) = " << graded_dimension(p, LatticePoint{2, 1}) << "\n";

    auto report = verify_theorem_k0(p);
    for (const auto& c : report.checks) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
    return report.passed() ? 0 : 1;
}
