#include "support.hpp"

namespace gradedk {
namespace {

using testing::pt;

template <Scalar S>
IdempotentPresentation<S> conjugate(const IdempotentPresentation<S>& p, Rng& rng) {
    auto [g, g_inv] = random_graded_automorphism(p.ring(), p.shifts(), rng);
    return IdempotentPresentation<S>(g * p.matrix() * g_inv);
}

TEST(K0, RankOfIdempotents) {
    DenseMatrix<Rational> e{{Rational(1), Rational(1)}, {Rational(0), Rational(0)}};
    EXPECT_EQ(k0_of_idempotent(e, testing::q1()).components(), std::vector<std::int64_t>{1});
    Product<Rational> a({Rational(1), Rational(0)});
    DenseMatrix<Product<Rational>> f{{a, testing::qq() - testing::qq()}, {testing::qq() - testing::qq(), testing::qq()}};
    EXPECT_EQ(k0_of_idempotent(f, testing::qq()).components(), (std::vector<std::int64_t>{2, 1}));
    DenseMatrix<Rational> bad{{Rational(2)}};
    EXPECT_THROW(k0_of_idempotent(bad, testing::q1()), NonIdempotentBlockError);
}

TEST(K0, ClassText) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    GradedRankClass c;
    c.add(pt(0, 0), K0Class({1}));
    c.add(pt(1, 2), K0Class({2}));
    c.add(pt(-1, 0), K0Class({-1}));
    EXPECT_EQ(c.to_string(r1.order()), "-1*t^(-1,0) + t^(0,0) + 2*t^(1,2)");
    GradedRankClass z;
    z.add(pt(0, 0), K0Class({1}));
    z.add(pt(0, 0), K0Class({-1}));
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.to_string(r1.order()), "0");
}

TEST(K0, FreeModulesGiveMonomials) {
    for (const auto& name : preset_names()) {
        auto ring = testing::preset_ring(name, testing::q1());
        for (const auto& b : {pt(0, 0), pt(1, 0), pt(1, 1), pt(1, 2), pt(-3, 5)}) {
            auto p = IdempotentPresentation<Rational>::free(ring, {b});
            EXPECT_EQ(graded_rank(p).to_string(ring.order()), "t^" + b.to_string()) << name;
        }
    }
}

TEST(K0, WorkedExampleRank) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    auto e = GradedMatrix<Rational>::zero(r1, {pt(0, 0), pt(1, 0)}, {pt(0, 0), pt(1, 0)});
    e.set(0, 0, r1.one());
    e.set(0, 1, r1.generator("X"));
    auto report = verify_theorem_k0(IdempotentPresentation<Rational>(e));
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.graded_rank.to_string(r1.order()), "t^(0,0)");
}

TEST(K0, PhiRealizeRoundTrip) {
    auto r2 = testing::preset_ring("R2", testing::qq());
    for (std::int64_t x0 = 0; x0 <= 3; ++x0)
        for (std::int64_t x1 = 0; x1 <= 3; ++x1) {
            K0Class x({x0, x1});
            auto p = phi_realize(x, pt(2, -1), r2);
            EXPECT_EQ(graded_rank(p), GradedRankClass::monomial(pt(2, -1), x));
        }
    EXPECT_THROW(phi_realize(K0Class({1}), pt(0, 0), r2), std::invalid_argument);
    EXPECT_THROW(phi_realize(K0Class({-1, 0}), pt(0, 0), r2), std::invalid_argument);
}

TEST(K0, FactorUnits) {
    auto e0 = factor_unit(testing::qq(), 0);
    EXPECT_EQ(e0, Product<Rational>({Rational(1), Rational(0)}));
    EXPECT_EQ(factor_unit(testing::q1(), 0), Rational(1));
}

template <Scalar S>
void check_invariants(const std::string& name, const S& one, std::uint64_t seed) {
    auto ring = testing::preset_ring(name, one);
    auto pool = support_pool(ring, 5);
    Rng rng(seed);
    for (int i = 0; i < 12; ++i) {
        auto p = random_presentation(ring, random_shifts(pool, draw(rng, 1, 4), rng), rng);
        auto q = random_presentation(ring, random_shifts(pool, draw(rng, 1, 3), rng), rng);
        auto rank_p = graded_rank(p);
        // Isomorphic presentations have the same class.
        EXPECT_EQ(graded_rank(conjugate(p, rng)), rank_p);
        // Additivity.
        EXPECT_EQ(graded_rank(direct_sum(p, q)), rank_p + graded_rank(q));
        // Complement: [e] + [1 − e] = [free module].
        auto id = GradedMatrix<S>::identity(ring, p.shifts());
        auto complement = IdempotentPresentation<S>(id - p.matrix());
        EXPECT_EQ(rank_p + graded_rank(complement), graded_rank(IdempotentPresentation<S>::free(ring, p.shifts())));
        // Translation acts by multiplication with a monomial.
        auto c = pt(draw(rng, -3, 3), draw(rng, -3, 3));
        EXPECT_EQ(graded_rank(shift_module(p, c)), rank_p.times_monomial(-c));
        for (std::size_t axis = 0; axis < 2; ++axis)
            EXPECT_EQ(graded_rank(l_action_module(p, axis, 2)), l_action(rank_p, axis, 2, 2));
        EXPECT_TRUE(verify_theorem_k0(p).passed());
    }
}

TEST(K0Properties, InvariantsOverPresetsAndBases) {
    check_invariants("R1", testing::q1(), 1);
    check_invariants("R2", testing::f7(), 2);
    check_invariants("R3", testing::q1(), 3);
    check_invariants("R1", testing::qq(), 4);
    check_invariants("R2", testing::qq(), 5);
}

TEST(Verify, TooSmallWindowFails) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    auto p = IdempotentPresentation<Rational>::free(r1, {pt(0, 0), pt(2, 1)});
    auto report = verify_theorem_k0(p, 0);
    EXPECT_FALSE(report.passed());
    EXPECT_TRUE(verify_theorem_k0(p).passed());
}

TEST(Hilbert, FreeModuleTable) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    auto p = IdempotentPresentation<Rational>::free(r1, {pt(0, 0), pt(1, 0)});
    auto rows = hilbert_table(p, 5);
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
        std::int64_t want = (r1.in_support(row.degree) ? 1 : 0) + (r1.in_support(row.degree - pt(1, 0)) ? 1 : 0);
        EXPECT_EQ(static_cast<std::int64_t>(row.dimension), want);
        EXPECT_EQ(row.expected, want);
    }
    EXPECT_TRUE(hilbert_series_check(p, 10));
}

TEST(Hilbert, RandomSamples) {
    for (const auto& name : preset_names()) {
        auto ring = testing::preset_ring(name, testing::f7());
        Rng rng(8);
        auto pool = support_pool(ring, 5);
        for (int i = 0; i < 6; ++i)
            EXPECT_TRUE(hilbert_series_check(random_presentation(ring, random_shifts(pool, draw(rng, 1, 4), rng), rng), 10));
    }
}

}  // namespace
}  // namespace gradedk
