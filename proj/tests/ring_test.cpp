#include "support.hpp"

namespace gradedk {
namespace {

using testing::pt;

template <Scalar S>
RingElem<S> random_elem(const GradedRing<S>& ring, Rng& rng, const std::vector<LatticePoint>& pool) {
    auto x = ring.zero();
    auto terms = draw(rng, 0, 3);
    for (int i = 0; i < terms; ++i) {
        const auto& exp = pool[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
        x += ring.monomial(exp, random_scalar(ring.base_one(), rng));
    }
    return x;
}

TEST(Ring, PresetGenerators) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    EXPECT_EQ((r1.generator("X") * r1.generator("Y")).to_string(), "t^(1,1)");
    auto r2 = testing::preset_ring("R2", testing::q1());
    EXPECT_TRUE((r2.generator("U") * r2.generator("W") - r2.generator("V").pow(2)).is_zero());
    EXPECT_THROW(r2.generator("Z"), RingError);
}

TEST(Ring, SupportIsTheCone) {
    auto r2 = testing::preset_ring("R2", testing::q1());
    EXPECT_TRUE(r2.in_support(pt(1, 2)));
    EXPECT_FALSE(r2.in_support(pt(0, 1)));
    EXPECT_THROW(r2.monomial(pt(0, 1)), RingError);
    auto r3 = testing::preset_ring("R3", testing::q1());
    EXPECT_TRUE(r3.in_support(pt(5, 7)));
    EXPECT_FALSE(r3.in_support(pt(5, 8)));
}

TEST(Ring, TextForm) {
    auto r1 = testing::preset_ring("R1", testing::q1());
    auto x = r1.constant(Rational(2)) - r1.generator("X") + r1.monomial(pt(0, 1), Rational::parse("1/2"));
    EXPECT_EQ(x.to_string(), "2 + -1*t^(1,0) + 1/2*t^(0,1)");
    auto f = testing::preset_ring("R1", testing::f7());
    EXPECT_EQ(f.monomial(pt(1, 1), PrimeFieldElem(3, 7)).to_string(), "(3 mod 7)*t^(1,1)");
    EXPECT_EQ(r1.zero().to_string(), "0");
}

TEST(Ring, RejectsBadConstruction) {
    auto d = preset("R2");
    d.order = std::vector<std::int64_t>{0, 1};
    EXPECT_THROW(build_ring(d, testing::q1()), std::exception);
    auto bad = preset("R1");
    bad.cone = {{"1", "0"}, {"-1", "0"}, {"0", "1"}};
    bad.order = std::nullopt;
    bad.generators.clear();
    EXPECT_THROW(build_ring(bad, testing::q1()), std::exception);
}

TEST(Ring, MixingContextsThrows) {
    auto a = testing::preset_ring("R1", testing::q1());
    auto b = testing::preset_ring("R1", testing::q1());
    EXPECT_THROW(a.one() + b.one(), RingError);
}

template <class S>
void check_ring_axioms(const std::string& name, const S& one, std::uint64_t seed) {
    auto ring = testing::preset_ring(name, one);
    auto pool = support_pool(ring, 6);
    Rng rng(seed);
    for (int i = 0; i < 150; ++i) {
        auto x = random_elem(ring, rng, pool), y = random_elem(ring, rng, pool), z = random_elem(ring, rng, pool);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * ring.one(), x);
        EXPECT_TRUE((x - x).is_zero());
        EXPECT_EQ(reduce_mod_plus(x * y), reduce_mod_plus(x) * reduce_mod_plus(y));
        EXPECT_EQ(reduce_mod_plus(x + y), reduce_mod_plus(x) + reduce_mod_plus(y));
        EXPECT_EQ(x.pow(3), x * x * x);
    }
}

TEST(RingProperties, AxiomsOverEveryPresetAndBase) {
    for (const auto& name : preset_names()) {
        check_ring_axioms(name, testing::q1(), 1);
        check_ring_axioms(name, testing::f7(), 2);
        check_ring_axioms(name, testing::qq(), 3);
    }
}

TEST(RingProperties, MonomialDegreesAdd) {
    for (const auto& name : preset_names()) {
        auto ring = testing::preset_ring(name, testing::q1());
        auto pool = support_pool(ring, 8);
        for (const auto& a : pool)
            for (const auto& b : pool) {
                auto m = ring.monomial(a) * ring.monomial(b);
                ASSERT_TRUE(m.homogeneous_degree().has_value());
                EXPECT_EQ(*m.homogeneous_degree(), a + b);
                EXPECT_EQ(ring.order().degree(a + b), ring.order().degree(a) + ring.order().degree(b));
            }
    }
}

TEST(RingProperties, ProductBaseHasZeroDivisors) {
    auto ring = testing::preset_ring("R1", testing::qq());
    Product<Rational> e1({Rational(1), Rational(0)}), e2({Rational(0), Rational(1)});
    auto x = ring.monomial(pt(1, 0), e1);
    auto y = ring.monomial(pt(0, 1), e2);
    EXPECT_TRUE((x * y).is_zero());
    EXPECT_FALSE(x.is_zero());
}

TEST(Expression, Evaluates) {
    auto r2 = testing::preset_ring("R2", testing::q1());
    EXPECT_EQ(parse_expression(r2, "U*W - V^2").to_string(), "0");
    EXPECT_EQ(parse_expression(r2, "(U + V)^2").to_string(), "t^(2,0) + 2*t^(2,1) + t^(2,2)");
    EXPECT_EQ(parse_expression(r2, "t[1,1] - V"), r2.zero());
    EXPECT_EQ(parse_expression(r2, "t^(1,2)"), r2.generator("W"));
    EXPECT_EQ(parse_expression(r2, "1/2*U + 1/2*U"), r2.generator("U"));
    EXPECT_EQ(parse_expression(r2, "-U + 2"), r2.constant(Rational(2)) - r2.generator("U"));
}

TEST(Expression, PrimeFieldLiterals) {
    auto r1 = testing::preset_ring("R1", testing::f7());
    EXPECT_EQ(parse_expression(r1, "7*X").to_string(), "0");
    EXPECT_EQ(parse_expression(r1, "1/2"), r1.constant(PrimeFieldElem(4, 7)));
    EXPECT_THROW(parse_expression(r1, "1/7"), std::domain_error);
}

TEST(Expression, Errors) {
    auto r2 = testing::preset_ring("R2", testing::q1());
    EXPECT_THROW(parse_expression(r2, "U +"), ExpressionError);
    EXPECT_THROW(parse_expression(r2, "U ** 2"), ExpressionError);
    EXPECT_THROW(parse_expression(r2, "(U"), ExpressionError);
    EXPECT_THROW(parse_expression(r2, "U^-1"), ExpressionError);
    EXPECT_THROW(parse_expression(r2, "t[1]"), ExpressionError);
    EXPECT_THROW(parse_expression(r2, "Q"), RingError);
    EXPECT_THROW(parse_expression(r2, "t[0,1]"), RingError);
}

}  // namespace
}  // namespace gradedk
