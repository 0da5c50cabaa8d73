#include "support.hpp"

namespace gradedk {
namespace {

using testing::pt;

Cone<Rational> rational_cone(std::initializer_list<std::pair<int, int>> gens) {
    std::vector<Vec<Rational>> v;
    for (auto [x, y] : gens) v.push_back({Rational(x), Rational(y)});
    return Cone<Rational>(v);
}

Cone<QuadraticReal> r3_cone() {
    return Cone<QuadraticReal>({{QuadraticReal(1), QuadraticReal(0)},
                                {QuadraticReal(1), QuadraticReal(Rational(0), Rational(1), 2)}});
}

TEST(Lattice, ParseAndArithmetic) {
    EXPECT_EQ(LatticePoint::parse("1,-2"), pt(1, -2));
    EXPECT_EQ(LatticePoint::parse(" 3 , 4 "), pt(3, 4));
    EXPECT_THROW(LatticePoint::parse("1,,2"), std::invalid_argument);
    EXPECT_EQ(pt(1, 2) + pt(3, -5), pt(4, -3));
    EXPECT_EQ(3 * pt(1, 2), pt(3, 6));
    EXPECT_EQ(pt(1, 2).to_string(), "(1,2)");
    EXPECT_TRUE(LatticePoint(2).is_zero());
    EXPECT_EQ(LatticePoint::unit(2, 1), pt(0, 1));
}

TEST(Lattice, OverflowIsDetected) {
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(pt(big, 0) + pt(1, 0), std::overflow_error);
    EXPECT_THROW(2 * pt(big, 0), std::overflow_error);
}

TEST(Cone, PointednessOfPresetCones) {
    auto r2 = rational_cone({{1, 0}, {1, 2}});
    auto pr = is_pointed(r2);
    ASSERT_TRUE(pr.pointed);
    ASSERT_TRUE(pr.witness.has_value());
    EXPECT_EQ(*pr.witness, (std::vector<std::int64_t>{1, 0}));

    auto p3 = is_pointed(r3_cone());
    ASSERT_TRUE(p3.pointed);
    EXPECT_EQ(*p3.witness, (std::vector<std::int64_t>{1, 0}));
}

TEST(Cone, NonPointedConeReportsLine) {
    auto c = rational_cone({{1, 0}, {-1, 0}, {0, 1}});
    auto pr = is_pointed(c);
    EXPECT_FALSE(pr.pointed);
    ASSERT_TRUE(pr.line.has_value());
    EXPECT_TRUE(is_zero((*pr.line)[1]));
    EXPECT_FALSE(is_zero((*pr.line)[0]));
}

TEST(Cone, WitnessIsStrictlyPositiveOnRandomCones) {
    Rng rng(99);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<Vec<Rational>> gens;
        auto count = draw(rng, 1, 4);
        for (int g = 0; g < count; ++g) gens.push_back({Rational(draw(rng, -3, 3)), Rational(draw(rng, -3, 3))});
        bool has_zero = std::any_of(gens.begin(), gens.end(), [](const auto& g) { return is_zero(g[0]) && is_zero(g[1]); });
        if (has_zero) continue;
        Cone<Rational> c(gens);
        auto pr = is_pointed(c);
        if (!pr.pointed) continue;
        ++checked;
        for (const auto& g : gens) EXPECT_GT(sign(dot(*pr.witness, g)), 0);
    }
    EXPECT_GT(checked, 50);
}

TEST(Cone, Facets) {
    auto r2 = rational_cone({{1, 0}, {1, 2}});
    std::vector<std::string> facets;
    for (const auto& h : r2.facets()) facets.push_back(vec_to_string(h));
    std::sort(facets.begin(), facets.end());
    EXPECT_EQ(facets, (std::vector<std::string>{"(0, 1)", "(2, -1)"}));
}

TEST(Cone, MembershipAgreesWithInequalities) {
    std::map<std::string, AnyCone> cones{{"R1", rational_cone({{1, 0}, {0, 1}})},
                                         {"R2", rational_cone({{1, 0}, {1, 2}})},
                                         {"R3", r3_cone()}};
    for (const auto& [name, cone] : cones)
        for (std::int64_t x = -8; x <= 8; ++x)
            for (std::int64_t y = -8; y <= 8; ++y)
                EXPECT_EQ(cone.contains(pt(x, y)), testing::oracle_contains(name, pt(x, y))) << name << pt(x, y).to_string();
}

TEST(Cone, InteriorVectors) {
    EXPECT_EQ(interior_vector(rational_cone({{1, 0}, {1, 2}})), pt(1, 1));
    auto v3 = interior_vector(r3_cone());
    EXPECT_TRUE(r3_cone().contains_strictly(v3));
    EXPECT_EQ(v3, pt(1, 1));
}

TEST(Order, RejectsNonPositiveForms) {
    auto r2 = rational_cone({{1, 0}, {1, 2}});
    EXPECT_NO_THROW(OrderForm::for_cone({1, 0}, r2));
    EXPECT_THROW(OrderForm::for_cone({0, 1}, r2), GeometryError);
    EXPECT_THROW(OrderForm::for_cone({1, 0, 0}, r2), GeometryError);
}

TEST(Order, TieBreakIsLexicographic) {
    OrderForm order({1, 1});
    EXPECT_TRUE(order.less(pt(0, 1), pt(1, 0)));
    EXPECT_TRUE(order.less(pt(5, -5), pt(0, 1)));
    EXPECT_EQ(order.compare(pt(2, 3), pt(2, 3)), std::strong_ordering::equal);
}

TEST(Enumerate, PresetExamples) {
    auto r1 = rational_cone({{1, 0}, {0, 1}});
    auto pts = enumerate_window(OrderForm({2, 3}), r1, pt(0, 0), 5);
    EXPECT_EQ(pts, (std::vector<LatticePoint>{pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 0), pt(1, 1)}));

    auto r3 = enumerate_window(OrderForm({1, 0}), r3_cone(), pt(0, 0), 2);
    EXPECT_EQ(r3, (std::vector<LatticePoint>{pt(0, 0), pt(1, 0), pt(1, 1), pt(2, 0), pt(2, 1), pt(2, 2)}));
}

TEST(Enumerate, MatchesBruteForceOracle) {
    Rng rng(4242);
    std::map<std::string, std::pair<AnyCone, std::vector<std::int64_t>>> cones{
        {"R1", {rational_cone({{1, 0}, {0, 1}}), {2, 3}}},
        {"R2", {rational_cone({{1, 0}, {1, 2}}), {1, 0}}},
        {"R3", {r3_cone(), {1, 0}}},
    };
    for (const auto& [name, entry] : cones) {
        const auto& [cone, gamma] = entry;
        OrderForm order(gamma);
        for (int i = 0; i < 30; ++i) {
            LatticePoint base = pt(draw(rng, -6, 6), draw(rng, -6, 6));
            auto bound = draw(rng, -4, 12);
            auto got = cone.enumerate(order, base, bound);
            EXPECT_EQ(got, testing::oracle_window(name, order, base, bound)) << name << " base " << base.to_string();
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), order.less_fn()));
            EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
        }
    }
}

TEST(Enumerate, AlternativeOrderForms) {
    auto r2 = rational_cone({{1, 0}, {1, 2}});
    for (std::vector<std::int64_t> gamma : {std::vector<std::int64_t>{1, 1}, {3, -1}, {2, 1}}) {
        OrderForm order = OrderForm::for_cone(gamma, r2);
        for (std::int64_t bound = 0; bound <= 8; ++bound)
            EXPECT_EQ(enumerate_window(order, r2, pt(1, -1), bound), testing::oracle_window("R2", order, pt(1, -1), bound));
    }
}

TEST(Enumerate, HigherDimensionalCone) {
    std::vector<Vec<Rational>> gens{{Rational(1), Rational(0), Rational(0)},
                                    {Rational(1), Rational(1), Rational(0)},
                                    {Rational(1), Rational(0), Rational(1)},
                                    {Rational(1), Rational(1), Rational(1)}};
    Cone<Rational> cone(gens);
    OrderForm order({1, 0, 0});
    auto pts = enumerate_window(order, cone, LatticePoint{0, 0, 0}, 3);
    std::vector<LatticePoint> expect;
    for (std::int64_t x = 0; x <= 3; ++x)
        for (std::int64_t y = 0; y <= x; ++y)
            for (std::int64_t z = 0; z <= x; ++z) expect.push_back(LatticePoint{x, y, z});
    std::sort(expect.begin(), expect.end(), order.less_fn());
    EXPECT_EQ(pts, expect);
}

}  // namespace
}  // namespace gradedk
