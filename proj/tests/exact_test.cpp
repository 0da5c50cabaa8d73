#include "support.hpp"

#include <cmath>

namespace gradedk {
namespace {

QuadraticReal qr(std::int64_t a, std::int64_t b, std::int64_t d = 2) { return QuadraticReal(Rational(a), Rational(b), d); }

TEST(Rational, CanonicalForm) {
    Rational x(BigInt(6), BigInt(-4));
    EXPECT_EQ(x.to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("10/5").to_string(), "2");
    EXPECT_EQ(Rational::parse("-0/7").to_string(), "0");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
}

TEST(Rational, FloorCeil) {
    EXPECT_EQ(Rational::parse("-3/2").floor(), BigInt(-2));
    EXPECT_EQ(Rational::parse("-3/2").ceil(), BigInt(-1));
    EXPECT_EQ(Rational::parse("7/2").floor(), BigInt(3));
    EXPECT_EQ(Rational(4).ceil(), BigInt(4));
}

TEST(Rational, ArbitraryPrecision) {
    Rational big = Rational::parse("123456789012345678901234567890");
    EXPECT_EQ((big * big).to_string(), "15241578753238836750495351562536198787501905199875019052100");
}

TEST(Rational, InverseOfZeroThrows) { EXPECT_THROW(inverse(Rational(0)), std::domain_error); }

TEST(Quadratic, SignExamples) {
    EXPECT_EQ(sign_quadratic(qr(1, 1)), 1);
    EXPECT_EQ(sign_quadratic(qr(3, -2)), 1);
    EXPECT_EQ(sign_quadratic(qr(1, -1)), -1);
    EXPECT_EQ(sign_quadratic(qr(0, 0)), 0);
    EXPECT_EQ(sign_quadratic(qr(-3, 2)), -1);
}

TEST(Quadratic, FieldExamples) {
    EXPECT_EQ(qr(1, 1) * qr(-1, 1), QuadraticReal(Rational(1)));
    EXPECT_EQ(inverse(qr(1, 1)), qr(-1, 1));
    EXPECT_THROW(inverse(QuadraticReal(Rational(0))), std::domain_error);
}

TEST(Quadratic, MixedRadicalsRejected) {
    EXPECT_THROW(qr(1, 1, 2) + qr(1, 1, 3), std::domain_error);
    EXPECT_THROW(qr(1, 1, 4), std::domain_error);
}

TEST(Quadratic, TextEncoding) {
    EXPECT_EQ(qr(1, 1).to_string(), "1+√2");
    EXPECT_EQ(qr(3, -2).to_string(), "3-2√2");
    EXPECT_EQ(QuadraticReal(Rational::parse("1/2"), Rational::parse("-3/4"), 2).to_string(), "1/2-3/4√2");
    for (std::string s : {"1+√2", "3-2√2", "-√2", "1/2-3/4√2", "5", "√2"})
        EXPECT_EQ(QuadraticReal::parse(s, 2).to_string(), s) << s;
    EXPECT_EQ(QuadraticReal::parse("sqrt(2)", 2), qr(0, 1));
    EXPECT_THROW(QuadraticReal::parse("1+√3", 2), std::invalid_argument);
}

TEST(Quadratic, FloorCeilExact) {
    EXPECT_EQ(floor(qr(0, 1)), BigInt(1));
    EXPECT_EQ(ceil(qr(0, 1)), BigInt(2));
    EXPECT_EQ(floor(qr(0, -1)), BigInt(-2));
    EXPECT_EQ(floor(QuadraticReal(Rational(0), Rational(1000), 2)), BigInt(1414));
}

TEST(PrimeField, Arithmetic) {
    PrimeFieldElem a(3, 7), b(5, 7);
    EXPECT_EQ(a + b, PrimeFieldElem(1, 7));
    EXPECT_EQ(a * b, PrimeFieldElem(1, 7));
    EXPECT_EQ(inverse(a), b);
    EXPECT_EQ(PrimeFieldElem(-1, 7), PrimeFieldElem(6, 7));
    EXPECT_THROW(inverse(PrimeFieldElem(0, 7)), std::domain_error);
    EXPECT_THROW(PrimeFieldElem(1, 8), std::domain_error);
    EXPECT_THROW(a + PrimeFieldElem(1, 11), std::domain_error);
    EXPECT_EQ(a.to_string(), "3 mod 7");
    EXPECT_EQ(PrimeFieldElem::parse("3 mod 7"), a);
}

TEST(Product, ComponentwiseAndUnits) {
    Product<Rational> x({Rational(1), Rational(0)});
    Product<Rational> y({Rational(2), Rational(3)});
    EXPECT_EQ(x * y, Product<Rational>({Rational(2), Rational(0)}));
    EXPECT_FALSE(is_unit(x));
    EXPECT_TRUE(is_unit(y));
    EXPECT_THROW(inverse(x), std::domain_error);
    EXPECT_EQ(to_string(y), "(2, 3)");
    EXPECT_EQ(parse_coefficient("(2, 3)", testing::qq()), y);
}

TEST(Coefficients, ParseIntoPrimeField) {
    EXPECT_EQ(parse_coefficient("1/2", testing::f7()), PrimeFieldElem(4, 7));
    EXPECT_EQ(parse_coefficient("-1", testing::f7()), PrimeFieldElem(6, 7));
    EXPECT_THROW(parse_coefficient("1 mod 5", testing::f7()), std::invalid_argument);
}

// Randomized properties -----------------------------------------------------

class QuadraticProperties : public ::testing::Test {
protected:
    Rng rng{20240501};
    QuadraticReal random(std::int64_t range = 100) {
        return QuadraticReal(Rational(draw(rng, -range, range)), Rational(BigInt(draw(rng, -range, range)), BigInt(draw(rng, 1, 5))), 2);
    }
};

TEST_F(QuadraticProperties, FieldAxioms) {
    const QuadraticReal one(Rational(1)), zero(Rational(0));
    for (int i = 0; i < 300; ++i) {
        auto x = random(), y = random(), z = random();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + zero, x);
        EXPECT_EQ(x * one, x);
        if (!is_zero(x)) EXPECT_EQ(x * inverse(x), one);
    }
}

TEST_F(QuadraticProperties, SignIsMultiplicative) {
    for (int i = 0; i < 500; ++i) {
        auto x = random(), y = random();
        EXPECT_EQ(sign_quadratic(x) * sign_quadratic(y), sign_quadratic(x * y));
    }
}

TEST_F(QuadraticProperties, OrderIsTotalAndTranslationInvariant) {
    auto le = [](const QuadraticReal& a, const QuadraticReal& b) { return sign_quadratic(b - a) >= 0; };
    for (int i = 0; i < 500; ++i) {
        auto a = random(), b = random(), c = random();
        EXPECT_TRUE(le(a, b) || le(b, a));
        if (le(a, b) && le(b, a)) EXPECT_EQ(a, b);
        if (le(a, b) && le(b, c)) EXPECT_TRUE(le(a, c));
        EXPECT_EQ(le(a, b), le(a + c, b + c));
    }
}

TEST_F(QuadraticProperties, SignAgreesWithFloatingPointAwayFromZero) {
    int compared = 0;
    for (int i = 0; i < 2000; ++i) {
        QuadraticReal x(Rational(draw(rng, -100, 100)), Rational(draw(rng, -100, 100)), 2);
        double approx = x.to_double();
        if (std::fabs(approx) <= 1e-6) continue;
        ++compared;
        EXPECT_EQ(sign_quadratic(x), approx > 0 ? 1 : -1);
    }
    EXPECT_GT(compared, 1900);
}

TEST(PrimeFieldProperties, FieldAxioms) {
    Rng rng(7);
    const PrimeFieldElem one(1, 7);
    for (int i = 0; i < 300; ++i) {
        auto x = random_scalar(one, rng), y = random_scalar(one, rng), z = random_scalar(one, rng);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        if (!is_zero(x)) EXPECT_EQ(x * inverse(x), one);
    }
}

TEST(RationalProperties, FieldAxioms) {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto x = random_scalar(Rational(1), rng), y = random_scalar(Rational(1), rng), z = random_scalar(Rational(1), rng);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x - x, Rational(0));
        if (!is_zero(x)) EXPECT_EQ(x * inverse(x), Rational(1));
        EXPECT_EQ(Rational::parse(x.to_string()), x);
    }
}

TEST(Linalg, RankAndInverse) {
    DenseMatrix<Rational> m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_EQ(rank(m), 1u);
    EXPECT_FALSE(dense_inverse(m, Rational(1)).has_value());
    DenseMatrix<Rational> n{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    auto inv = dense_inverse(n, Rational(1));
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(dense_equal(dense_multiply(n, *inv, Rational(1)), dense_identity(2, Rational(1))));
}

}  // namespace
}  // namespace gradedk
