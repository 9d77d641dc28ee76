#include "fixtures.hpp"

#include "gtprobe/rational.hpp"

#include <gtest/gtest.h>

using namespace gtprobe;
using fixtures::q;

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(q("6/4").str(), "3/2");
    EXPECT_EQ(q("-6/4").str(), "-3/2");
    EXPECT_EQ(q(" 7 ").str(), "7");
    EXPECT_EQ(q("0/5").str(), "0");
    EXPECT_TRUE(q("4/2").is_integer());
}

TEST(Rational, RejectsMalformedInput)
{
    for (const char* bad : {"", "1.5", "a", "1/", "/2", "1/2/3", "1 2", "--1", "6/-4", "1/0"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
    EXPECT_EQ(q("1/2") - q("1/3"), q("1/6"));
    EXPECT_EQ(q("2/3") * q("9/4"), q("3/2"));
    EXPECT_EQ(q("2/3") / q("4/9"), q("3/2"));
    EXPECT_EQ(-q("2/3"), q("-2/3"));
    EXPECT_THROW(q("1") / q("0"), std::domain_error);
    EXPECT_LT(q("1/3"), q("1/2"));
    EXPECT_EQ(abs(q("-7/3")), q("7/3"));
}

TEST(Rational, FloorCeil)
{
    EXPECT_EQ(q("7/2").floor(), 3);
    EXPECT_EQ(q("7/2").ceil(), 4);
    EXPECT_EQ(q("-7/2").floor(), -4);
    EXPECT_EQ(q("-7/2").ceil(), -3);
    EXPECT_EQ(q("3").floor(), 3);
    EXPECT_EQ(q("3").ceil(), 3);
}

TEST(Rational, HugeValuesStayExact)
{
    Rational x(1);
    for (int i = 0; i < 100; ++i) x = x * Rational(3) / Rational(2);
    for (int i = 0; i < 100; ++i) x = x * Rational(2) / Rational(3);
    EXPECT_EQ(x, Rational(1));
}

TEST(IntVector, PrimitiveAndGcd)
{
    EXPECT_EQ(primitive(IntVector{4, -6, 0}), (IntVector{2, -3, 0}));
    EXPECT_EQ(primitive(IntVector{-3, 0, 0}), (IntVector{-1, 0, 0}));
    EXPECT_EQ(gcd_of(IntVector{4, -6, 10}), 2);
    EXPECT_THROW(primitive(IntVector{0, 0, 0}), std::invalid_argument);
}

TEST(Vectors, DotAlongAndParse)
{
    const RationalVector x = fixtures::pt("1/2,-1,3");
    EXPECT_EQ(dot(IntVector{2, 1, 0}, x), Rational(0));
    EXPECT_EQ(dot(IntVector{1, 2, 3}, IntVector{4, 5, 6}), 32);
    EXPECT_EQ(along(x, q("1/2"), IntVector{1, 0, -2}), fixtures::pt("1,-1,2"));
    EXPECT_EQ(x - x, fixtures::pt("0,0,0"));
    EXPECT_EQ(q("2") * x, fixtures::pt("1,-2,6"));
    EXPECT_THROW(parse_rational_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_rational_list(""), std::invalid_argument);
}
