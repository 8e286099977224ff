#include <gtest/gtest.h>

#include "qcalc/error.hpp"
#include "qcalc/scalar.hpp"

using namespace qcalc;

TEST(ParseScalar, IntegersDecimalsAndRationals) {
  EXPECT_EQ(*parse_scalar("42"), Scalar(42));
  EXPECT_EQ(*parse_scalar("-7"), Scalar(-7));
  EXPECT_EQ(*parse_scalar("0.5"), Scalar(1, 2));
  EXPECT_EQ(*parse_scalar("9.80665"), Scalar(196133, 20000));
  EXPECT_EQ(*parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(*parse_scalar("+3/9"), Scalar(1, 3));
}

TEST(ParseScalar, RejectsMalformed) {
  for (const char* bad : {"", "-", "1.", ".5", "1/0", "1/-2", "1e3", "abc", "1.2.3", "1/2/3"})
    EXPECT_FALSE(parse_scalar(bad).has_value()) << bad;
}

TEST(ToString, ExactForm) {
  EXPECT_EQ(to_string(Scalar(5, 18)), "5/18");
  EXPECT_EQ(to_string(Scalar(-4)), "-4");
}

TEST(ToDecimal, FifteenSignificantDigits) {
  EXPECT_EQ(to_decimal(Scalar(5, 18)), "0.277777777777778");
  EXPECT_EQ(to_decimal(Scalar(1, 3)), "0.333333333333333");
  EXPECT_EQ(to_decimal(Scalar(-2, 3)), "-0.666666666666667");
  EXPECT_EQ(to_decimal(Scalar(0)), "0");
  EXPECT_EQ(to_decimal(Scalar(1, 100)), "0.01");
  EXPECT_EQ(to_decimal(Scalar(12345)), "12345");
}

TEST(ToDecimal, TiesRoundToEven) {
  EXPECT_EQ(to_decimal(Scalar(25, 10), 1), "2");
  EXPECT_EQ(to_decimal(Scalar(35, 10), 1), "4");
  EXPECT_EQ(to_decimal(Scalar(125, 100), 2), "1.2");
  EXPECT_EQ(to_decimal(Scalar(999, 100), 2), "10");
}

TEST(ToDecimal, ExponentNotationOutsideRange) {
  EXPECT_EQ(to_decimal(Scalar(Integer("662607015"), Integer("1000000000000000000000000000000000000000000"))),
            "6.62607015e-34");
  EXPECT_EQ(to_decimal(Scalar(Integer("1000000000000000"))), "1e15");
  EXPECT_EQ(to_decimal(Scalar(1, 100000)), "0.00001");
  EXPECT_EQ(to_decimal(Scalar(1, 1000000)), "1e-6");
}

TEST(ToDisplay, DecimalOnlyForNonIntegers) {
  EXPECT_EQ(to_display(Scalar(3)), "3");
  EXPECT_EQ(to_display(Scalar(5, 18)), "5/18 (~0.277777777777778)");
}

TEST(Power, IntegerExponents) {
  EXPECT_EQ(power(Scalar(2, 3), Integer(3)), Scalar(8, 27));
  EXPECT_EQ(power(Scalar(2, 3), Integer(-2)), Scalar(9, 4));
  EXPECT_EQ(power(Scalar(5), Integer(0)), Scalar(1));
  EXPECT_EQ(power(Scalar(0), Integer(0)), Scalar(1));
  EXPECT_EQ(power(Scalar(0), Integer(4)), Scalar(0));
  EXPECT_THROW(power(Scalar(0), Integer(-1)), ZeroNotInvertible);
}

TEST(Power, UnitMagnitudeHandlesHugeExponents) {
  Integer huge("100000000000000000000001");
  EXPECT_EQ(power(Scalar(-1), huge), Scalar(-1));
  EXPECT_EQ(power(Scalar(1), -huge), Scalar(1));
  EXPECT_THROW(power(Scalar(2), huge), std::overflow_error);
}
