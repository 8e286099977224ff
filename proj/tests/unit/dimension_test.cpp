#include <gtest/gtest.h>

#include "qcalc/dimension.hpp"
#include "qcalc/error.hpp"
#include "random.hpp"

using namespace qcalc;

namespace {

BasisRef lt() { return make_basis({"L", "T"}); }
BasisRef ltm() { return make_basis({"L", "T", "M"}); }

Dimension dim(const BasisRef& b, std::vector<long> e) {
  std::vector<Integer> v(e.begin(), e.end());
  return Dimension(b, std::move(v));
}

}  // namespace

TEST(DimBasis, RejectsDuplicatesAndEmptyNames) {
  EXPECT_THROW(DimBasis({"L", "L"}), NameCollision);
  EXPECT_THROW(DimBasis({""}), std::invalid_argument);
  EXPECT_EQ(DimBasis({}).rank(), 0u);
  EXPECT_EQ(*DimBasis({"L", "T"}).index_of("T"), 1u);
  EXPECT_FALSE(DimBasis({"L"}).index_of("T"));
}

TEST(Dimension, GroupLaws) {
  auto b = ltm();
  Dimension a = dim(b, {1, -1, 0});
  Dimension c = dim(b, {0, 2, 1});
  EXPECT_EQ(a * c, dim(b, {1, 1, 1}));
  EXPECT_EQ(a / a, Dimension::identity(b));
  EXPECT_EQ(a.pow(Integer(-3)), dim(b, {-3, 3, 0}));
  EXPECT_EQ(a.inverse().inverse(), a);
  EXPECT_TRUE(Dimension::identity(b).is_identity());
}

TEST(Dimension, MixingBasesThrows) {
  EXPECT_THROW(Dimension::generator(lt(), 0) * Dimension::generator(ltm(), 0), BasisMismatch);
  EXPECT_THROW(Dimension(lt(), {Integer(1)}), BasisMismatch);
}

TEST(Dimension, IndependentlyBuiltBasesAgree) {
  EXPECT_EQ(Dimension::generator(lt(), 1), Dimension::generator(lt(), 1));
}

TEST(Dimension, RandomGroupAxioms) {
  sample::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    auto b = g.basis(static_cast<std::size_t>(g.integer(0, 4)));
    Dimension x = g.dimension(b), y = g.dimension(b), z = g.dimension(b);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * Dimension::identity(b), x);
    EXPECT_TRUE((x * x.inverse()).is_identity());
  }
}

TEST(Format, ReadableForm) {
  auto b = ltm();
  EXPECT_EQ(format(dim(b, {2, -1, 1})), "L^2 T^-1 M");
  EXPECT_EQ(format(dim(b, {0, 0, 0})), "1");
  EXPECT_EQ(format(Dimension::identity(make_basis({}))), "1");
}

TEST(ParseDimension, Terms) {
  auto b = ltm();
  EXPECT_EQ(parse_dimension("L T^-1", b), dim(b, {1, -1, 0}));
  EXPECT_EQ(parse_dimension("L L T^-2 L^-1", b), dim(b, {1, -2, 0}));
  EXPECT_EQ(parse_dimension("  1 ", b), Dimension::identity(b));
  EXPECT_EQ(parse_dimension("M^+2", b), dim(b, {0, 0, 2}));
}

TEST(ParseDimension, Errors) {
  auto b = lt();
  EXPECT_THROW(parse_dimension("", b), ParseError);
  EXPECT_THROW(parse_dimension("L^", b), ParseError);
  EXPECT_THROW(parse_dimension("L^1.5", b), ParseError);
  try {
    parse_dimension("L X", b, 4, 10);
    FAIL();
  } catch (const UnknownGenerator& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(ParseDimension, RoundTripsFormat) {
  sample::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    auto b = g.basis(static_cast<std::size_t>(g.integer(0, 5)));
    Dimension d = g.dimension(b, 6);
    EXPECT_EQ(parse_dimension(format(d), b), d);
  }
}

TEST(GeneratorLabel, IdentifierSafe) {
  auto b = lt();
  EXPECT_EQ(generator_label(dim(b, {1, 0})), "L");
  EXPECT_EQ(generator_label(dim(b, {2, -1})), "L2_Tm1");
  EXPECT_EQ(generator_label(Dimension::identity(b)), "one");
  EXPECT_TRUE(is_generator_name("geom.L"));
  EXPECT_FALSE(is_generator_name("2L"));
  EXPECT_FALSE(is_generator_name("L."));
}
