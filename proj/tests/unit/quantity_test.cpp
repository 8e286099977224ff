#include <gtest/gtest.h>

#include "qcalc/error.hpp"
#include "qcalc/quantity.hpp"
#include "random.hpp"

using namespace qcalc;

namespace {

QuantitySpace kinematics() { return QuantitySpace("kinematics", make_basis({"L", "T"})); }

}  // namespace

TEST(Quantity, FiberAddition) {
  auto q = kinematics();
  Dimension l = q.dimension({Integer(1), Integer(0)});
  EXPECT_EQ(q.make(2, l) + q.make(Scalar(1, 2), l), q.make(Scalar(5, 2), l));
  EXPECT_EQ(q.make(2, l) - q.make(2, l), q.zero(l));
}

TEST(Quantity, AdditionAcrossFibersReportsBothDimensions) {
  auto q = kinematics();
  try {
    (void)(q.make(3, q.dimension({Integer(1), Integer(0)})) + q.make(2, q.dimension({Integer(0), Integer(1)})));
    FAIL();
  } catch (const FiberMismatch& e) {
    EXPECT_EQ(e.lhs(), "L");
    EXPECT_EQ(e.rhs(), "T");
    EXPECT_STREQ(e.what(), "fiber mismatch: L vs T");
  }
}

TEST(Quantity, ProductsAndInverses) {
  auto q = kinematics();
  Quantity v = q.make(3, q.dimension({Integer(1), Integer(-1)}));
  Quantity t = q.make(4, q.dimension({Integer(0), Integer(1)}));
  EXPECT_EQ(v * t, q.make(12, q.dimension({Integer(1), Integer(0)})));
  EXPECT_EQ(v * inverse(v), q.one());
  EXPECT_EQ(pow(v, Integer(-2)), q.make(Scalar(1, 9), q.dimension({Integer(-2), Integer(2)})));
  EXPECT_THROW(inverse(q.zero(q.identity_dimension())), ZeroNotInvertible);
  EXPECT_THROW(v / q.zero(q.identity_dimension()), ZeroNotInvertible);
}

TEST(Quantity, ZerosAreFiberwise) {
  auto q = kinematics();
  Quantity z = q.zero(q.dimension({Integer(1), Integer(0)}));
  EXPECT_NE(z, q.zero(q.identity_dimension()));
  EXPECT_TRUE((Scalar(0) * q.one()).is_zero());
}

TEST(Quantity, Format) {
  auto q = kinematics();
  EXPECT_EQ(format(q.make(Scalar(3, 2), q.dimension({Integer(1), Integer(-1)}))), "3/2 L T^-1");
  EXPECT_EQ(format(q.make(7, q.identity_dimension())), "7");
}

TEST(Quantity, RandomRingLaws) {
  sample::Gen g(41);
  for (int i = 0; i < 500; ++i) {
    auto b = g.basis(static_cast<std::size_t>(g.integer(0, 4)));
    Quantity x = g.quantity(b), y = g.quantity(b), z = g.quantity(b);
    Scalar a = g.scalar();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * Quantity::one(b), x);
    Quantity w(g.scalar(), y.dimension());
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(a * (x * y), (a * x) * y);
    EXPECT_EQ((x * y).dimension(), x.dimension() * y.dimension());
  }
}

TEST(QuantitySpace, MembershipByBasis) {
  auto q = kinematics();
  EXPECT_TRUE(q.contains(q.one()));
  EXPECT_FALSE(q.contains(Quantity::one(make_basis({"L"}))));
  EXPECT_EQ(q, QuantitySpace("other", make_basis({"L", "T"})));
}
