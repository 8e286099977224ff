#pragma once

#include <string>

#include "qcalc/dimension.hpp"
#include "qcalc/scalar.hpp"

namespace qcalc {

class Quantity;

/// A space of quantities free of zero divisors, held in its standard model
/// F x D: the field is fixed to exact rationals, so a space is determined by
/// its group of dimensions. The name is metadata only.
class QuantitySpace {
 public:
  QuantitySpace(std::string name, BasisRef basis);

  const std::string& name() const noexcept { return name_; }
  const DimBasis& basis() const noexcept { return *basis_; }
  const BasisRef& basis_ref() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_->rank(); }

  Quantity one() const;
  Quantity zero(const Dimension& d) const;
  Quantity make(Scalar value, Dimension d) const;
  Dimension dimension(std::vector<Integer> exponents) const;
  Dimension identity_dimension() const;

  bool contains(const Quantity& q) const;

  /// Equality is equality of groups of dimensions.
  friend bool operator==(const QuantitySpace& a, const QuantitySpace& b);

 private:
  std::string name_;
  BasisRef basis_;
};

/// The pair (value, dimension). Each fiber has its own zero (0, A).
class Quantity {
 public:
  Quantity(Scalar value, Dimension dimension);

  static Quantity one(const BasisRef& basis);

  const Scalar& value() const noexcept { return value_; }
  const Dimension& dimension() const noexcept { return dimension_; }
  const BasisRef& basis_ref() const noexcept { return dimension_.basis_ref(); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Quantity& a, const Quantity& b);

 private:
  Scalar value_;
  Dimension dimension_;
};

/// Fiber addition; throws FiberMismatch when dimensions differ.
Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& q);
Quantity operator*(const Scalar& factor, const Quantity& q);
Quantity operator*(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, const Quantity& b);

/// Throws ZeroNotInvertible on a fiber zero.
Quantity inverse(const Quantity& q);
Quantity pow(const Quantity& q, const Integer& n);

/// "3/2 L T^-1"; dimension one prints the value alone.
std::string format(const Quantity& q);

}  // namespace qcalc
