#include "qcalc/quantity.hpp"

#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {

QuantitySpace::QuantitySpace(std::string name, BasisRef basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("quantity space requires a basis");
}

Quantity QuantitySpace::one() const { return Quantity::one(basis_); }

Quantity QuantitySpace::zero(const Dimension& d) const { return make(0, d); }

Quantity QuantitySpace::make(Scalar value, Dimension d) const {
  if (!same_basis(basis_, d.basis_ref())) throw BasisMismatch();
  return Quantity(std::move(value), std::move(d));
}

Dimension QuantitySpace::dimension(std::vector<Integer> exponents) const {
  return Dimension(basis_, std::move(exponents));
}

Dimension QuantitySpace::identity_dimension() const { return Dimension::identity(basis_); }

bool QuantitySpace::contains(const Quantity& q) const { return same_basis(basis_, q.basis_ref()); }

bool operator==(const QuantitySpace& a, const QuantitySpace& b) {
  return same_basis(a.basis_, b.basis_);
}

Quantity::Quantity(Scalar value, Dimension dimension)
    : value_(std::move(value)), dimension_(std::move(dimension)) {
  value_.canonicalize();  // mpq_class(n, d) does not reduce by itself
}

Quantity Quantity::one(const BasisRef& basis) { return Quantity(1, Dimension::identity(basis)); }

bool operator==(const Quantity& a, const Quantity& b) {
  return a.value_ == b.value_ && a.dimension_ == b.dimension_;
}

Quantity operator+(const Quantity& a, const Quantity& b) {
  require_same_basis(a.dimension(), b.dimension());
  if (!(a.dimension() == b.dimension()))
    throw FiberMismatch(format(a.dimension()), format(b.dimension()));
  return Quantity(a.value() + b.value(), a.dimension());
}

Quantity operator-(const Quantity& q) { return Quantity(-q.value(), q.dimension()); }

Quantity operator-(const Quantity& a, const Quantity& b) { return a + (-b); }

Quantity operator*(const Scalar& factor, const Quantity& q) {
  return Quantity(factor * q.value(), q.dimension());
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  return Quantity(a.value() * b.value(), a.dimension() * b.dimension());
}

Quantity inverse(const Quantity& q) {
  if (q.is_zero()) throw ZeroNotInvertible();
  return Quantity(1 / q.value(), q.dimension().inverse());
}

Quantity operator/(const Quantity& a, const Quantity& b) { return a * inverse(b); }

Quantity pow(const Quantity& q, const Integer& n) {
  return Quantity(power(q.value(), n), q.dimension().pow(n));
}

std::string format(const Quantity& q) {
  std::string out = to_string(q.value());
  if (!q.dimension().is_identity()) out += " " + format(q.dimension());
  return out;
}

}  // namespace qcalc
