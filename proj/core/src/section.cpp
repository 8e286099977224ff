#include "qcalc/section.hpp"

#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {

Character::Character(BasisRef basis, std::vector<Scalar> generator_values)
    : basis_(std::move(basis)), values_(std::move(generator_values)) {
  if (values_.size() != basis_->rank())
    throw BasisMismatch("character needs one value per generator");
  for (auto& v : values_) {
    v.canonicalize();
    if (v == 0) throw ZeroValue("character values must be nonzero");
  }
}

Character Character::trivial(BasisRef basis) {
  std::size_t k = basis->rank();
  return Character(std::move(basis), std::vector<Scalar>(k, Scalar(1)));
}

Scalar Character::operator()(const Dimension& d) const {
  if (!same_basis(basis_, d.basis_ref())) throw BasisMismatch();
  Scalar r = 1;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (d.exponent(i) == 0) continue;
    r *= power(values_[i], d.exponent(i));
  }
  return r;
}

Character Character::inverse() const {
  std::vector<Scalar> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1 / values_[i];
  return Character(basis_, std::move(v));
}

Character operator*(const Character& a, const Character& b) {
  if (!same_basis(a.basis_, b.basis_)) throw BasisMismatch();
  std::vector<Scalar> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return Character(a.basis_, std::move(v));
}

bool operator==(const Character& a, const Character& b) {
  return same_basis(a.basis_, b.basis_) && a.values_ == b.values_;
}

Section::Section(Character coherent_part, OverrideTable overrides)
    : character_(std::move(coherent_part)) {
  for (auto& [d, v] : overrides) {
    v.canonicalize();
    if (!same_basis(character_.basis_ref(), d.basis_ref())) throw BasisMismatch();
    if (v == 0) throw ZeroValue("a system of units cannot select a fiber zero");
    if (v != character_(d)) overrides_.emplace(d, v);
  }
}

Scalar Section::unit_value(const Dimension& d) const {
  if (!same_basis(basis_ref(), d.basis_ref())) throw BasisMismatch();
  if (auto it = overrides_.find(d); it != overrides_.end()) return it->second;
  return character_(d);
}

Quantity Section::operator()(const Dimension& d) const { return Quantity(unit_value(d), d); }

Section Section::with_override(const Dimension& d, Scalar value) const {
  OverrideTable t = overrides_;
  t.insert_or_assign(d, std::move(value));
  return Section(character_, std::move(t));
}

Scalar numerical_value(const Quantity& q, const Section& section) {
  return q.value() / section.unit_value(q.dimension());
}

Quantity unit_of(const Quantity& q, const Section& section) { return section(q.dimension()); }

MaxwellForm maxwell_decompose(const Quantity& q, const Section& section) {
  return MaxwellForm{numerical_value(q, section), unit_of(q, section)};
}

Scalar convert(const Quantity& q, const Quantity& target_unit) {
  require_same_basis(q.dimension(), target_unit.dimension());
  if (!(q.dimension() == target_unit.dimension()))
    throw FiberMismatch(format(q.dimension()), format(target_unit.dimension()));
  if (target_unit.is_zero()) throw ZeroUnit();
  return q.value() / target_unit.value();
}

}  // namespace qcalc
