#pragma once

#include <map>
#include <vector>

#include "qcalc/quantity.hpp"

namespace qcalc {

/// Group homomorphism D -> F*, fixed by its (nonzero) values on the basis
/// generators and extended multiplicatively.
class Character {
 public:
  /// Throws ZeroValue if any generator value is zero.
  Character(BasisRef basis, std::vector<Scalar> generator_values);

  /// The character identically 1.
  static Character trivial(BasisRef basis);

  const BasisRef& basis_ref() const noexcept { return basis_; }
  const std::vector<Scalar>& generator_values() const noexcept { return values_; }

  Scalar operator()(const Dimension& d) const;

  Character inverse() const;
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b);

 private:
  BasisRef basis_;
  std::vector<Scalar> values_;
};

using OverrideTable = std::map<Dimension, Scalar, DimensionLess>;

/// A nonzero system of units: section(A) = (character(A), A) unless a finite
/// override table replaces the value on particular fibers.
///
/// Overrides equal to the character value are dropped on construction, so a
/// section is coherent exactly when its override table is empty: a single
/// deviating fiber A breaks section(A) section(B) = section(AB) for every B with
/// B and AB outside the (finite) table.
class Section {
 public:
  explicit Section(Character coherent_part, OverrideTable overrides = {});

  static Section coherent(Character character) { return Section(std::move(character)); }

  const BasisRef& basis_ref() const noexcept { return character_.basis_ref(); }
  const Character& character() const noexcept { return character_; }
  const OverrideTable& overrides() const noexcept { return overrides_; }
  bool is_coherent() const noexcept { return overrides_.empty(); }

  /// Value of the unit on the fiber `d`.
  Scalar unit_value(const Dimension& d) const;
  /// section(d); never a zero.
  Quantity operator()(const Dimension& d) const;

  Section with_override(const Dimension& d, Scalar value) const;

 private:
  Character character_;
  OverrideTable overrides_;
};

/// numerical_value(q) = q * section(dim q)^-1, read as a scalar.
Scalar numerical_value(const Quantity& q, const Section& section);

/// [q] = section(dim q).
Quantity unit_of(const Quantity& q, const Section& section);

struct MaxwellForm {
  Scalar number;  ///< {q}
  Quantity unit;  ///< [q]
};

/// q == number * unit, exactly.
MaxwellForm maxwell_decompose(const Quantity& q, const Section& section);

/// factor with q == factor * target_unit. Throws FiberMismatch or ZeroUnit.
Scalar convert(const Quantity& q, const Quantity& target_unit);

}  // namespace qcalc
