#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/scalar.hpp"

namespace qcalc {

/// Ordered, named basis of a free Abelian group of dimensions. Rank 0 (the
/// trivial group) is allowed.
class DimBasis {
 public:
  explicit DimBasis(std::vector<std::string> generators);

  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::string& generator(std::size_t i) const { return generators_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const DimBasis&, const DimBasis&) = default;

 private:
  std::vector<std::string> generators_;
};

using BasisRef = std::shared_ptr<const DimBasis>;

BasisRef make_basis(std::vector<std::string> generators);

/// Bases are compared by value so that independently loaded systems agree.
bool same_basis(const BasisRef& a, const BasisRef& b);

/// Element of the group of dimensions: an integer exponent vector over a basis.
class Dimension {
 public:
  Dimension(BasisRef basis, std::vector<Integer> exponents);

  static Dimension identity(BasisRef basis);
  static Dimension generator(BasisRef basis, std::size_t index);

  const DimBasis& basis() const noexcept { return *basis_; }
  const BasisRef& basis_ref() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return exponents_.size(); }
  const std::vector<Integer>& exponents() const noexcept { return exponents_; }
  const Integer& exponent(std::size_t i) const { return exponents_.at(i); }

  bool is_identity() const;

  Dimension inverse() const;
  Dimension pow(const Integer& n) const;

  friend Dimension operator*(const Dimension& a, const Dimension& b);
  friend Dimension operator/(const Dimension& a, const Dimension& b);
  friend bool operator==(const Dimension& a, const Dimension& b);

 private:
  BasisRef basis_;
  std::vector<Integer> exponents_;
};

/// Strict weak order for use as a map key (basis names first, then exponents).
struct DimensionLess {
  bool operator()(const Dimension& a, const Dimension& b) const;
};

/// Throws BasisMismatch unless `a` and `b` share a basis.
void require_same_basis(const Dimension& a, const Dimension& b);

/// "L^2 T^-1 M"; the identity formats as "1".
std::string format(const Dimension& d);

/// Parses `dim := "1" | term (SP term)*`, `term := NAME ("^" SIGNED_INT)?`.
/// Repeated generators accumulate. Throws ParseError / UnknownGenerator;
/// columns are 1-based offsets into `text`, reported on `line`.
Dimension parse_dimension(std::string_view text, const BasisRef& basis, std::size_t line = 1,
                          std::size_t column_offset = 0);

bool is_generator_name(std::string_view name);

/// Identifier-safe rendering used when a dimension has to name a generator of
/// a derived space: "L" stays "L", "L^2 T^-1" becomes "L2_Tm1".
std::string generator_label(const Dimension& d);

}  // namespace qcalc
