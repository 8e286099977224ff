#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/quantity.hpp"
#include "qcalc/section.hpp"

namespace qcalc {

struct UnitDecl {
  std::string name;
  Quantity value;  ///< in the coherent section of the system
  bool base = false;

  friend bool operator==(const UnitDecl&, const UnitDecl&) = default;
};

struct ConstantDecl {
  std::string name;
  Quantity value;

  friend bool operator==(const ConstantDecl&, const ConstantDecl&) = default;
};

/// A parsed system-definition file: a group of dimensions, named units and
/// named constants. Base units fix the coherent section character == 1 on their
/// generators, so every value here is already a coherent numerical value.
///
/// File format, one declaration per line, `#` starts a comment:
///
///     system NAME
///     dimension NAME                  (declaration order is the basis order)
///     unit NAME : DIM_EXPR            (base unit, one per generator)
///     unit NAME : DIM_EXPR = QEXPR    (derived unit)
///     constant NAME = QEXPR
///
/// A unit declared without a value over a dimension that is not a single
/// generator is a coherent derived unit (value 1).
struct SystemDef {
  std::string name;
  QuantitySpace space;
  std::vector<UnitDecl> units;  ///< base units first, then declaration order
  std::vector<ConstantDecl> constants;

  Section coherent_section() const;
  std::optional<Quantity> lookup(std::string_view name) const;
  /// The base unit of generator `index`.
  const UnitDecl& base_unit(std::size_t index) const;
};

/// Throws ParseError, DuplicateName, UnknownGenerator, UnknownName,
/// NonIntegerExponent, or FiberMismatch when a derived unit's value disagrees
/// with its declared dimension.
SystemDef parse_system(std::string_view text);

/// Reads and parses a file. I/O failures are reported as ParseError at 0:0.
SystemDef load_system(const std::filesystem::path& path);

/// Evaluates an expression against the system's units and constants.
Quantity parse_quantity(std::string_view text, const SystemDef& system);

/// Writes `q` as "VALUE base_unit^n ..." using the system's base units.
std::string format_in_base_units(const Quantity& q, const SystemDef& system);

/// Serializes back to the file format; parse_system(format_system(s)) == s.
std::string format_system(const SystemDef& system);

bool operator==(const SystemDef& a, const SystemDef& b);

}  // namespace qcalc
