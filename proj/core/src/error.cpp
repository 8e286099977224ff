#include "qcalc/error.hpp"

#include <utility>

namespace qcalc {

BasisMismatch::BasisMismatch() : DimensionError("basis mismatch") {}

BasisMismatch::BasisMismatch(const std::string& detail)
    : DimensionError("basis mismatch: " + detail) {}

FiberMismatch::FiberMismatch(std::string lhs, std::string rhs)
    : DimensionError("fiber mismatch: " + lhs + " vs " + rhs),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

UnknownGenerator::UnknownGenerator(std::size_t line, std::size_t column, const std::string& name)
    : ParseError(line, column, "unknown generator '" + name + "'") {}

UnknownName::UnknownName(std::size_t line, std::size_t column, const std::string& name)
    : ParseError(line, column, "unknown name '" + name + "'") {}

DuplicateName::DuplicateName(std::size_t line, std::size_t column, const std::string& name)
    : ParseError(line, column, "duplicate name '" + name + "'") {}

NonIntegerExponent::NonIntegerExponent(std::size_t line, std::size_t column,
                                       const std::string& text)
    : ParseError(line, column, "exponent must be an integer, got '" + text + "'") {}

ZeroNotInvertible::ZeroNotInvertible() : AlgebraicError("zero quantity is not invertible") {}

ZeroUnit::ZeroUnit() : AlgebraicError("target unit is a zero quantity") {}

TorsionQuotient::TorsionQuotient(std::vector<mpz_class> factors)
    : AlgebraicError("quotient group has torsion, invariant factors " +
                     format_factor_list(factors)),
      factors_(std::move(factors)) {}

ZeroHomomorphism::ZeroHomomorphism()
    : AlgebraicError("operation requires a nonzero homomorphism") {}

NotCoherent::NotCoherent() : AlgebraicError("section is not coherent") {}

NameCollision::NameCollision(const std::string& name)
    : AlgebraicError("generator name collision on '" + name + "'") {}

std::string format_factor_list(const std::vector<mpz_class>& factors) {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += ", ";
    out += factors[i].get_str();
  }
  out += "]";
  return out;
}

}  // namespace qcalc
