#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcalc {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Dimensional errors: operands live in different groups or different fibers.

class DimensionError : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public DimensionError {
 public:
  BasisMismatch();
  explicit BasisMismatch(const std::string& detail);
};

/// Raised by fiber-wise operations (addition, conversion) on quantities whose
/// dimensions differ. Both dimensions are kept in printable form.
class FiberMismatch : public DimensionError {
 public:
  FiberMismatch(std::string lhs, std::string rhs);

  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

class SpaceMismatch : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

// ---------------------------------------------------------------------------
// Syntax errors.

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class UnknownGenerator : public ParseError {
 public:
  UnknownGenerator(std::size_t line, std::size_t column, const std::string& name);
};

class UnknownName : public ParseError {
 public:
  UnknownName(std::size_t line, std::size_t column, const std::string& name);
};

class DuplicateName : public ParseError {
 public:
  DuplicateName(std::size_t line, std::size_t column, const std::string& name);
};

class NonIntegerExponent : public ParseError {
 public:
  NonIntegerExponent(std::size_t line, std::size_t column, const std::string& text);
};

// ---------------------------------------------------------------------------
// Algebraic rejections: the inputs are well formed but the requested
// construction does not exist.

class AlgebraicError : public Error {
 public:
  using Error::Error;
};

class ZeroNotInvertible : public AlgebraicError {
 public:
  ZeroNotInvertible();
};

class ZeroUnit : public AlgebraicError {
 public:
  ZeroUnit();
};

class ZeroValue : public AlgebraicError {
 public:
  using AlgebraicError::AlgebraicError;
};

/// The quotient group has torsion; carries the invariant factors >= 2.
class TorsionQuotient : public AlgebraicError {
 public:
  explicit TorsionQuotient(std::vector<mpz_class> factors);

  const std::vector<mpz_class>& factors() const noexcept { return factors_; }

 private:
  std::vector<mpz_class> factors_;
};

class ConflictingSection : public AlgebraicError {
 public:
  using AlgebraicError::AlgebraicError;
};

class ZeroHomomorphism : public AlgebraicError {
 public:
  ZeroHomomorphism();
};

class NotRepresentable : public AlgebraicError {
 public:
  using AlgebraicError::AlgebraicError;
};

class NotCoherent : public AlgebraicError {
 public:
  NotCoherent();
};

class NameCollision : public AlgebraicError {
 public:
  explicit NameCollision(const std::string& name);
};

/// A post-condition that the algebra guarantees did not hold.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// "[2, 2]"
std::string format_factor_list(const std::vector<mpz_class>& factors);

}  // namespace qcalc
