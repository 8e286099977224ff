#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qcalc/quantity.hpp"

namespace qcalc {

/// Syntax tree of a quantity expression.
///
///   expr    := ("-")? qexpr (("+" | "-") qexpr)*
///   qexpr   := NUMBER factor* | factor+          (juxtaposition = product)
///   factor  := primary ("^" SIGNED_INT)? | "/" factor
///   primary := NAME | "(" expr ")"
///   NUMBER  := INT | INT "." DIGITS | INT "/" POSINT
struct ExprNode {
  enum class Kind { Number, Name, Product, Quotient, Power, Sum, Difference, Negate };

  Kind kind;
  std::size_t column = 0;  ///< 1-based, within the source line
  Scalar number;           ///< Number
  std::string name;        ///< Name
  Integer exponent;        ///< Power
  std::unique_ptr<ExprNode> lhs;
  std::unique_ptr<ExprNode> rhs;
};

class QuantityExpr {
 public:
  explicit QuantityExpr(std::unique_ptr<ExprNode> root, std::size_t line)
      : root_(std::move(root)), line_(line) {}

  const ExprNode& root() const { return *root_; }
  std::size_t line() const noexcept { return line_; }

  /// Looks up a unit or constant; nullopt means the name is unknown.
  using Resolver = std::function<std::optional<Quantity>(std::string_view)>;

  /// Evaluates over `space`. Throws UnknownName, FiberMismatch,
  /// ZeroNotInvertible.
  Quantity evaluate(const QuantitySpace& space, const Resolver& resolve) const;

 private:
  std::unique_ptr<ExprNode> root_;
  std::size_t line_;
};

/// Throws ParseError or NonIntegerExponent. Columns are reported as
/// `column_offset + position + 1`.
QuantityExpr parse_expression(std::string_view text, std::size_t line = 1,
                              std::size_t column_offset = 0);

}  // namespace qcalc
