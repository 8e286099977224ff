#include "qcalc/quantity_expr.hpp"

#include <cctype>
#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::unique_ptr<ExprNode> make_node(ExprNode::Kind kind, std::size_t column) {
  auto n = std::make_unique<ExprNode>();
  n->kind = kind;
  n->column = column;
  return n;
}

std::unique_ptr<ExprNode> make_binary(ExprNode::Kind kind, std::unique_ptr<ExprNode> lhs,
                                      std::unique_ptr<ExprNode> rhs, std::size_t column) {
  auto n = make_node(kind, column);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), offset_(offset) {}

  std::unique_ptr<ExprNode> parse() {
    skip_space();
    if (at_end()) throw error("empty expression");
    auto e = expr();
    skip_space();
    if (!at_end()) throw error(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return offset_ + pos_ + 1; }
  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  ParseError error(const std::string& msg) const { return ParseError(line_, column(), msg); }

  bool starts_factor() const {
    char c = peek();
    return is_name_start(c) || c == '(' || c == '/';
  }

  std::unique_ptr<ExprNode> expr() {
    std::unique_ptr<ExprNode> acc;
    skip_space();
    if (peek() == '-') {
      std::size_t col = column();
      ++pos_;
      acc = make_node(ExprNode::Kind::Negate, col);
      acc->lhs = qexpr();
    } else {
      acc = qexpr();
    }
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      std::size_t col = column();
      ++pos_;
      auto rhs = qexpr();
      acc = make_binary(c == '+' ? ExprNode::Kind::Sum : ExprNode::Kind::Difference,
                        std::move(acc), std::move(rhs), col);
    }
    return acc;
  }

  std::unique_ptr<ExprNode> qexpr() {
    skip_space();
    std::unique_ptr<ExprNode> acc;
    if (is_digit(peek())) {
      acc = number();
    } else if (starts_factor()) {
      acc = factor();
    } else if (at_end()) {
      throw error("unexpected end of expression");
    } else {
      throw error(std::string("unexpected '") + peek() + "'");
    }
    for (;;) {
      skip_space();
      if (is_digit(peek())) throw error("a number may only lead a product");
      if (!starts_factor()) break;
      std::size_t col = column();
      auto rhs = factor();
      acc = make_binary(ExprNode::Kind::Product, std::move(acc), std::move(rhs), col);
    }
    return acc;
  }

  std::unique_ptr<ExprNode> factor() {
    skip_space();
    std::size_t col = column();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      if (!starts_factor()) throw error("expected a name or '(' after '/'");
      auto inner = factor();
      auto one = make_node(ExprNode::Kind::Number, col);
      one->number = 1;
      return make_binary(ExprNode::Kind::Quotient, std::move(one), std::move(inner), col);
    }
    auto base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      auto p = make_node(ExprNode::Kind::Power, col);
      p->exponent = exponent();
      p->lhs = std::move(base);
      return p;
    }
    return base;
  }

  std::unique_ptr<ExprNode> primary() {
    std::size_t col = column();
    if (peek() == '(') {
      ++pos_;
      auto inner = expr();
      skip_space();
      if (peek() != ')') throw error("expected ')'");
      ++pos_;
      return inner;
    }
    if (!is_name_start(peek())) throw error("expected a name");
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    auto n = make_node(ExprNode::Kind::Name, col);
    n->name = std::string(text_.substr(start, pos_ - start));
    return n;
  }

  // Reads a signed integer, rejecting rationals and decimals explicitly.
  Integer exponent() {
    skip_space();
    std::size_t col = column();
    bool parens = false;
    if (peek() == '(') {
      parens = true;
      ++pos_;
      skip_space();
    }
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == digits) throw ParseError(line_, col, "expected integer exponent");
    if (peek() == '.' || peek() == '/') {
      ++pos_;
      while (!at_end() && (is_digit(peek()) || peek() == '-')) ++pos_;
      throw NonIntegerExponent(line_, col, std::string(text_.substr(start, pos_ - start)));
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    if (parens) {
      skip_space();
      if (peek() != ')') throw error("expected ')'");
      ++pos_;
    }
    return Integer(s, 10);
  }

  std::unique_ptr<ExprNode> number() {
    std::size_t col = column();
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (peek() == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    } else if (peek() == '/' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    auto value = parse_scalar(text_.substr(start, pos_ - start));
    if (!value) throw ParseError(line_, col, "malformed number");
    auto n = make_node(ExprNode::Kind::Number, col);
    n->number = std::move(*value);
    return n;
  }
};

Quantity eval(const ExprNode& n, const QuantitySpace& space, const QuantityExpr::Resolver& resolve,
              std::size_t line) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Number:
      return Quantity(n.number, space.identity_dimension());
    case K::Name: {
      auto q = resolve(n.name);
      if (!q) throw UnknownName(line, n.column, n.name);
      return *q;
    }
    case K::Product:
      return eval(*n.lhs, space, resolve, line) * eval(*n.rhs, space, resolve, line);
    case K::Quotient:
      return eval(*n.lhs, space, resolve, line) / eval(*n.rhs, space, resolve, line);
    case K::Power:
      return pow(eval(*n.lhs, space, resolve, line), n.exponent);
    case K::Sum:
      return eval(*n.lhs, space, resolve, line) + eval(*n.rhs, space, resolve, line);
    case K::Difference:
      return eval(*n.lhs, space, resolve, line) - eval(*n.rhs, space, resolve, line);
    case K::Negate:
      return -eval(*n.lhs, space, resolve, line);
  }
  throw InternalConsistency("unhandled expression node");
}

}  // namespace

QuantityExpr parse_expression(std::string_view text, std::size_t line, std::size_t column_offset) {
  return QuantityExpr(Parser(text, line, column_offset).parse(), line);
}

Quantity QuantityExpr::evaluate(const QuantitySpace& space, const Resolver& resolve) const {
  return eval(*root_, space, resolve, line_);
}

}  // namespace qcalc
