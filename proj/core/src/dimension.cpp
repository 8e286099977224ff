#include "qcalc/dimension.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {
namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

DimBasis::DimBasis(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw std::invalid_argument("generator names must be non-empty");
    if (!seen.insert(g).second) throw NameCollision(g);
  }
}

std::optional<std::size_t> DimBasis::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

BasisRef make_basis(std::vector<std::string> generators) {
  return std::make_shared<const DimBasis>(std::move(generators));
}

bool same_basis(const BasisRef& a, const BasisRef& b) {
  return a == b || (a && b && *a == *b);
}

Dimension::Dimension(BasisRef basis, std::vector<Integer> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents)) {
  if (!basis_) throw std::invalid_argument("dimension requires a basis");
  if (exponents_.size() != basis_->rank())
    throw BasisMismatch("exponent vector length does not match basis rank");
}

Dimension Dimension::identity(BasisRef basis) {
  std::size_t k = basis->rank();
  return Dimension(std::move(basis), std::vector<Integer>(k));
}

Dimension Dimension::generator(BasisRef basis, std::size_t index) {
  std::vector<Integer> e(basis->rank());
  e.at(index) = 1;
  return Dimension(std::move(basis), std::move(e));
}

bool Dimension::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const Integer& n) { return n == 0; });
}

Dimension Dimension::inverse() const {
  std::vector<Integer> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exponents_[i];
  return Dimension(basis_, std::move(e));
}

Dimension Dimension::pow(const Integer& n) const {
  std::vector<Integer> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] * n;
  return Dimension(basis_, std::move(e));
}

void require_same_basis(const Dimension& a, const Dimension& b) {
  if (!same_basis(a.basis_ref(), b.basis_ref())) throw BasisMismatch();
}

Dimension operator*(const Dimension& a, const Dimension& b) {
  require_same_basis(a, b);
  std::vector<Integer> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents_[i] + b.exponents_[i];
  return Dimension(a.basis_, std::move(e));
}

Dimension operator/(const Dimension& a, const Dimension& b) { return a * b.inverse(); }

bool operator==(const Dimension& a, const Dimension& b) {
  return same_basis(a.basis_, b.basis_) && a.exponents_ == b.exponents_;
}

bool DimensionLess::operator()(const Dimension& a, const Dimension& b) const {
  if (!same_basis(a.basis_ref(), b.basis_ref())) {
    return a.basis().generators() < b.basis().generators();
  }
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return false;
}

std::string format(const Dimension& d) {
  std::string out;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Integer& n = d.exponent(i);
    if (n == 0) continue;
    if (!out.empty()) out += ' ';
    out += d.basis().generator(i);
    if (n != 1) out += "^" + n.get_str();
  }
  return out.empty() ? "1" : out;
}

bool is_generator_name(std::string_view name) {
  if (name.empty()) return false;
  bool segment_start = true;
  for (char c : name) {
    if (segment_start) {
      if (!is_name_start(c)) return false;
      segment_start = false;
    } else if (c == '.') {
      segment_start = true;
    } else if (!is_name_char(c)) {
      return false;
    }
  }
  return !segment_start;
}

Dimension parse_dimension(std::string_view text, const BasisRef& basis, std::size_t line,
                          std::size_t column_offset) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> ParseError {
    return ParseError(line, column_offset + pos + 1, msg);
  };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_space();
  if (pos == text.size()) throw fail(pos, "empty dimension");

  std::vector<Integer> exps(basis->rank());
  {
    std::size_t p = pos;
    if (text[p] == '1') {
      ++p;
      std::size_t q = p;
      while (q < text.size() && (text[q] == ' ' || text[q] == '\t')) ++q;
      if (q == text.size()) return Dimension(basis, std::move(exps));
      throw fail(p, "unexpected input after '1'");
    }
  }

  while (pos < text.size()) {
    std::size_t start = pos;
    if (!is_name_start(text[pos])) throw fail(pos, "expected generator name");
    while (pos < text.size() && (is_name_char(text[pos]) || text[pos] == '.')) ++pos;
    std::string name(text.substr(start, pos - start));
    if (!is_generator_name(name)) throw fail(start, "malformed generator name '" + name + "'");
    auto idx = basis->index_of(name);
    if (!idx) throw UnknownGenerator(line, column_offset + start + 1, name);

    Integer n = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t num_start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      std::size_t digits_start = pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      if (pos == digits_start) throw fail(num_start, "expected integer exponent");
      std::string num(text.substr(num_start, pos - num_start));
      if (num.front() == '+') num.erase(0, 1);
      n = Integer(num, 10);
    }
    exps[*idx] += n;

    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t')
      throw fail(pos, std::string("unexpected character '") + text[pos] + "'");
    skip_space();
  }
  return Dimension(basis, std::move(exps));
}

std::string generator_label(const Dimension& d) {
  std::string out;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Integer& n = d.exponent(i);
    if (n == 0) continue;
    if (!out.empty()) out += '_';
    std::string g = d.basis().generator(i);
    std::replace(g.begin(), g.end(), '.', '_');
    out += g;
    if (n != 1) out += n < 0 ? "m" + Integer(-n).get_str() : n.get_str();
  }
  return out.empty() ? "one" : out;
}

}  // namespace qcalc
