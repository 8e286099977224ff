#include "qcalc/system_def.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "qcalc/error.hpp"
#include "qcalc/quantity_expr.hpp"

namespace qcalc {
namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s.front())) == 0) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// A cursor over one line that keeps 1-based columns.
struct LineCursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  std::size_t column() const { return pos + 1; }
  ParseError error(const std::string& msg) const { return ParseError(line, column(), msg); }

  std::string word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ':' &&
           text[pos] != '=')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::string identifier(const char* what) {
    skip_space();
    std::size_t col = column();
    std::string w = word();
    if (w.empty()) throw ParseError(line, col, std::string("expected ") + what);
    if (!is_identifier(w)) throw ParseError(line, col, std::string("invalid ") + what + " '" + w + "'");
    return w;
  }

  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw error(std::string("expected '") + c + "'");
    ++pos;
  }
};

class SystemBuilder {
 public:
  void feed(std::string_view raw, std::size_t line_no) {
    std::string_view line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineCursor cur{line, line_no};
    if (cur.at_end()) return;
    std::size_t kw_col = cur.column();
    std::string keyword = cur.word();
    if (keyword == "system") {
      if (have_name_) throw ParseError(line_no, kw_col, "duplicate system declaration");
      name_ = cur.identifier("system name");
      have_name_ = true;
      if (!cur.at_end()) throw cur.error("unexpected input after system name");
    } else if (keyword == "dimension") {
      if (basis_) throw ParseError(line_no, kw_col, "dimension declared after units or constants");
      std::size_t col = (cur.skip_space(), cur.column());
      std::string g = cur.identifier("dimension name");
      if (std::find(generators_.begin(), generators_.end(), g) != generators_.end())
        throw DuplicateName(line_no, col, g);
      generators_.push_back(g);
      generator_lines_.push_back(line_no);
      if (!cur.at_end()) throw cur.error("unexpected input after dimension name");
    } else if (keyword == "unit") {
      unit(cur);
    } else if (keyword == "constant") {
      constant(cur);
    } else {
      throw ParseError(line_no, kw_col, "unknown declaration '" + keyword + "'");
    }
  }

  SystemDef finish() {
    freeze();
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (!base_of_.count(i))
        throw ParseError(generator_lines_[i], 1, "dimension '" + generators_[i] + "' has no base unit");
    std::stable_partition(units_.begin(), units_.end(), [](const UnitDecl& u) { return u.base; });
    return SystemDef{have_name_ ? name_ : std::string("unnamed"), *space_, std::move(units_),
                     std::move(constants_)};
  }

 private:
  std::string name_;
  bool have_name_ = false;
  std::vector<std::string> generators_;
  std::vector<std::size_t> generator_lines_;
  BasisRef basis_;
  std::optional<QuantitySpace> space_;
  std::vector<UnitDecl> units_;
  std::vector<ConstantDecl> constants_;
  std::map<std::size_t, std::size_t> base_of_;  // generator -> unit index

  void freeze() {
    if (basis_) return;
    basis_ = make_basis(generators_);
    space_.emplace(have_name_ ? name_ : std::string("unnamed"), basis_);
  }

  bool name_taken(const std::string& n) const {
    return std::any_of(units_.begin(), units_.end(), [&](const UnitDecl& u) { return u.name == n; }) ||
           std::any_of(constants_.begin(), constants_.end(),
                       [&](const ConstantDecl& c) { return c.name == n; });
  }

  std::optional<Quantity> resolve(std::string_view n) const {
    for (const auto& u : units_)
      if (u.name == n) return u.value;
    for (const auto& c : constants_)
      if (c.name == n) return c.value;
    return std::nullopt;
  }

  Quantity evaluate(LineCursor& cur) {
    cur.skip_space();
    std::size_t offset = cur.pos;
    std::string_view rest = cur.text.substr(offset);
    QuantityExpr e = parse_expression(rest, cur.line, offset);
    cur.pos = cur.text.size();
    return e.evaluate(*space_, [this](std::string_view n) { return resolve(n); });
  }

  void unit(LineCursor& cur) {
    freeze();
    cur.skip_space();
    std::size_t name_col = cur.column();
    std::string name = cur.identifier("unit name");
    if (name_taken(name)) throw DuplicateName(cur.line, name_col, name);
    cur.expect(':');

    std::size_t dim_start = cur.pos;
    std::size_t eq = cur.text.find('=', dim_start);
    std::size_t dim_end = eq == std::string_view::npos ? cur.text.size() : eq;
    Dimension dim = parse_dimension(cur.text.substr(dim_start, dim_end - dim_start), basis_, cur.line,
                                    dim_start);
    cur.pos = dim_end;

    if (eq == std::string_view::npos) {
      std::optional<std::size_t> gen;
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < dim.rank(); ++i)
        if (dim.exponent(i) != 0) {
          ++nonzero;
          gen = i;
        }
      bool base = nonzero == 1 && dim.exponent(*gen) == 1;
      if (base) {
        if (base_of_.count(*gen))
          throw ParseError(cur.line, name_col,
                           "second base unit '" + name + "' for dimension '" + generators_[*gen] + "'");
        base_of_[*gen] = units_.size();
      }
      units_.push_back(UnitDecl{name, Quantity(1, dim), base});
      return;
    }

    cur.pos = eq + 1;
    std::size_t value_col = (cur.skip_space(), cur.column());
    if (cur.at_end()) throw ParseError(cur.line, value_col, "expected a value after '='");
    Quantity value = evaluate(cur);
    if (!(value.dimension() == dim)) throw FiberMismatch(format(dim), format(value.dimension()));
    if (value.is_zero()) throw ZeroValue("unit '" + name + "' is a zero quantity");
    units_.push_back(UnitDecl{name, std::move(value), false});
  }

  void constant(LineCursor& cur) {
    freeze();
    cur.skip_space();
    std::size_t name_col = cur.column();
    std::string name = cur.identifier("constant name");
    if (name_taken(name)) throw DuplicateName(cur.line, name_col, name);
    cur.expect('=');
    if (cur.at_end()) throw cur.error("expected a value after '='");
    Quantity value = evaluate(cur);
    constants_.push_back(ConstantDecl{name, std::move(value)});
  }
};

}  // namespace

Section SystemDef::coherent_section() const {
  return Section(Character::trivial(space.basis_ref()));
}

std::optional<Quantity> SystemDef::lookup(std::string_view n) const {
  for (const auto& u : units)
    if (u.name == n) return u.value;
  for (const auto& c : constants)
    if (c.name == n) return c.value;
  return std::nullopt;
}

const UnitDecl& SystemDef::base_unit(std::size_t index) const {
  for (const auto& u : units) {
    if (!u.base) continue;
    if (u.value.dimension().exponent(index) == 1) return u;
  }
  throw InternalConsistency("missing base unit for generator " + std::to_string(index));
}

SystemDef parse_system(std::string_view text) {
  SystemBuilder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    b.feed(text.substr(start, end - start), line_no);
    start = end + 1;
  }
  return b.finish();
}

SystemDef load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

Quantity parse_quantity(std::string_view text, const SystemDef& system) {
  QuantityExpr e = parse_expression(text);
  return e.evaluate(system.space, [&](std::string_view n) { return system.lookup(n); });
}

std::string format_in_base_units(const Quantity& q, const SystemDef& system) {
  std::string out = to_string(q.value());
  const Dimension& d = q.dimension();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Integer& n = d.exponent(i);
    if (n == 0) continue;
    out += " " + system.base_unit(i).name;
    if (n != 1) out += "^" + n.get_str();
  }
  return out;
}

std::string format_system(const SystemDef& system) {
  std::string out = "system " + system.name + "\n";
  for (const auto& g : system.space.basis().generators()) out += "dimension " + g + "\n";
  // Base units go first so derived values can refer to them.
  std::vector<const UnitDecl*> units;
  for (const auto& u : system.units) units.push_back(&u);
  std::stable_partition(units.begin(), units.end(), [](const UnitDecl* u) { return u->base; });
  for (const UnitDecl* p : units) {
    const UnitDecl& u = *p;
    out += "unit " + u.name + " : " + format(u.value.dimension());
    if (!u.base) out += " = " + format_in_base_units(u.value, system);
    out += "\n";
  }
  for (const auto& c : system.constants)
    out += "constant " + c.name + " = " + format_in_base_units(c.value, system) + "\n";
  return out;
}

bool operator==(const SystemDef& a, const SystemDef& b) {
  return a.name == b.name && a.space == b.space && a.units == b.units && a.constants == b.constants;
}

}  // namespace qcalc
