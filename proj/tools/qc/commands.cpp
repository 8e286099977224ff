#include "qc/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>

#include "qcalc/constructions.hpp"
#include "qcalc/error.hpp"
#include "qcalc/homomorphism.hpp"
#include "qcalc/system_def.hpp"

namespace qc {
namespace {

using namespace qcalc;

// An error that already carries its user-facing text and exit code.
struct Failure {
  int code;
  std::string message;
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return kDimensionError;
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const AlgebraicError*>(&e)) return kAlgebraicError;
  if (dynamic_cast<const std::overflow_error*>(&e)) return kAlgebraicError;
  return kInternalError;
}

SystemDef load(const std::string& path) {
  try {
    return load_system(path);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw Failure{kParseError, e.message()};
    throw Failure{kParseError, path + ":" + e.what()};
  } catch (const Error& e) {
    throw Failure{exit_code_for(e), path + ": " + e.what()};
  }
}

Quantity evaluate(const std::string& text, const SystemDef& sys) {
  try {
    return parse_quantity(text, sys);
  } catch (const ParseError& e) {
    throw Failure{kParseError, "in \"" + text + "\": column " + std::to_string(e.column()) + ": " +
                                   e.message()};
  }
}

std::string value_and_dimension(const Quantity& q) {
  std::string out = to_display(q.value());
  if (!q.dimension().is_identity()) out += " " + format(q.dimension());
  return out;
}

void cmd_info(const SystemDef& sys, std::ostream& out) {
  out << "system " << sys.name << "\n";
  out << "rank " << sys.space.rank() << "\n";
  const auto& gens = sys.space.basis().generators();
  out << "generators";
  if (gens.empty()) out << " (none)";
  for (const auto& g : gens) out << " " << g;
  out << "\n";

  out << "units" << (sys.units.empty() ? " (none)" : "") << "\n";
  for (const auto& u : sys.units) {
    out << "  " << u.name << " : " << format(u.value.dimension());
    if (u.base)
      out << " (base)";
    else
      out << " = " << to_display(u.value.value());
    out << "\n";
  }
  out << "constants" << (sys.constants.empty() ? " (none)" : "") << "\n";
  for (const auto& c : sys.constants)
    out << "  " << c.name << " : " << format(c.value.dimension()) << " = "
        << to_display(c.value.value()) << "\n";
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> names;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty()) throw Failure{kParseError, "empty name in --kill list"};
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  return names;
}

// The reduced system: quotient generators, every unit and constant replaced
// by its canonical representative. A unit whose representative is exactly a
// quotient generator becomes that generator's base unit; generators without
// one get a synthesized unit.
SystemDef reduced_system(const SystemDef& sys, const QuotientSpace& quotient) {
  const QuantitySpace& space = quotient.space();
  SystemDef out{space.name(), space, {}, {}};

  std::vector<bool> has_base(space.rank(), false);
  std::vector<UnitDecl> units;
  for (const auto& u : sys.units) {
    Quantity r = quotient.reduce(u.value);
    bool base = false;
    if (r.value() == 1) {
      for (std::size_t j = 0; j < space.rank(); ++j)
        if (!has_base[j] && r.dimension() == Dimension::generator(space.basis_ref(), j)) {
          has_base[j] = base = true;
          break;
        }
    }
    units.push_back(UnitDecl{u.name, std::move(r), base});
  }
  for (std::size_t j = 0; j < space.rank(); ++j) {
    if (has_base[j]) continue;
    std::string name = space.basis().generator(j) + "_unit";
    while (sys.lookup(name)) name += "_";
    units.push_back(UnitDecl{name, Quantity(1, Dimension::generator(space.basis_ref(), j)), true});
  }
  out.units = std::move(units);
  for (const auto& c : sys.constants) out.constants.push_back({c.name, quotient.reduce(c.value)});
  return out;
}

int cmd_reduce(const SystemDef& sys, const std::vector<std::string>& kill,
               const std::string& out_path, std::ostream& out) {
  std::vector<Quantity> killed;
  for (const auto& name : kill) {
    auto q = sys.lookup(name);
    if (!q) throw Failure{kParseError, "unknown name '" + name + "' in --kill list"};
    killed.push_back(*q);
  }

  std::optional<QuotientSpace> quotient;
  try {
    Subsection sub = subsection_from_units(sys.space, killed);
    quotient.emplace(make_quotient(sys.space, sub, sys.name + "_natural"));
  } catch (const TorsionQuotient& e) {
    throw Failure{kAlgebraicError, "quotient group has torsion, invariant factors " +
                                       format_factor_list(e.factors())};
  } catch (const ConflictingSection& e) {
    throw Failure{kAlgebraicError, std::string("conflicting section: ") + e.what()};
  }

  const QuantitySpace& src = sys.space;
  out << "reduce " << sys.name << " -> " << quotient->space().name() << "\n";
  out << "rank " << src.rank() << " -> " << quotient->rank() << "\n";
  out << "generators\n";
  for (std::size_t i = 0; i < src.rank(); ++i) {
    Dimension g = Dimension::generator(src.basis_ref(), i);
    out << "  " << src.basis().generator(i) << " -> " << format(quotient->project(g)) << "\n";
  }
  out << "killed" << (kill.empty() ? " (none)" : "") << "\n";
  for (std::size_t i = 0; i < kill.size(); ++i)
    out << "  " << kill[i] << " -> " << format(quotient->reduce(killed[i])) << "\n";

  std::string text = format_system(reduced_system(sys, *quotient));
  if (out_path.empty()) {
    out << "\n" << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << text)) throw Failure{kParseError, "cannot write '" + out_path + "'"};
    out << "wrote " << out_path << "\n";
  }
  return kOk;
}

void cmd_iso(const SystemDef& a, const SystemDef& b, std::ostream& out) {
  ClassificationResult r = classify(a.space, b.space, a.coherent_section(), b.coherent_section());
  if (auto* no = std::get_if<NotIsomorphic>(&r)) {
    out << "not isomorphic: rank " << no->source_rank << " vs rank " << no->target_rank << "\n";
    return;
  }
  const auto& iso = std::get<Isomorphic>(r);
  out << "isomorphic: rank " << a.space.rank() << "\n";
  for (std::size_t i = 0; i < a.space.rank(); ++i) {
    Dimension g = Dimension::generator(a.space.basis_ref(), i);
    Quantity image = iso.witness(Quantity(1, g));
    out << "  " << a.space.basis().generator(i) << " -> " << format(image.dimension());
    if (image.value() != 1) out << " (scale " << to_display(image.value()) << ")";
    out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact quantity calculus: dimension checking, conversion, natural-unit reduction",
               "qc"};
  app.require_subcommand(1);

  std::string file, file2, expr, target, out_path;
  std::vector<std::string> kill;

  auto* info = app.add_subcommand("info", "Summarize a system file");
  info->add_option("FILE", file)->required();

  auto* check = app.add_subcommand("check", "Print the dimension of an expression");
  check->add_option("FILE", file)->required();
  check->add_option("EXPR", expr)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in coherent units");
  eval->add_option("FILE", file)->required();
  eval->add_option("EXPR", expr)->required();

  auto* convert = app.add_subcommand("convert", "Express a quantity as a multiple of a unit");
  convert->add_option("FILE", file)->required();
  convert->add_option("EXPR", expr)->required();
  convert->add_option("--to", target, "Target unit expression")->required();

  auto* reduce = app.add_subcommand("reduce", "Quotient a system by constants set to 1");
  reduce->add_option("FILE", file)->required();
  reduce->add_option("--kill", kill, "Constants to make dimensionless (comma separated)")
      ->required()
      ->expected(0, -1);
  reduce->add_option("--out", out_path, "Write the reduced system here");

  auto* iso = app.add_subcommand("iso", "Decide whether two systems are isomorphic");
  iso->add_option("FILE", file)->required();
  iso->add_option("FILE2", file2)->required();

  auto report = [&](int code, const std::string& message) {
    err << (color ? "\033[31merror:\033[0m " : "error: ") << message << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help, ignored;
      app.exit(e, help, ignored);
      out << help.str();
      return kOk;
    }
    return report(kParseError, e.what());
  }

  try {
    if (*info) {
      cmd_info(load(file), out);
    } else if (*check) {
      SystemDef sys = load(file);
      out << format(evaluate(expr, sys).dimension()) << "\n";
    } else if (*eval) {
      SystemDef sys = load(file);
      out << value_and_dimension(evaluate(expr, sys)) << "\n";
    } else if (*convert) {
      SystemDef sys = load(file);
      Quantity q = evaluate(expr, sys);
      Quantity unit = evaluate(target, sys);
      out << to_display(qcalc::convert(q, unit)) << "\n";
    } else if (*reduce) {
      SystemDef sys = load(file);
      return cmd_reduce(sys, split_names(kill), out_path, out);
    } else if (*iso) {
      SystemDef a = load(file);
      SystemDef b = load(file2);
      cmd_iso(a, b, out);
    }
    return kOk;
  } catch (const Failure& f) {
    return report(f.code, f.message);
  } catch (const FiberMismatch& e) {
    return report(kDimensionError, e.what());
  } catch (const std::exception& e) {
    return report(exit_code_for(e), e.what());
  }
}

}  // namespace qc
