#include <gtest/gtest.h>

#include "qcalc/error.hpp"
#include "qcalc/system_def.hpp"

using namespace qcalc;

namespace {

const char* kKinematics = R"(# comment
system kinematics
dimension L
dimension T
unit m : L
unit s : T   # trailing comment
unit km : L = 1000 m
unit h : T = 3600 s
constant c = 299792458 m s^-1
)";

std::string path(const char* name) { return std::string(QCALC_SYSTEMS_DIR) + "/" + name; }

}  // namespace

TEST(ParseSystem, Kinematics) {
  SystemDef sys = parse_system(kKinematics);
  EXPECT_EQ(sys.name, "kinematics");
  EXPECT_EQ(sys.space.rank(), 2u);
  auto c = sys.lookup("c");
  ASSERT_TRUE(c);
  EXPECT_EQ(format(c->dimension()), "L T^-1");
  EXPECT_EQ(c->value(), 299792458);
  EXPECT_EQ(sys.base_unit(1).name, "s");
  EXPECT_TRUE(sys.coherent_section().is_coherent());
}

TEST(ParseSystem, EmptyDimensionList) {
  SystemDef sys = parse_system("system nothing\nconstant two = 2\n");
  EXPECT_EQ(sys.space.rank(), 0u);
  EXPECT_EQ(sys.lookup("two")->value(), 2);
}

TEST(ParseSystem, CoherentDerivedUnits) {
  SystemDef sys = parse_system("system s\ndimension L\ndimension T\nunit m : L\nunit s : T\nunit v : L T^-1\n");
  EXPECT_FALSE(sys.units[2].base);
  EXPECT_EQ(sys.lookup("v")->value(), 1);
}

TEST(ParseSystem, Errors) {
  EXPECT_THROW(parse_system("dimension L\nunit m : L\nunit m : L = 2 m\n"), DuplicateName);
  EXPECT_THROW(parse_system("dimension L\ndimension L\nunit m : L\n"), DuplicateName);
  EXPECT_THROW(parse_system("dimension L\nunit m : X\n"), UnknownGenerator);
  EXPECT_THROW(parse_system("dimension L\n"), ParseError);  // no base unit
  EXPECT_THROW(parse_system("dimension L\nunit m : L\nunit ft : L\n"), ParseError);
  EXPECT_THROW(parse_system("dimension L\nunit m : L\ndimension T\n"), ParseError);
  EXPECT_THROW(parse_system("dimension L\nunit m : L\nunit a : L^2 = 3 m\n"), FiberMismatch);
  EXPECT_THROW(parse_system("dimension L\nunit m : L\nconstant k = 2 m^(1/2)\n"),
               NonIntegerExponent);
  EXPECT_THROW(parse_system("frobnicate\n"), ParseError);
  EXPECT_THROW(parse_system("dimension L\nunit m : L\nunit z : L = 0 m\n"), ZeroValue);
}

TEST(ParseSystem, ErrorPositions) {
  try {
    parse_system("system k\ndimension L\nunit m : L\nconstant c = 3 m furlong\n");
    FAIL();
  } catch (const UnknownName& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 18u);
  }
}

TEST(ParseQuantity, AgainstSystem) {
  SystemDef sys = parse_system(kKinematics);
  EXPECT_EQ(parse_quantity("1 km h^-1", sys).value(), Scalar(5, 18));
  EXPECT_THROW(parse_quantity("parsec", sys), UnknownName);
}

TEST(FormatSystem, RoundTrips) {
  for (const char* name :
       {"kinematics.qc", "mechanics.qc", "physics.qc", "isq.qc", "empty.qc", "geometry.qc", "time.qc"}) {
    SystemDef sys = load_system(path(name));
    std::string text = format_system(sys);
    SystemDef again = parse_system(text);
    EXPECT_EQ(again, sys) << name << "\n" << text;
    EXPECT_EQ(format_system(again), text);
  }
}

TEST(FormatInBaseUnits, Examples) {
  SystemDef sys = parse_system(kKinematics);
  EXPECT_EQ(format_in_base_units(*sys.lookup("km"), sys), "1000 m");
  EXPECT_EQ(format_in_base_units(*sys.lookup("c"), sys), "299792458 m s^-1");
  EXPECT_EQ(format_in_base_units(inverse(*sys.lookup("c")), sys), "1/299792458 m^-1 s");
  EXPECT_EQ(format_in_base_units(sys.space.one(), sys), "1");
}

TEST(LoadSystem, MissingFileIsAParseError) {
  try {
    load_system("/nonexistent/file.qc");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
}

TEST(LoadSystem, SampleRanks) {
  EXPECT_EQ(load_system(path("isq.qc")).space.rank(), 7u);
  EXPECT_EQ(load_system(path("empty.qc")).space.rank(), 0u);
  SystemDef mech = load_system(path("mechanics.qc"));
  EXPECT_EQ(mech.space.basis().generators(), (std::vector<std::string>{"L", "T", "M"}));
}
