#include <gtest/gtest.h>

#include "qcalc/error.hpp"
#include "qcalc/homomorphism.hpp"
#include "random.hpp"

using namespace qcalc;

namespace {

QuantitySpace kinematics() { return QuantitySpace("kinematics", make_basis({"L", "T"})); }
QuantitySpace time_space() { return QuantitySpace("time", make_basis({"T"})); }

// Seconds of light travel: L -> T scaled by 1/c, T -> T.
SpaceHom light_time() {
  auto q = kinematics();
  return SpaceHom(q, time_space(), IntMatrix{{1}, {1}},
                  Character(q.basis_ref(), {Scalar(1, 299792458), Scalar(1)}));
}

Quantity random_in(sample::Gen& g, const QuantitySpace& s) {
  return Quantity(g.nonzero_scalar(), g.dimension(s.basis_ref()));
}

}  // namespace

TEST(SpaceHom, AppliesFiberwise) {
  SpaceHom hom = light_time();
  auto q = hom.source();
  Quantity c = q.make(299792458, q.dimension({Integer(1), Integer(-1)}));
  EXPECT_EQ(hom(c), time_space().one());
  Quantity x = q.make(3, q.dimension({Integer(2), Integer(0)}));
  Quantity y = q.make(5, q.dimension({Integer(2), Integer(0)}));
  EXPECT_EQ(hom(x + y), hom(x) + hom(y));
  EXPECT_EQ(hom(x * y), hom(x) * hom(y));
}

TEST(SpaceHom, ShapeIsValidated) {
  auto q = kinematics();
  EXPECT_THROW(SpaceHom(q, time_space(), IntMatrix{{1, 0}}, Character::trivial(q.basis_ref())),
               BasisMismatch);
}

TEST(SpaceHom, ZeroMapsIntoFiberZeros) {
  auto q = kinematics();
  SpaceHom z = SpaceHom::zero(q, time_space(), IntMatrix{{1}, {1}});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z(q.one()), time_space().zero(time_space().identity_dimension()));
  EXPECT_THROW(kernel(z), ZeroHomomorphism);
  EXPECT_FALSE(inverse(z));
}

TEST(Kernel, LightTimeKernelIsGeneratedBySpeedOfLight) {
  SpaceHom hom = light_time();
  Subsection k = kernel(hom);
  auto q = hom.source();
  EXPECT_EQ(k.subgroup().rank(), 1u);
  EXPECT_TRUE(k.contains(q.make(299792458, q.dimension({Integer(1), Integer(-1)}))));
  EXPECT_FALSE(k.contains(q.make(1, q.dimension({Integer(1), Integer(-1)}))));
}

TEST(FirstIsomorphism, LightTime) {
  SpaceHom hom = light_time();
  FirstIsomorphism f = first_isomorphism(hom);
  EXPECT_EQ(f.quotient.rank(), 1u);
  EXPECT_EQ(f.image.rank(), 1u);
  sample::Gen g(71);
  for (int i = 0; i < 100; ++i) {
    Quantity x = random_in(g, hom.source());
    // hom factors through the quotient.
    EXPECT_EQ(f.image.embed(f.iso(f.quotient.reduce(x))), hom(x));
    Quantity y = random_in(g, f.quotient.space());
    EXPECT_EQ(f.inverse(f.iso(y)), y);
  }
}

TEST(Inverse, ComposesToIdentity) {
  auto q = kinematics();
  SpaceHom hom(q, q, IntMatrix{{2, 1}, {1, 1}}, Character(q.basis_ref(), {Scalar(3), Scalar(-2, 5)}));
  auto inv = inverse(hom);
  ASSERT_TRUE(inv);
  sample::Gen g(72);
  for (int i = 0; i < 100; ++i) {
    Quantity x = random_in(g, q);
    EXPECT_EQ((*inv)(hom(x)), x);
    EXPECT_EQ(compose(*inv, hom)(x), x);
    EXPECT_EQ(compose(hom, *inv)(x), x);
  }
  EXPECT_FALSE(inverse(SpaceHom(q, q, IntMatrix{{2, 0}, {0, 1}}, Character::trivial(q.basis_ref()))));
}

TEST(Compose, AgreesWithSequentialApplication) {
  sample::Gen g(73);
  for (int i = 0; i < 100; ++i) {
    QuantitySpace a("a", g.basis(static_cast<std::size_t>(g.integer(0, 3))));
    QuantitySpace b("b", g.basis(static_cast<std::size_t>(g.integer(0, 3))));
    QuantitySpace c("c", g.basis(static_cast<std::size_t>(g.integer(0, 3))));
    SpaceHom f(a, b, g.matrix(a.rank(), b.rank(), 2), g.character(a.basis_ref()));
    SpaceHom h(b, c, g.matrix(b.rank(), c.rank(), 2), g.character(b.basis_ref()));
    Quantity x = random_in(g, a);
    EXPECT_EQ(compose(h, f)(x), h(f(x)));
  }
}

TEST(PreimageSection, PullsBackCoherentAndInjectiveOverrides) {
  auto q = kinematics();
  QuantitySpace r("r", make_basis({"L", "T"}));
  SpaceHom hom(q, r, IntMatrix{{1, 0}, {0, 2}}, Character(q.basis_ref(), {Scalar(2), Scalar(3)}));
  Section target_section = Section(Character(r.basis_ref(), {Scalar(5), Scalar(7)}))
                        .with_override(r.dimension({Integer(1), Integer(2)}), Scalar(11))
                        .with_override(r.dimension({Integer(0), Integer(1)}), Scalar(13));
  Section pulled = preimage_section(hom, target_section);
  sample::Gen g(74);
  for (int i = 0; i < 50; ++i) {
    Dimension d = g.dimension(q.basis_ref());
    EXPECT_EQ(hom(pulled(d)), target_section(hom.map_dimension(d)));
  }
  // The override on T (odd T exponent) is outside the image and ignored.
  EXPECT_EQ(pulled.overrides().size(), 1u);
}

TEST(PreimageSection, NonInjectiveOverrideIsNotRepresentable) {
  SpaceHom hom = light_time();
  Section section = Section(Character::trivial(time_space().basis_ref()))
                      .with_override(time_space().dimension({Integer(1)}), Scalar(2));
  EXPECT_THROW(preimage_section(hom, section), NotRepresentable);
  EXPECT_NO_THROW(preimage_section(hom, Section(Character::trivial(time_space().basis_ref()))));
}

TEST(Classify, RankDecides) {
  QuantitySpace geom("geometry", make_basis({"L"}));
  auto r = classify(geom, time_space());
  ASSERT_TRUE(std::holds_alternative<Isomorphic>(r));
  auto n = classify(kinematics(), QuantitySpace("mech", make_basis({"L", "T", "M"})));
  ASSERT_TRUE(std::holds_alternative<NotIsomorphic>(n));
  EXPECT_EQ(std::get<NotIsomorphic>(n).source_rank, 2u);
  EXPECT_EQ(std::get<NotIsomorphic>(n).target_rank, 3u);
}

TEST(Classify, WitnessSendsUnitsToUnits) {
  QuantitySpace geom("geometry", make_basis({"L"}));
  Section feet(Character(geom.basis_ref(), {Scalar(3048, 10000)}));
  Section minutes(Character(time_space().basis_ref(), {Scalar(60)}));
  auto r = classify(geom, time_space(), feet, minutes);
  const auto& iso = std::get<Isomorphic>(r);
  EXPECT_EQ(iso.witness(feet(geom.dimension({Integer(1)}))), minutes(time_space().dimension({Integer(1)})));
  EXPECT_THROW(classify(geom, time_space(), feet.with_override(geom.dimension({Integer(2)}), 5), minutes),
               NotCoherent);
}

TEST(CanonicalModel, SendsQuantitiesToNumericalValues) {
  auto q = kinematics();
  Section section(Character(q.basis_ref(), {Scalar(1000), Scalar(3600)}));
  SpaceHom iso = canonical_model_iso(q, section);
  EXPECT_EQ(iso.target().name(), "kinematics_model");
  Quantity v = q.make(10, q.dimension({Integer(1), Integer(-1)}));
  EXPECT_EQ(iso(v).value(), numerical_value(v, section));
  EXPECT_THROW(canonical_model_iso(q, section.with_override(q.identity_dimension(), 2)), NotCoherent);
}
