#include "qcalc/homomorphism.hpp"

#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {

SpaceHom::SpaceHom(QuantitySpace source, QuantitySpace target, IntMatrix dimension_map,
                   Character scaling)
    : source_(std::move(source)),
      target_(std::move(target)),
      dim_map_(std::move(dimension_map)),
      scale_(std::move(scaling)) {
  if (dim_map_.rows() == 0 && dim_map_.cols() == 0) dim_map_ = IntMatrix(source_.rank(), target_.rank());
  if (dim_map_.rows() != source_.rank() || dim_map_.cols() != target_.rank())
    throw BasisMismatch("dimension map shape does not match the ranks");
  if (!same_basis(scale_.basis_ref(), source_.basis_ref()))
    throw BasisMismatch("scaling character is not over the source basis");
}

SpaceHom SpaceHom::zero(QuantitySpace source, QuantitySpace target, IntMatrix dimension_map) {
  Character one = Character::trivial(source.basis_ref());
  SpaceHom h(std::move(source), std::move(target), std::move(dimension_map), std::move(one));
  h.zero_ = true;
  return h;
}

SpaceHom SpaceHom::identity(const QuantitySpace& space) {
  return SpaceHom(space, space, IntMatrix::identity(space.rank()),
                  Character::trivial(space.basis_ref()));
}

Dimension SpaceHom::map_dimension(const Dimension& d) const {
  if (!same_basis(source_.basis_ref(), d.basis_ref())) throw BasisMismatch();
  return Dimension(target_.basis_ref(), multiply(d.exponents(), dim_map_));
}

Quantity SpaceHom::operator()(const Quantity& q) const {
  Dimension d = map_dimension(q.dimension());
  if (zero_) return Quantity(0, std::move(d));
  return Quantity(q.value() * scale_(q.dimension()), std::move(d));
}

SpaceHom compose(const SpaceHom& outer, const SpaceHom& inner) {
  if (!(inner.target() == outer.source())) throw SpaceMismatch("homomorphisms do not compose");
  IntMatrix dim_map = inner.dimension_map() * outer.dimension_map();
  if (inner.is_zero() || outer.is_zero())
    return SpaceHom::zero(inner.source(), outer.target(), std::move(dim_map));
  const auto& src = inner.source().basis_ref();
  std::vector<Scalar> values(src->rank());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Dimension g = Dimension::generator(src, i);
    values[i] = inner.scaling()(g) * outer.scaling()(inner.map_dimension(g));
  }
  return SpaceHom(inner.source(), outer.target(), std::move(dim_map), Character(src, std::move(values)));
}

std::optional<SpaceHom> inverse(const SpaceHom& hom) {
  if (hom.is_zero()) return std::nullopt;
  auto inv = unimodular_inverse(hom.dimension_map());
  if (!inv) return std::nullopt;
  const auto& tgt = hom.target().basis_ref();
  std::vector<Scalar> values(tgt->rank());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Dimension preimage(hom.source().basis_ref(), inv->row(i));
    values[i] = 1 / hom.scaling()(preimage);
  }
  return SpaceHom(hom.target(), hom.source(), std::move(*inv), Character(tgt, std::move(values)));
}

Subsection kernel(const SpaceHom& hom) {
  if (hom.is_zero()) throw ZeroHomomorphism();
  Subgroup k(hom.source().basis_ref(), kernel_basis(hom.dimension_map()));
  return Subsection(Section(hom.scaling().inverse()), std::move(k));
}

Subspace image(const SpaceHom& hom) {
  if (hom.is_zero()) throw ZeroHomomorphism();
  return Subspace(hom.target(), Subgroup(hom.target().basis_ref(), hom.dimension_map()),
                  hom.target().name() + "_image");
}

Section preimage_section(const SpaceHom& hom, const Section& target_section) {
  if (hom.is_zero()) throw ZeroHomomorphism();
  if (!same_basis(target_section.basis_ref(), hom.target().basis_ref())) throw BasisMismatch();
  const auto& src = hom.source().basis_ref();

  // hom(x, A) = (x scale(A), dim_map(A)) must equal target_section(dim_map(A)).
  std::vector<Scalar> values(src->rank());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Dimension g = Dimension::generator(src, i);
    values[i] = target_section.character()(hom.map_dimension(g)) / hom.scaling()(g);
  }
  Character character(src, std::move(values));

  OverrideTable overrides;
  if (!target_section.overrides().empty()) {
    Subgroup im(hom.target().basis_ref(), hom.dimension_map());
    HnfResult h = hnf_with_transform(hom.dimension_map());
    bool injective = h.basis.rows() == hom.dimension_map().rows();
    for (const auto& [d, v] : target_section.overrides()) {
      Membership m = im.contains(d);
      if (!m) continue;
      if (!injective)
        throw NotRepresentable("override at " + format(d) +
                               " pulls back to infinitely many fibers");
      IntVector a = multiply(m.coordinates, h.transform.top_rows(h.basis.rows()));
      Dimension pre(src, std::move(a));
      overrides.emplace(pre, v / hom.scaling()(pre));
    }
  }
  return Section(std::move(character), std::move(overrides));
}

FirstIsomorphism first_isomorphism(const SpaceHom& hom) {
  Subsection k = kernel(hom);
  Subspace img = image(hom);

  std::optional<QuotientSpace> quotient;
  try {
    quotient.emplace(make_quotient(hom.source(), k, hom.source().name() + "_mod_ker"));
  } catch (const TorsionQuotient& e) {
    throw InternalConsistency(std::string("kernel quotient has torsion: ") + e.what());
  }

  const QuantitySpace& qspace = quotient->space();
  IntMatrix dim_map(0, img.rank());
  std::vector<Scalar> scale;
  for (std::size_t j = 0; j < qspace.rank(); ++j) {
    Dimension rep = quotient->lift(Dimension::generator(qspace.basis_ref(), j));
    dim_map.append_row(img.restrict(hom.map_dimension(rep)).exponents());
    scale.push_back(hom.scaling()(rep));
  }
  if (qspace.rank() == 0) dim_map = IntMatrix(0, img.rank());

  SpaceHom iso(qspace, img.space(), std::move(dim_map), Character(qspace.basis_ref(), std::move(scale)));
  auto back = inverse(iso);
  if (!back) throw InternalConsistency("induced map on Q/ker is not bijective");
  return FirstIsomorphism{std::move(*quotient), std::move(img), std::move(iso), std::move(*back)};
}

ClassificationResult classify(const QuantitySpace& q, const QuantitySpace& r,
                              const Section& source_section, const Section& target_section) {
  if (q.rank() != r.rank()) return NotIsomorphic{q.rank(), r.rank()};
  if (!source_section.is_coherent() || !target_section.is_coherent()) throw NotCoherent();
  if (!same_basis(source_section.basis_ref(), q.basis_ref()) ||
      !same_basis(target_section.basis_ref(), r.basis_ref()))
    throw BasisMismatch();

  const std::size_t k = q.rank();
  std::vector<Scalar> values(k);
  for (std::size_t i = 0; i < k; ++i) {
    values[i] = target_section.character().generator_values()[i] /
                source_section.character().generator_values()[i];
  }
  SpaceHom witness(q, r, IntMatrix::identity(k), Character(q.basis_ref(), std::move(values)));
  auto back = inverse(witness);
  if (!back) throw InternalConsistency("classification witness is not invertible");
  return Isomorphic{std::move(witness), std::move(*back)};
}

ClassificationResult classify(const QuantitySpace& q, const QuantitySpace& r) {
  return classify(q, r, Section(Character::trivial(q.basis_ref())),
                  Section(Character::trivial(r.basis_ref())));
}

SpaceHom canonical_model_iso(const QuantitySpace& q, const Section& section) {
  if (!section.is_coherent()) throw NotCoherent();
  if (!same_basis(section.basis_ref(), q.basis_ref())) throw BasisMismatch();
  QuantitySpace model(q.name() + "_model", q.basis_ref());
  return SpaceHom(q, std::move(model), IntMatrix::identity(q.rank()), section.character().inverse());
}

}  // namespace qcalc
