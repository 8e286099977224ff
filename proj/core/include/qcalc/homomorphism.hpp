#pragma once

#include <variant>

#include "qcalc/constructions.hpp"

namespace qcalc {

/// Homomorphism of spaces of quantities in standard-model form.
///
/// A nonzero homomorphism is hom(a, A) = (a * scale(A), dim_map(A)) with
/// dim_map an integer matrix acting on exponent rows (rank_source x
/// rank_target) and scale a character of the source. This covers every nonzero homomorphism:
/// fiber linearity makes hom a scalar multiple on each fiber, and the monoid
/// law makes those scalars multiplicative. A zero homomorphism sends (a, A)
/// to the zero of fiber dim_map(A).
class SpaceHom {
 public:
  SpaceHom(QuantitySpace source, QuantitySpace target, IntMatrix dimension_map, Character scaling);

  static SpaceHom zero(QuantitySpace source, QuantitySpace target, IntMatrix dimension_map);
  static SpaceHom identity(const QuantitySpace& space);

  const QuantitySpace& source() const noexcept { return source_; }
  const QuantitySpace& target() const noexcept { return target_; }
  /// The induced group homomorphism dim_map.
  const IntMatrix& dimension_map() const noexcept { return dim_map_; }
  const Character& scaling() const noexcept { return scale_; }
  bool is_zero() const noexcept { return zero_; }

  Dimension map_dimension(const Dimension& d) const;
  Quantity operator()(const Quantity& q) const;

 private:
  QuantitySpace source_;
  QuantitySpace target_;
  IntMatrix dim_map_;
  Character scale_;
  bool zero_ = false;
};

/// outer o inner.
SpaceHom compose(const SpaceHom& outer, const SpaceHom& inner);

/// Two-sided inverse when hom is bijective (nonzero, dim_map unimodular).
std::optional<SpaceHom> inverse(const SpaceHom& hom);

/// ker hom = hom^-1(1_R): the subsection over ker dim_map with section
/// A -> (scale(A)^-1, A). Throws ZeroHomomorphism.
Subsection kernel(const SpaceHom& hom);

/// Every target quantity whose dimension lies in the image of dim_map. Throws ZeroHomomorphism.
Subspace image(const SpaceHom& hom);

/// The section of the source whose image lies in target_section's image. Throws
/// ZeroHomomorphism, or NotRepresentable when an override of target_section would
/// pull back to infinitely many fibers (dim_map not injective).
Section preimage_section(const SpaceHom& hom, const Section& target_section);

/// Q / ker hom  ->  im hom, with its inverse.
struct FirstIsomorphism {
  QuotientSpace quotient;
  Subspace image;
  SpaceHom iso;      ///< quotient.space() -> image.space()
  SpaceHom inverse;  ///< image.space() -> quotient.space()
};

/// Throws ZeroHomomorphism; InternalConsistency if the kernel quotient had
/// torsion or the induced map failed to be bijective.
FirstIsomorphism first_isomorphism(const SpaceHom& hom);

struct Isomorphic {
  SpaceHom witness;
  SpaceHom inverse;
};

struct NotIsomorphic {
  std::size_t source_rank;
  std::size_t target_rank;
};

using ClassificationResult = std::variant<Isomorphic, NotIsomorphic>;

/// Equal ranks give a witness mapping source_section(A_i) to target_section(B_i) for the
/// i-th generators, extended linearly on fibers.
ClassificationResult classify(const QuantitySpace& q, const QuantitySpace& r,
                              const Section& source_section, const Section& target_section);
/// As above with the trivial coherent sections on both sides.
ClassificationResult classify(const QuantitySpace& q, const QuantitySpace& r);

/// q -> (numerical_value(q), dim q) onto the standard model, with inverse
/// (a, A) -> a section(A).
/// Throws NotCoherent.
SpaceHom canonical_model_iso(const QuantitySpace& q, const Section& section);

}  // namespace qcalc
