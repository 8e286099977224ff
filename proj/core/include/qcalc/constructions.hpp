#pragma once

#include <string>
#include <vector>

#include "qcalc/lattice.hpp"
#include "qcalc/quantity.hpp"
#include "qcalc/section.hpp"

namespace qcalc {

/// S = dim^-1(E). Carries its own space of quantities over the HNF basis of
/// E, with maps to and from the parent.
class Subspace {
 public:
  Subspace(QuantitySpace parent, Subgroup subgroup, std::string name = {});

  const QuantitySpace& parent() const noexcept { return parent_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  /// The subspace as a space in its own right.
  const QuantitySpace& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return space_.rank(); }

  bool contains(const Quantity& q) const;
  /// Parent quantity -> subspace coordinates. Throws SpaceMismatch if `q` is
  /// not in the subspace.
  Quantity restrict(const Quantity& q) const;
  Dimension restrict(const Dimension& d) const;
  Quantity embed(const Quantity& q) const;
  Dimension embed(const Dimension& d) const;

 private:
  QuantitySpace parent_;
  Subgroup subgroup_;
  QuantitySpace space_;
};

Subspace make_subspace(const QuantitySpace& q, const Subgroup& e);

/// Restriction of a nonzero coherent section to a subgroup E. A quotient
/// identifies the image of E under the section with 1.
class Subsection {
 public:
  /// Throws NotCoherent for a section with overrides.
  Subsection(Section section, Subgroup subgroup);

  const Section& section() const noexcept { return section_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }

  /// q == section(dim q) with dim q in E.
  bool contains(const Quantity& q) const;
  /// section(d) for d in E; throws SpaceMismatch otherwise.
  Quantity operator()(const Dimension& d) const;

 private:
  Section section_;
  Subgroup subgroup_;
};

/// Subsection generated by `units`: a coherent section of `space` with
/// section(dim u) == u for every u, restricted to <dim u>. Throws
/// ConflictingSection when the requirements are incompatible (two units of
/// one dimension with different values, or any violated multiplicative
/// relation), ZeroValue for a zero unit, and TorsionQuotient when the
/// generated subgroup is not a direct summand (no rational extension is
/// guaranteed then).
Subsection subsection_from_units(const QuantitySpace& space, const std::vector<Quantity>& units);

/// Quotient of a space by a subsection whose quotient group is torsion-free.
///
/// Quotient generators are represented by a complement of E in D: original
/// generators when they complete a basis of E to a basis of D (tried from the
/// last declared generator backwards), otherwise the complement rows of the
/// Smith adapted basis. A quantity (a, A) with A = e f, e in E, f in the
/// complement, reduces to (a / character(e), class f).
class QuotientSpace {
 public:
  const QuantitySpace& source() const noexcept { return source_; }
  const Subsection& subsection() const noexcept { return subsection_; }
  const QuotientStructure& structure() const noexcept { return structure_; }
  const QuantitySpace& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return space_.rank(); }
  /// Rows are source dimensions representing the quotient generators.
  const IntMatrix& complement() const noexcept { return complement_; }

  /// The projection of dimensions onto D/E.
  Dimension project(const Dimension& d) const;
  /// The canonical representative of the class of `q`, as a quotient quantity.
  Quantity reduce(const Quantity& q) const;
  /// Source quantity representing a quotient quantity; reduce(lift(x)) == x.
  Quantity lift(const Quantity& q) const;
  Dimension lift(const Dimension& d) const;

 private:
  friend QuotientSpace make_quotient(const QuantitySpace&, const Subsection&, std::string);

  QuotientSpace(QuantitySpace source, Subsection subsection, QuotientStructure structure,
                QuantitySpace space, IntMatrix complement, IntMatrix subgroup_basis,
                IntMatrix coordinate_map);

  QuantitySpace source_;
  Subsection subsection_;
  QuotientStructure structure_;
  QuantitySpace space_;
  IntMatrix complement_;
  IntMatrix subgroup_basis_;  ///< HNF basis of E
  IntMatrix coordinate_map_;  ///< inverse of [subgroup_basis; complement]
};

/// Throws TorsionQuotient (with the invariant factors >= 2) unless D/E is free.
QuotientSpace make_quotient(const QuantitySpace& q, const Subsection& sub, std::string name = {});

enum class NameClash { Reject, Qualify };

struct TensorSpace {
  QuantitySpace left;
  QuantitySpace right;
  QuantitySpace product;
};

/// Tensor product; its generators are those of `q` followed by those of `r`.
/// Clashing generator names raise NameCollision
/// unless `clash == Qualify`, in which case every generator is prefixed with
/// its space name ("geom.L").
TensorSpace tensor(const QuantitySpace& q, const QuantitySpace& r,
                   NameClash clash = NameClash::Reject, std::string name = {});

/// (a, A) (x) (b, B) = (ab, (A, B)). Throws SpaceMismatch if the factors do
/// not belong to the tensor's factor spaces.
Quantity tensor_element(const TensorSpace& t, const Quantity& q, const Quantity& r);

/// Identifications of the factors with Q (x) 1 and 1 (x) R.
Quantity embed_left(const TensorSpace& t, const Quantity& q);
Quantity embed_right(const TensorSpace& t, const Quantity& r);

}  // namespace qcalc
