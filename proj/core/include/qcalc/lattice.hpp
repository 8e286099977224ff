#pragma once

#include <cstddef>
#include <vector>

#include "qcalc/dimension.hpp"
#include "qcalc/int_matrix.hpp"

namespace qcalc {

/// Row-style Hermite normal form of the row lattice of `m`: pivots strictly
/// move right, pivots are positive, entries above a pivot lie in
/// [0, pivot), and zero rows are dropped.
IntMatrix hnf(const IntMatrix& m);

struct HnfResult {
  IntMatrix basis;      ///< the HNF rows (zero rows removed)
  /// Unimodular, rows(m) x rows(m). The first basis.rows() rows of
  /// transform * m equal basis; the rest are zero.
  IntMatrix transform;
};

HnfResult hnf_with_transform(const IntMatrix& m);

/// U * A * V == S with U, V unimodular and S diagonal, nonnegative, and
/// satisfying the divisibility chain on its nonzero entries.
struct SnfDecomposition {
  IntMatrix left;      ///< U, rows x rows
  IntMatrix diagonal;  ///< S, rows x cols
  IntMatrix right;     ///< V, cols x cols

  /// All min(rows, cols) diagonal entries, zeros included.
  std::vector<Integer> diagonal_entries() const;
  /// The nonzero diagonal entries (the invariant factors).
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const;
};

SnfDecomposition snf(const IntMatrix& m);

/// Rows form a basis (in HNF) of { x : x * m == 0 }.
IntMatrix kernel_basis(const IntMatrix& m);

/// Result of a lattice membership test; `coordinates` are w.r.t. the HNF
/// basis of the subgroup and are empty when `member` is false.
struct Membership {
  bool member = false;
  IntVector coordinates;

  explicit operator bool() const noexcept { return member; }
};

/// Subgroup of a group of dimensions, given by generator rows.
class Subgroup {
 public:
  Subgroup(BasisRef ambient, IntMatrix generators);
  Subgroup(BasisRef ambient, const std::vector<Dimension>& generators);

  static Subgroup trivial(BasisRef ambient);
  static Subgroup whole(BasisRef ambient);

  const BasisRef& ambient() const noexcept { return ambient_; }
  const IntMatrix& generators() const noexcept { return generators_; }
  const IntMatrix& hnf_basis() const noexcept { return hnf_basis_; }
  const SnfDecomposition& snf() const noexcept { return snf_; }
  std::size_t rank() const noexcept { return hnf_basis_.rows(); }

  std::vector<Dimension> basis_dimensions() const;
  Dimension basis_dimension(std::size_t i) const;
  /// Dimension with the given coordinates in the HNF basis.
  Dimension combine(const IntVector& coordinates) const;

  /// Throws BasisMismatch when `d` is over a different basis.
  Membership contains(const Dimension& d) const;

 private:
  BasisRef ambient_;
  IntMatrix generators_;
  IntMatrix hnf_basis_;
  SnfDecomposition snf_;
};

/// Coordinates of an ambient vector in the adapted basis, split in the part
/// along the subgroup directions and the part along the free complement.
struct AdaptedCoordinates {
  IntVector subgroup_part;
  IntVector free_part;
};

/// Structure of D / E read off the Smith form of the generator matrix.
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::size_t subgroup_rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors >= 2
  /// Unimodular basis of D (rows); d_i * row_i, i < subgroup_rank, span E.
  IntMatrix adapted_basis;
  /// Inverse of adapted_basis; v * coordinate_map gives adapted coordinates.
  IntMatrix coordinate_map;

  bool is_free() const noexcept { return torsion.empty(); }
  AdaptedCoordinates project(const IntVector& v) const;
};

QuotientStructure quotient_structure(const Subgroup& sub);

}  // namespace qcalc
