#include "qcalc/lattice.hpp"

#include <algorithm>
#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {
namespace {

// Replace rows (a, b) of `h` and `t` by
//   row_a' = x*row_a + y*row_b
//   row_b' = -(vb/g)*row_a + (va/g)*row_b
// where g = gcd(va, vb) = x*va + y*vb. The 2x2 transform has determinant 1.
void gcd_combine_rows(IntMatrix& h, IntMatrix& t, std::size_t a, std::size_t b, std::size_t col) {
  Integer va = h(a, col), vb = h(b, col);
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
  Integer p = vb / g;  // exact
  Integer q = va / g;
  auto apply = [&](IntMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer ra = m(a, c), rb = m(b, c);
      m(a, c) = x * ra + y * rb;
      m(b, c) = q * rb - p * ra;
    }
  };
  apply(h);
  apply(t);
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix t = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        t.swap_rows(r, i);
        continue;
      }
      gcd_combine_rows(h, t, r, i, c);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      t.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return HnfResult{h.top_rows(r), std::move(t)};
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).basis; }

std::vector<Integer> SnfDecomposition::diagonal_entries() const {
  std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diagonal(i, i);
  return out;
}

std::vector<Integer> SnfDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (auto& d : diagonal_entries())
    if (d != 0) out.push_back(d);
  return out;
}

std::size_t SnfDecomposition::rank() const { return invariant_factors().size(); }

SnfDecomposition snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    bool any = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      any = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!any || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            any = true;
          }
        }
      if (!any) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (!any) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfDecomposition{std::move(u), std::move(a), std::move(v)};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // U m V = S, so x m = 0 iff (x U^-1) S = 0; the last rows - rank rows of U
  // span the left kernel.
  SnfDecomposition d = snf(m);
  std::size_t r = d.rank();
  IntMatrix k = d.left.row_range(r, m.rows());
  if (k.rows() == 0) return IntMatrix(0, m.rows());
  return hnf(k);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(BasisRef ambient, IntMatrix generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  if (generators_.rows() == 0) generators_ = IntMatrix(0, ambient_->rank());
  if (generators_.cols() != ambient_->rank())
    throw BasisMismatch("generator matrix width does not match ambient rank");
  hnf_basis_ = hnf(generators_);
  if (hnf_basis_.rows() == 0) hnf_basis_ = IntMatrix(0, ambient_->rank());
  snf_ = qcalc::snf(generators_);
}

namespace {
IntMatrix rows_of(const BasisRef& ambient, const std::vector<Dimension>& dims) {
  IntMatrix m(0, ambient->rank());
  for (const auto& d : dims) {
    if (!same_basis(ambient, d.basis_ref())) throw BasisMismatch();
    m.append_row(d.exponents());
  }
  return m;
}
}  // namespace

Subgroup::Subgroup(BasisRef ambient, const std::vector<Dimension>& generators)
    : Subgroup(ambient, rows_of(ambient, generators)) {}

Subgroup Subgroup::trivial(BasisRef ambient) {
  std::size_t k = ambient->rank();
  return Subgroup(std::move(ambient), IntMatrix(0, k));
}

Subgroup Subgroup::whole(BasisRef ambient) {
  std::size_t k = ambient->rank();
  return Subgroup(std::move(ambient), IntMatrix::identity(k));
}

std::vector<Dimension> Subgroup::basis_dimensions() const {
  std::vector<Dimension> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_dimension(i));
  return out;
}

Dimension Subgroup::basis_dimension(std::size_t i) const {
  return Dimension(ambient_, hnf_basis_.row(i));
}

Dimension Subgroup::combine(const IntVector& coordinates) const {
  return Dimension(ambient_, multiply(coordinates, hnf_basis_));
}

Membership Subgroup::contains(const Dimension& d) const {
  if (!same_basis(ambient_, d.basis_ref())) throw BasisMismatch();
  IntVector rest = d.exponents();
  IntVector coords(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (hnf_basis_(i, col) == 0) {
      if (rest[col] != 0) return {};
      ++col;
    }
    const Integer& pivot = hnf_basis_(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return {};
    coords[i] = rest[col] / pivot;
    for (std::size_t c = col; c < rest.size(); ++c) rest[c] -= coords[i] * hnf_basis_(i, c);
    ++col;
  }
  for (const auto& x : rest)
    if (x != 0) return {};
  return Membership{true, std::move(coords)};
}

// ---------------------------------------------------------------------------

AdaptedCoordinates QuotientStructure::project(const IntVector& v) const {
  IntVector c = multiply(v, coordinate_map);
  AdaptedCoordinates out;
  out.subgroup_part.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(subgroup_rank));
  out.free_part.assign(c.begin() + static_cast<std::ptrdiff_t>(subgroup_rank), c.end());
  return out;
}

QuotientStructure quotient_structure(const Subgroup& sub) {
  // Rows of A span E. With U A V = S the rows of V^-1 are a basis of D and
  // E = span{ d_i * row_i(V^-1) }.
  const SnfDecomposition& d = sub.snf();
  QuotientStructure qs;
  qs.subgroup_rank = d.rank();
  qs.free_rank = sub.ambient()->rank() - qs.subgroup_rank;
  for (const auto& f : d.invariant_factors())
    if (f >= 2) qs.torsion.push_back(f);
  qs.coordinate_map = d.right;
  auto inv = unimodular_inverse(d.right);
  if (!inv) throw InternalConsistency("Smith transform is not unimodular");
  qs.adapted_basis = std::move(*inv);
  return qs;
}

}  // namespace qcalc
