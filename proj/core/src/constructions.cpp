#include "qcalc/constructions.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "qcalc/error.hpp"

namespace qcalc {
namespace {

// A name for a derived generator represented by `d` in the parent group.
std::string derived_generator_name(const Dimension& d) {
  std::size_t nonzero = 0, index = 0;
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (d.exponent(i) != 0) {
      ++nonzero;
      index = i;
    }
  if (nonzero == 1 && d.exponent(index) == 1) return d.basis().generator(index);
  return generator_label(d);
}

BasisRef derived_basis(const BasisRef& parent, const IntMatrix& rows) {
  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    std::string base = derived_generator_name(Dimension(parent, rows.row(i)));
    std::string name = base;
    for (int n = 2; used.count(name) != 0; ++n) name = base + "_" + std::to_string(n);
    used.insert(name);
    names.push_back(std::move(name));
  }
  return make_basis(std::move(names));
}

bool extends_to_basis(const IntMatrix& rows) {
  SnfDecomposition d = snf(rows);
  auto f = d.invariant_factors();
  return f.size() == rows.rows() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

// Rows completing the HNF basis of a direct summand E to a basis of D.
IntMatrix choose_complement(const IntMatrix& subgroup_basis, const QuotientStructure& qs) {
  const std::size_t k = subgroup_basis.cols();
  const std::size_t r = subgroup_basis.rows();
  IntMatrix current = subgroup_basis;
  std::vector<std::size_t> chosen;
  for (std::size_t j = k; j-- > 0 && chosen.size() < k - r;) {
    IntVector e(k);
    e[j] = 1;
    IntMatrix candidate = current;
    candidate.append_row(e);
    if (extends_to_basis(candidate)) {
      current = std::move(candidate);
      chosen.push_back(j);
    }
  }
  IntMatrix complement(0, k);
  if (chosen.size() == k - r) {
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t j : chosen) {
      IntVector e(k);
      e[j] = 1;
      complement.append_row(e);
    }
  } else {
    complement = qs.adapted_basis.row_range(qs.subgroup_rank, k);
  }
  return complement;
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  IntMatrix out = top;
  if (out.rows() == 0) out = IntMatrix(0, bottom.cols());
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(QuantitySpace parent, Subgroup subgroup, std::string name)
    : parent_(std::move(parent)),
      subgroup_(std::move(subgroup)),
      space_(name.empty() ? parent_.name() + "_sub" : std::move(name),
             derived_basis(subgroup_.ambient(), subgroup_.hnf_basis())) {
  if (!same_basis(parent_.basis_ref(), subgroup_.ambient())) throw BasisMismatch();
}

bool Subspace::contains(const Quantity& q) const { return subgroup_.contains(q.dimension()).member; }

Dimension Subspace::restrict(const Dimension& d) const {
  Membership m = subgroup_.contains(d);
  if (!m) throw SpaceMismatch("dimension " + format(d) + " is not in the subspace");
  return Dimension(space_.basis_ref(), std::move(m.coordinates));
}

Quantity Subspace::restrict(const Quantity& q) const {
  return Quantity(q.value(), restrict(q.dimension()));
}

Dimension Subspace::embed(const Dimension& d) const {
  if (!same_basis(space_.basis_ref(), d.basis_ref())) throw BasisMismatch();
  return subgroup_.combine(d.exponents());
}

Quantity Subspace::embed(const Quantity& q) const { return Quantity(q.value(), embed(q.dimension())); }

Subspace make_subspace(const QuantitySpace& q, const Subgroup& e) { return Subspace(q, e); }

// ---------------------------------------------------------------------------
// Subsection

Subsection::Subsection(Section section, Subgroup subgroup)
    : section_(std::move(section)), subgroup_(std::move(subgroup)) {
  if (!section_.is_coherent()) throw NotCoherent();
  if (!same_basis(section_.basis_ref(), subgroup_.ambient())) throw BasisMismatch();
}

bool Subsection::contains(const Quantity& q) const {
  if (!subgroup_.contains(q.dimension())) return false;
  return q == section_(q.dimension());
}

Quantity Subsection::operator()(const Dimension& d) const {
  if (!subgroup_.contains(d)) throw SpaceMismatch(format(d) + " is outside the subsection");
  return section_(d);
}

Subsection subsection_from_units(const QuantitySpace& space, const std::vector<Quantity>& units) {
  const BasisRef& basis = space.basis_ref();
  IntMatrix g(0, basis->rank());
  std::vector<Scalar> values;
  for (const auto& u : units) {
    if (!space.contains(u)) throw BasisMismatch();
    if (u.is_zero()) throw ZeroValue("a subsection cannot contain a zero quantity");
    g.append_row(u.dimension().exponents());
    values.push_back(u.value());
  }

  // Every integer relation among the dimensions must hold among the values.
  IntMatrix relations = kernel_basis(g);
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    Scalar prod = 1;
    for (std::size_t j = 0; j < values.size(); ++j) prod *= power(values[j], relations(i, j));
    if (prod != 1) {
      std::string msg = "no coherent section satisfies the relation";
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (relations(i, j) == 0) continue;
        msg += " (" + format(units[j]) + ")^" + relations(i, j).get_str();
      }
      msg += " = 1";
      throw ConflictingSection(msg);
    }
  }

  Subgroup e(basis, g);
  QuotientStructure qs = quotient_structure(e);
  if (!qs.is_free()) throw TorsionQuotient(qs.torsion);

  const std::size_t r = e.rank();
  HnfResult h = hnf_with_transform(g);
  std::vector<Scalar> basis_values(r);
  for (std::size_t j = 0; j < r; ++j) {
    Scalar v = 1;
    for (std::size_t i = 0; i < values.size(); ++i) v *= power(values[i], h.transform(j, i));
    basis_values[j] = v;
  }

  IntMatrix complement = choose_complement(e.hnf_basis(), qs);
  auto inv = unimodular_inverse(stack(e.hnf_basis(), complement));
  if (!inv) throw InternalConsistency("adapted basis is not unimodular");

  // e_i = sum_j inv(i, j) * B_j, and character is 1 on the complement rows.
  std::vector<Scalar> generator_values(basis->rank());
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    Scalar v = 1;
    for (std::size_t j = 0; j < r; ++j) v *= power(basis_values[j], (*inv)(i, j));
    generator_values[i] = v;
  }
  return Subsection(Section(Character(basis, std::move(generator_values))), std::move(e));
}

// ---------------------------------------------------------------------------
// Quotient

QuotientSpace::QuotientSpace(QuantitySpace source, Subsection subsection,
                             QuotientStructure structure, QuantitySpace space,
                             IntMatrix complement, IntMatrix subgroup_basis,
                             IntMatrix coordinate_map)
    : source_(std::move(source)),
      subsection_(std::move(subsection)),
      structure_(std::move(structure)),
      space_(std::move(space)),
      complement_(std::move(complement)),
      subgroup_basis_(std::move(subgroup_basis)),
      coordinate_map_(std::move(coordinate_map)) {}

QuotientSpace make_quotient(const QuantitySpace& q, const Subsection& sub, std::string name) {
  if (!same_basis(q.basis_ref(), sub.subgroup().ambient())) throw BasisMismatch();
  QuotientStructure qs = quotient_structure(sub.subgroup());
  if (!qs.is_free()) throw TorsionQuotient(qs.torsion);

  const IntMatrix& h = sub.subgroup().hnf_basis();
  IntMatrix complement = choose_complement(h, qs);
  auto inv = unimodular_inverse(stack(h, complement));
  if (!inv) throw InternalConsistency("adapted basis is not unimodular");

  QuantitySpace space(name.empty() ? q.name() + "_reduced" : std::move(name),
                      derived_basis(q.basis_ref(), complement));
  if (space.rank() != q.rank() - sub.subgroup().rank())
    throw InternalConsistency("quotient rank mismatch");
  return QuotientSpace(q, sub, std::move(qs), std::move(space), std::move(complement), h,
                       std::move(*inv));
}

Dimension QuotientSpace::project(const Dimension& d) const {
  if (!same_basis(source_.basis_ref(), d.basis_ref())) throw BasisMismatch();
  IntVector c = multiply(d.exponents(), coordinate_map_);
  const auto r = static_cast<std::ptrdiff_t>(subgroup_basis_.rows());
  return Dimension(space_.basis_ref(), IntVector(c.begin() + r, c.end()));
}

Quantity QuotientSpace::reduce(const Quantity& q) const {
  if (!source_.contains(q)) throw BasisMismatch();
  IntVector c = multiply(q.dimension().exponents(), coordinate_map_);
  const std::size_t r = subgroup_basis_.rows();
  IntVector along(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
  Dimension e(source_.basis_ref(), multiply(along, subgroup_basis_));
  Scalar value = q.value() / subsection_.section().character()(e);
  return Quantity(std::move(value),
                  Dimension(space_.basis_ref(),
                            IntVector(c.begin() + static_cast<std::ptrdiff_t>(r), c.end())));
}

Dimension QuotientSpace::lift(const Dimension& d) const {
  if (!same_basis(space_.basis_ref(), d.basis_ref())) throw BasisMismatch();
  return Dimension(source_.basis_ref(), multiply(d.exponents(), complement_));
}

Quantity QuotientSpace::lift(const Quantity& q) const { return Quantity(q.value(), lift(q.dimension())); }

// ---------------------------------------------------------------------------
// Tensor product

TensorSpace tensor(const QuantitySpace& q, const QuantitySpace& r, NameClash clash,
                   std::string name) {
  const auto& a = q.basis().generators();
  const auto& b = r.basis().generators();
  std::vector<std::string> names;
  bool clashes = std::any_of(a.begin(), a.end(), [&](const std::string& n) {
    return std::find(b.begin(), b.end(), n) != b.end();
  });
  if (clashes && clash == NameClash::Reject) {
    for (const auto& n : a)
      if (std::find(b.begin(), b.end(), n) != b.end()) throw NameCollision(n);
  }
  for (const auto& n : a) names.push_back(clashes ? q.name() + "." + n : n);
  for (const auto& n : b) names.push_back(clashes ? r.name() + "." + n : n);
  // make_basis rejects names that still collide (equal space names).
  QuantitySpace product(name.empty() ? q.name() + "_x_" + r.name() : std::move(name),
                        make_basis(std::move(names)));
  return TensorSpace{q, r, std::move(product)};
}

Quantity tensor_element(const TensorSpace& t, const Quantity& q, const Quantity& r) {
  if (!t.left.contains(q) || !t.right.contains(r))
    throw SpaceMismatch("tensor factors do not belong to the factor spaces");
  IntVector e = q.dimension().exponents();
  const auto& f = r.dimension().exponents();
  e.insert(e.end(), f.begin(), f.end());
  return Quantity(q.value() * r.value(), Dimension(t.product.basis_ref(), std::move(e)));
}

Quantity embed_left(const TensorSpace& t, const Quantity& q) {
  return tensor_element(t, q, t.right.one());
}

Quantity embed_right(const TensorSpace& t, const Quantity& r) {
  return tensor_element(t, t.left.one(), r);
}

}  // namespace qcalc
