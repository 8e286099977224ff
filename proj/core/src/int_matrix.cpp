#include "qcalc/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::set_row(std::size_t r, const IntVector& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

void IntMatrix::append_row(const IntVector& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::top_rows(std::size_t n) const { return row_range(0, n); }

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t last) const {
  if (first > last || last > rows_) throw std::out_of_range("row range");
  IntMatrix m(last - first, cols_);
  for (std::size_t r = first; r < last; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - first, c) = (*this)(r, c);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntVector multiply(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
  IntVector out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  // Gauss-Jordan over the rationals; exact, and n is small.
  std::vector<Scalar> a(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = m(r, c);
    at(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    Scalar pivot = at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || at(r, c) == 0) continue;
      Scalar f = at(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(r, j) -= f * at(c, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& v = at(r, n + c);
      if (v.get_den() != 1) return std::nullopt;
      inv(r, c) = v.get_num();
    }
  return inv;
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ", ";
      out += m(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace qcalc
