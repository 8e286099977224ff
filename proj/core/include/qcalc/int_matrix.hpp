#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/scalar.hpp"

namespace qcalc {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero-sized
/// dimensions are valid.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// All rows must have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  void set_row(std::size_t r, const IntVector& values);
  void append_row(const IntVector& values);
  IntMatrix top_rows(std::size_t n) const;
  IntMatrix row_range(std::size_t first, std::size_t last) const;

  // Elementary operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix: v · m.
IntVector multiply(const IntVector& v, const IntMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination. Square only.
Integer determinant(const IntMatrix& m);

/// Inverse of a square matrix with determinant +-1; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace qcalc
