#pragma once

#include <cstddef>
#include <vector>

#include "dualcx/integer.hpp"

namespace dualcx {

// Dense matrix of exact integers. Row-major, value semantics.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;

  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  // row[dst] += factor * row[src]
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Integer& factor);
  void add_multiple_of_col(std::size_t dst, std::size_t src, const Integer& factor);

  // Horizontal concatenation [*this | other]; row counts must match.
  IntMatrix augmented(const IntMatrix& other) const;

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Integer> operator*(const std::vector<Integer>& v) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant via fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

}  // namespace dualcx
