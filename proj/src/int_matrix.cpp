#include "dualcx/int_matrix.hpp"

namespace dualcx {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols) {
  std::size_t c = cols.size();
  std::size_t r = c == 0 ? 0 : cols.front().size();
  IntMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (cols[j].size() != r) throw Error("ragged column list");
    for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  std::vector<Integer> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Integer& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMatrix::add_multiple_of_row(std::size_t dst, std::size_t src,
                                    const Integer& factor) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_multiple_of_col(std::size_t dst, std::size_t src,
                                    const Integer& factor) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += factor * at(i, src);
}

IntMatrix IntMatrix::augmented(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw Error("augmented: row counts differ");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product: shape mismatch");
  IntMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        m.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return m;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
  if (cols_ != v.size()) throw Error("matrix-vector product: shape mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot == k) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: exact division by the previous pivot.
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace dualcx
