#include "dualcx/snf.hpp"

#include <algorithm>

namespace dualcx {

std::vector<Integer> SnfDecomposition::diagonal_entries() const {
  std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diagonal.at(i, i);
  return out;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (const Integer& d : diagonal_entries()) {
    if (d != 0) ++r;
  }
  return r;
}

namespace {

// Moves the entry of smallest nonzero absolute value in the trailing block
// a[t.., t..] to position (t, t). Returns false when the block is zero.
bool move_min_pivot(IntMatrix& a, IntMatrix& u, IntMatrix& v, std::size_t t) {
  std::size_t pr = t, pc = t;
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& e = a.at(i, j);
      if (e == 0) continue;
      Integer mag = abs_int(e);
      if (!found || mag < best) {
        found = true;
        best = mag;
        pr = i;
        pc = j;
      }
    }
  }
  if (!found) return false;
  if (pr != t) {
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
  }
  if (pc != t) {
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);
  }
  return true;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  SnfDecomposition out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& a = out.diagonal;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;
  const std::size_t limit = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    if (!move_min_pivot(a, u, v, t)) break;  // trailing block is zero
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = div_nearest(a.at(i, t), a.at(t, t));
        a.add_multiple_of_row(i, t, -q);
        u.add_multiple_of_row(i, t, -q);
        if (a.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = div_nearest(a.at(t, j), a.at(t, t));
        a.add_multiple_of_col(j, t, -q);
        v.add_multiple_of_col(j, t, -q);
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        move_min_pivot(a, u, v, t);
        continue;
      }
      // Pivot now isolated; enforce divisibility over the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i) {
        for (std::size_t j = t + 1; j < a.cols() && !fixed; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_multiple_of_row(t, i, 1);
            u.add_multiple_of_row(t, i, 1);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SnfDecomposition snf = smith_normal_form(a);
  std::vector<Integer> diag = snf.diagonal_entries();
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j >= diag.size() || diag[j] == 0) kernel_cols.push_back(j);
  }
  IntMatrix out(a.cols(), kernel_cols.size());
  for (std::size_t k = 0; k < kernel_cols.size(); ++k) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      out.at(i, k) = snf.right.at(i, kernel_cols[k]);
    }
  }
  return out;
}

bool lattice_contains(const IntMatrix& columns, const std::vector<Integer>& target) {
  if (columns.rows() != target.size()) {
    throw Error("lattice_contains: dimension mismatch");
  }
  SnfDecomposition snf = smith_normal_form(columns);
  std::vector<Integer> c = snf.left * target;
  std::vector<Integer> diag = snf.diagonal_entries();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) {
      if (c[i] != 0) return false;
    } else if (c[i] % d != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Integer> invariant_factor_chain(const std::vector<Integer>& moduli) {
  for (const Integer& m : moduli) {
    if (m < 1) throw Error("invariant_factor_chain: moduli must be >= 1");
  }
  IntMatrix diag(moduli.size(), moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) diag.at(i, i) = moduli[i];
  std::vector<Integer> out;
  for (const Integer& d : smith_normal_form(diag).diagonal_entries()) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

}  // namespace dualcx
