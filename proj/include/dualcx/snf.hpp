#pragma once

#include <vector>

#include "dualcx/int_matrix.hpp"

namespace dualcx {

// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
// nonnegative, each entry dividing the next.
struct SnfDecomposition {
  IntMatrix left;      // U, rows x rows
  IntMatrix diagonal;  // D, same shape as the input
  IntMatrix right;     // V, cols x cols

  std::vector<Integer> diagonal_entries() const;
  std::size_t rank() const;  // number of nonzero diagonal entries
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : A x = 0}, returned as columns.
IntMatrix integer_kernel(const IntMatrix& a);

// Whether target lies in the lattice spanned by the columns of `columns`.
bool lattice_contains(const IntMatrix& columns, const std::vector<Integer>& target);

// Invariant factors of ⊕_i Z/moduli[i]: ascending divisibility chain with
// trivial factors dropped. All moduli must be >= 1.
std::vector<Integer> invariant_factor_chain(const std::vector<Integer>& moduli);

}  // namespace dualcx
