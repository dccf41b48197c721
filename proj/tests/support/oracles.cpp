#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracles {

using dualcx::Integer;
using dualcx::IntMatrix;

namespace {

// Determinant by cofactor expansion along the first row; fine for the tiny
// minors this oracle handles.
Integer det_recursive(const IntMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  std::size_t n = rows.size();
  if (n == 0) return 1;
  if (n == 1) return m.at(rows[0], cols[0]);
  Integer out = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& pivot = m.at(rows[0], cols[j]);
    if (pivot == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (jj != j) sub_cols.push_back(cols[jj]);
    }
    Integer minor = det_recursive(m, sub_rows, sub_cols);
    out += (j % 2 == 0 ? pivot : -pivot) * minor;
  }
  return out;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> current;
  // iterative combination enumeration
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> snf_diagonal_by_minors(const IntMatrix& m) {
  std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<Integer> divisors(limit + 1);
  divisors[0] = 1;
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets_of_size(m.rows(), k, row_sets);
    subsets_of_size(m.cols(), k, col_sets);
    Integer g = 0;
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        g = dualcx::gcd_int(g, det_recursive(m, rows, cols));
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    divisors[k] = g;
  }
  std::vector<Integer> diag(limit);
  for (std::size_t k = 1; k <= limit; ++k) {
    if (divisors[k] == 0) {
      diag[k - 1] = 0;
    } else {
      diag[k - 1] = divisors[k] / divisors[k - 1];
    }
  }
  return diag;
}

std::set<std::vector<std::int64_t>> enumerate_subgroup(
    const std::vector<std::vector<std::int64_t>>& generators, std::int64_t m) {
  std::size_t n = generators.empty() ? 0 : generators.front().size();
  std::vector<std::int64_t> zero(n, 0);
  std::set<std::vector<std::int64_t>> elements{zero};
  std::vector<std::vector<std::int64_t>> frontier{zero};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        std::vector<std::int64_t> sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = (e[i] + g[i]) % m;
        if (elements.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return elements;
}

std::int64_t element_order(const std::vector<std::int64_t>& v, std::int64_t m) {
  std::vector<std::int64_t> acc(v.size(), 0);
  for (std::int64_t k = 1; k <= m; ++k) {
    bool zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc[i] = (acc[i] + v[i]) % m;
      if (acc[i] != 0) zero = false;
    }
    if (zero) return k;
  }
  return m;  // unreachable for valid input
}

std::vector<std::int64_t> order_statistics_of_product(const std::vector<std::int64_t>& factors) {
  std::vector<std::int64_t> orders{1};
  for (std::int64_t f : factors) {
    std::vector<std::int64_t> next;
    for (std::int64_t existing : orders) {
      for (std::int64_t r = 0; r < f; ++r) {
        std::int64_t o = r == 0 ? 1 : f / std::gcd(f, r);
        next.push_back(std::lcm(existing, o));
      }
    }
    orders = std::move(next);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::int64_t> order_statistics_of_elements(
    const std::set<std::vector<std::int64_t>>& elements, std::int64_t m) {
  std::vector<std::int64_t> orders;
  for (const auto& e : elements) orders.push_back(element_order(e, m));
  std::sort(orders.begin(), orders.end());
  return orders;
}

int min_generator_count_upto_2(const std::set<std::vector<std::int64_t>>& elements,
                               std::int64_t m) {
  if (elements.size() == 1) return 0;
  std::vector<std::vector<std::int64_t>> all(elements.begin(), elements.end());
  for (const auto& g : all) {
    if (enumerate_subgroup({g}, m) == elements) return 1;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (enumerate_subgroup({all[i], all[j]}, m) == elements) return 2;
    }
  }
  return 3;
}

std::size_t gf2_rank(const IntMatrix& m) {
  std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a[i][j] = static_cast<int>(dualcx::mod_reduce(m.at(i, j), 2).convert_to<int>());
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != rank && a[i][col] == 1) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> gf2_betti(const dualcx::QuasiComplex& k) {
  dualcx::ChainComplexData data = dualcx::boundary_matrices(k);
  int dim = k.dimension();
  if (dim < 0) return {};
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);
  for (int d = 1; d <= dim; ++d) {
    ranks[static_cast<std::size_t>(d)] = gf2_rank(data.boundary[static_cast<std::size_t>(d)]);
  }
  std::vector<std::int64_t> betti;
  for (int d = 0; d <= dim; ++d) {
    std::int64_t cells =
        static_cast<std::int64_t>(data.cells_by_dim[static_cast<std::size_t>(d)].size());
    betti.push_back(cells - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d)]) -
                    static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d + 1)]));
  }
  return betti;
}

bool boundary_squares_to_zero(const dualcx::QuasiComplex& k) {
  dualcx::ChainComplexData data = dualcx::boundary_matrices(k);
  for (std::size_t d = 2; d < data.boundary.size(); ++d) {
    if (!(data.boundary[d - 1] * data.boundary[d]).is_zero()) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo,
                        int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  }
  return m;
}

}  // namespace oracles
