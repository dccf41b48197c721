#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/int_matrix.hpp"
#include "dualcx/quasicomplex.hpp"

namespace dualcx {

// Boundary matrices of the simplicial chain complex. boundary[k] maps
// k-chains to (k-1)-chains; columns follow cells_by_dim[k] (ids ascending),
// rows follow cells_by_dim[k-1]. boundary[0] is the empty 0 x f_0 matrix.
struct ChainComplexData {
  std::vector<IntMatrix> boundary;
  std::vector<std::vector<CellId>> cells_by_dim;
};

ChainComplexData boundary_matrices(const QuasiComplex& k);

// Z^betti ⊕ ⊕_i Z/torsion[i] in one homology degree.
struct HomologyGroup {
  int degree = 0;
  std::int64_t betti = 0;
  std::vector<Integer> torsion;  // ascending divisibility, entries > 1

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  bool is_free_of_rank(std::int64_t r) const { return betti == r && torsion.empty(); }

  std::string to_string() const;  // "0", "Z", "Z^2 ⊕ Z/3", ...
  nlohmann::ordered_json to_json() const;

  bool operator==(const HomologyGroup&) const = default;
};

// Unreduced integral homology in one degree (H_0 of a point is Z).
HomologyGroup homology(const QuasiComplex& k, int degree);

// All degrees 0..dim(k); empty for the empty complex.
std::vector<HomologyGroup> homology_table(const QuasiComplex& k);

// The degree-(n-1) group compared against the toric reference value. For
// n >= 2 this is homology(k, n-1). For n == 1 the reduced group in degree 0
// is returned, so that the reference value stays Z for every n; callers
// reporting to humans should surface homology(k, 0) alongside.
HomologyGroup top_invariant(const QuasiComplex& k, int variety_dim);

}  // namespace dualcx
