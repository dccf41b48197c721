#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/abgroup.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/quasicomplex.hpp"

namespace dualcx {

// Diagonal action of (Z/m)^r on the degree-d hypersurface
// {sum_i a_i x_i^d = 0} in P^(n+1), all a_i nonzero. characters[i] is the
// exponent vector of the character acting on coordinate x_i.
struct DiagonalHypersurfaceAction {
  int dimension = 0;  // n
  int degree = 1;     // d
  Integer modulus = 1;
  int group_rank = 0;  // r
  std::vector<TorsionVector> characters;  // n + 2 entries in (Z/m)^r

  int coordinate_count() const { return dimension + 2; }

  nlohmann::ordered_json to_json() const;
  static DiagonalHypersurfaceAction from_json(const nlohmann::json& j);
};

// Diagonal action on the Fermat-type hypersurface with trivial characters
// on x_0, x_1 and independent characters on the rest; modulus must divide
// d (defaults to the least prime factor).
DiagonalHypersurfaceAction canonical_fermat_action(int n, int d, Integer modulus = 0);

struct ActionValidation {
  std::vector<std::string> violations;
  // Rank of the acting image in PGL (rank of the subgroup generated by the
  // character differences).
  int effective_rank = 0;
  bool full_rank = false;  // effective_rank == n

  bool ok() const { return violations.empty(); }
};

// Checks the invariance condition d*χ_i ≡ d*χ_j (mod m), projective
// faithfulness, and elementary shape constraints.
ActionValidation validate_action(const DiagonalHypersurfaceAction& action);

// Coordinate stratum: the locus where exactly the coordinates in `support`
// may be nonzero, cut by the hypersurface. |support| >= 2.
struct Stratum {
  std::vector<int> support;
  int dim = 0;         // |support| - 2
  int codim_in_x = 0;  // n + 2 - |support|
  FiniteAbelianSubgroup stabilizer;
  int component_count = 1;  // d when |support| == 2, else 1
};

// Stabilizer of a generic point with exactly the coordinates in `support`
// nonzero.
FiniteAbelianSubgroup stratum_stabilizer(const DiagonalHypersurfaceAction& action,
                                         const std::vector<int>& support);

// All strata with stabilizer rank equal to their codimension (>= 1), in
// lexicographic support order. Runs the decomposition consistency checks
// and throws InconsistentGeometryError on violation.
std::vector<Stratum> enumerate_maximal_rank_strata(const DiagonalHypersurfaceAction& action);

struct HypersurfaceDualComplex {
  QuasiComplex complex;
  std::vector<Stratum> strata;
  std::map<std::vector<int>, std::vector<CellId>> stratum_cells;
};

// Dual complex: each maximal rank stratum of codimension k contributes
// component_count (k-1)-simplices, glued along the cells of the strata
// containing it.
HypersurfaceDualComplex dual_complex_hypersurface(const DiagonalHypersurfaceAction& action);

enum class Verdict {
  Obstructed,     // invariant differs from the toric reference value Z
  NoObstruction,  // invariant equals Z
  Inconclusive,   // acting rank != n, invariant vacuous
};

std::string verdict_name(Verdict v);

struct LinearizabilityReport {
  Verdict verdict = Verdict::Inconclusive;
  HomologyGroup invariant;  // reduced in degree 0 when n == 1
  std::optional<HomologyGroup> unreduced_degree_zero;  // set when n == 1
  int effective_rank = 0;
  bool full_rank = false;
  std::vector<std::string> notes;

  // {"verdict", "invariant", "reference_value"}
  nlohmann::ordered_json to_json() const;
};

// Builds the dual complex, computes the degree-(n-1) invariant and compares
// it against the reference value Z of full-rank torus actions. Requires a
// spec that passes validate_action (throws InvalidActionError otherwise).
LinearizabilityReport linearizability_report(const DiagonalHypersurfaceAction& action);

}  // namespace dualcx
