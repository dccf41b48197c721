#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/abgroup.hpp"
#include "dualcx/quasicomplex.hpp"

namespace dualcx {

// Fan of a smooth toric variety: primitive rays and simplicial smooth
// cones, given by their maximal cones as ray index sets. Completeness and
// projectivity are user assertions carried along, never verified.
struct Fan {
  int rank = 0;
  std::vector<std::vector<Integer>> rays;
  std::vector<std::vector<int>> max_cones;  // sorted ray indices
  bool asserted_complete = false;
  bool asserted_projective = false;

  nlohmann::ordered_json to_json() const;
  static Fan from_json(const nlohmann::json& j);

  static Fan projective_space(int n);
  static Fan p1_times_p1();
};

// Violations of primitivity, simpliciality or unimodularity, plus a ray
// containment scan across pairs of cones. Empty report = smooth input.
std::vector<std::string> check_smooth(const Fan& fan);

// Every nonempty face of the fan, sorted by (size, lex).
std::vector<std::vector<int>> fan_faces(const Fan& fan);

// Whether `cone` (sorted ray indices, possibly empty) is a face of a
// maximal cone.
bool is_face(const Fan& fan, const std::vector<int>& cone);

// Subgroup of `group` fixing the orbit of `cone` pointwise: elements
// congruent mod m to integer combinations of the cone's rays. The zero
// cone yields the trivial group.
FiniteAbelianSubgroup cone_stabilizer(const Fan& fan, const std::vector<int>& cone,
                                      const FiniteAbelianSubgroup& group);

struct ToricDualComplex {
  QuasiComplex complex;
  std::map<int, VertexId> ray_vertices;           // rays with nontrivial stabilizer
  std::map<std::vector<int>, CellId> cone_cells;  // cones of maximal stabilizer rank
};

// Dual complex of the action: one (k-1)-simplex per k-dimensional cone
// whose stabilizer has rank k.
ToricDualComplex dual_complex_toric(const Fan& fan, const FiniteAbelianSubgroup& group);

// Fan of the blowup of the orbit closure of `cone`: inserts the ray equal
// to the sum of the cone's primitive generators and star-subdivides every
// maximal cone containing it. Requires dim(cone) >= 2.
Fan star_subdivision(const Fan& fan, const std::vector<int>& cone);

}  // namespace dualcx
