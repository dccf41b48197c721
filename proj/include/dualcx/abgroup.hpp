#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/snf.hpp"

namespace dualcx {

// Element of (Z/m)^N in reduced residue form.
struct TorsionVector {
  Integer modulus;              // m >= 1
  std::vector<Integer> coords;  // residues in [0, m)

  static TorsionVector reduce(Integer modulus, std::vector<Integer> lift);

  bool is_zero() const;
  bool operator==(const TorsionVector&) const = default;
};

TorsionVector operator+(const TorsionVector& a, const TorsionVector& b);
TorsionVector operator-(const TorsionVector& a, const TorsionVector& b);

// Subgroup of (Z/m)^N stored by generators; structural data (invariant
// factors, order, rank) is derived once at construction and immutable.
class FiniteAbelianSubgroup {
 public:
  // Trivial subgroup.
  FiniteAbelianSubgroup(Integer modulus, int ambient);

  const Integer& modulus() const { return modulus_; }
  int ambient() const { return ambient_; }
  const std::vector<TorsionVector>& generators() const { return generators_; }
  // Ascending divisibility chain, entries > 1.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const Integer& order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  bool is_trivial() const { return factors_.empty(); }
  // Largest invariant factor (1 for the trivial group): the least modulus
  // that the group actually needs.
  Integer exponent() const;

  std::string structure_string() const;  // e.g. "Z/2 + Z/4", "0" when trivial

  nlohmann::ordered_json to_json() const;
  static FiniteAbelianSubgroup from_json(const nlohmann::json& j);

  friend FiniteAbelianSubgroup subgroup_structure(std::vector<TorsionVector> generators,
                                                  const Integer& modulus, int ambient);

 private:
  Integer modulus_;
  int ambient_ = 0;
  std::vector<TorsionVector> generators_;
  std::vector<Integer> factors_;
  Integer order_ = 1;
};

// Structure of the subgroup generated by `generators` inside (Z/m)^ambient.
FiniteAbelianSubgroup subgroup_structure(std::vector<TorsionVector> generators,
                                         const Integer& modulus, int ambient);

bool contains(const FiniteAbelianSubgroup& group, const TorsionVector& element);

// {g in group : g is congruent mod m to an integer combination of the
// columns of span_columns}. span_columns must have `ambient` rows.
FiniteAbelianSubgroup intersect_with_span(const FiniteAbelianSubgroup& group,
                                          const IntMatrix& span_columns);

// {g in (Z/m)^group_rank : characters agree on g across `support`},
// computed as a kernel mod m of character differences.
FiniteAbelianSubgroup equal_character_kernel(const std::vector<TorsionVector>& characters,
                                             const std::vector<int>& support,
                                             const Integer& modulus, int group_rank);

// Standard generators e_1..e_N of the full group (Z/m)^N.
std::vector<TorsionVector> standard_generators(const Integer& modulus, int ambient);

bool is_subgroup_of(const FiniteAbelianSubgroup& a, const FiniteAbelianSubgroup& b);
bool same_subgroup(const FiniteAbelianSubgroup& a, const FiniteAbelianSubgroup& b);

// The same group of residue vectors read inside (Z/m')^N for a multiple m'
// of the modulus; generators are scaled by m'/m.
FiniteAbelianSubgroup rescale_modulus(const FiniteAbelianSubgroup& group,
                                      const Integer& new_modulus);

}  // namespace dualcx
