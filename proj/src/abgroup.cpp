#include "dualcx/abgroup.hpp"

#include <algorithm>
#include <sstream>

namespace dualcx {

TorsionVector TorsionVector::reduce(Integer modulus, std::vector<Integer> lift) {
  if (modulus < 1) throw Error("torsion vector modulus must be >= 1");
  for (Integer& c : lift) c = mod_reduce(c, modulus);
  return TorsionVector{std::move(modulus), std::move(lift)};
}

bool TorsionVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Integer& c) { return c == 0; });
}

namespace {

void require_compatible(const TorsionVector& a, const TorsionVector& b) {
  if (a.modulus != b.modulus || a.coords.size() != b.coords.size()) {
    throw DimensionMismatchError("torsion vectors live in different groups");
  }
}

}  // namespace

TorsionVector operator+(const TorsionVector& a, const TorsionVector& b) {
  require_compatible(a, b);
  TorsionVector out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = mod_reduce(out.coords[i] + b.coords[i], out.modulus);
  }
  return out;
}

TorsionVector operator-(const TorsionVector& a, const TorsionVector& b) {
  require_compatible(a, b);
  TorsionVector out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = mod_reduce(out.coords[i] - b.coords[i], out.modulus);
  }
  return out;
}

FiniteAbelianSubgroup::FiniteAbelianSubgroup(Integer modulus, int ambient)
    : modulus_(std::move(modulus)), ambient_(ambient) {
  if (modulus_ < 1) throw Error("subgroup modulus must be >= 1");
  if (ambient_ < 0) throw Error("ambient rank must be >= 0");
}

Integer FiniteAbelianSubgroup::exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::string FiniteAbelianSubgroup::structure_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << " + ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

nlohmann::ordered_json FiniteAbelianSubgroup::to_json() const {
  nlohmann::ordered_json j;
  j["modulus"] = to_int64(modulus_);
  j["ambient"] = ambient_;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const TorsionVector& g : generators_) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const Integer& c : g.coords) coords.push_back(to_int64(c));
    gens.push_back(std::move(coords));
  }
  j["generators"] = std::move(gens);
  return j;
}

FiniteAbelianSubgroup FiniteAbelianSubgroup::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("ambient") ||
      !j.contains("generators")) {
    throw ParseError("subgroup: expected {\"modulus\", \"ambient\", \"generators\"}");
  }
  if (!j["modulus"].is_number_integer() || !j["ambient"].is_number_integer() ||
      !j["generators"].is_array()) {
    throw ParseError("subgroup: field types are wrong");
  }
  Integer m = j["modulus"].get<std::int64_t>();
  int ambient = j["ambient"].get<int>();
  if (m < 1) throw ParseError("subgroup: modulus must be >= 1");
  if (ambient < 0) throw ParseError("subgroup: ambient rank must be >= 0");
  std::vector<TorsionVector> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != static_cast<std::size_t>(ambient)) {
      throw ParseError("subgroup: each generator must list `ambient` residues");
    }
    std::vector<Integer> coords;
    for (const auto& c : g) {
      if (!c.is_number_integer()) throw ParseError("subgroup: residues must be integers");
      coords.emplace_back(c.get<std::int64_t>());
    }
    gens.push_back(TorsionVector::reduce(m, std::move(coords)));
  }
  return subgroup_structure(std::move(gens), m, ambient);
}

namespace {

// Columns spanning the lift lattice of the group: generator lifts followed
// by m * (standard basis).
IntMatrix lift_lattice_columns(const std::vector<TorsionVector>& generators,
                               const Integer& modulus, int ambient) {
  std::size_t n = static_cast<std::size_t>(ambient);
  IntMatrix a(n, generators.size() + n);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) a.at(i, j) = generators[j].coords[i];
  }
  for (std::size_t i = 0; i < n; ++i) a.at(i, generators.size() + i) = modulus;
  return a;
}

}  // namespace

FiniteAbelianSubgroup subgroup_structure(std::vector<TorsionVector> generators,
                                         const Integer& modulus, int ambient) {
  if (modulus < 1) throw Error("subgroup modulus must be >= 1");
  if (ambient < 0) throw Error("ambient rank must be >= 0");
  for (TorsionVector& g : generators) {
    if (g.modulus != modulus || g.coords.size() != static_cast<std::size_t>(ambient)) {
      throw DimensionMismatchError("generator does not live in (Z/m)^N");
    }
    for (Integer& c : g.coords) c = mod_reduce(c, modulus);
  }

  // Lattice L spanned by the generator lifts together with m*Z^N; the group
  // is L / m*Z^N, isomorphic to ⊕_i Z/(m/d_i) for the SNF diagonal d of L.
  IntMatrix lattice = lift_lattice_columns(generators, modulus, ambient);
  std::vector<Integer> diag = smith_normal_form(lattice).diagonal_entries();
  std::vector<Integer> quotients;
  for (const Integer& d : diag) {
    if (d == 0) throw Error("lift lattice unexpectedly degenerate");
    quotients.push_back(modulus / d);
  }
  FiniteAbelianSubgroup out(modulus, ambient);
  out.generators_ = std::move(generators);
  out.factors_ = invariant_factor_chain(quotients);
  out.order_ = 1;
  for (const Integer& f : out.factors_) out.order_ *= f;
  return out;
}

bool contains(const FiniteAbelianSubgroup& group, const TorsionVector& element) {
  if (element.modulus != group.modulus() ||
      element.coords.size() != static_cast<std::size_t>(group.ambient())) {
    throw DimensionMismatchError("element does not live in the group's ambient");
  }
  IntMatrix lattice =
      [&] {
        std::size_t n = static_cast<std::size_t>(group.ambient());
        IntMatrix a(n, group.generators().size() + n);
        for (std::size_t j = 0; j < group.generators().size(); ++j) {
          for (std::size_t i = 0; i < n; ++i) a.at(i, j) = group.generators()[j].coords[i];
        }
        for (std::size_t i = 0; i < n; ++i) a.at(i, group.generators().size() + i) = group.modulus();
        return a;
      }();
  return lattice_contains(lattice, element.coords);
}

FiniteAbelianSubgroup intersect_with_span(const FiniteAbelianSubgroup& group,
                                          const IntMatrix& span_columns) {
  std::size_t n = static_cast<std::size_t>(group.ambient());
  if (span_columns.rows() != n) {
    throw DimensionMismatchError("span columns must have `ambient` rows");
  }
  const auto& gens = group.generators();
  std::size_t g = gens.size();
  std::size_t r = span_columns.cols();

  // Solve Gen*a - R*c - m*z = 0; the a-projections of the kernel hit exactly
  // the elements of the group congruent to a span combination.
  IntMatrix system(n, g + r + n);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < n; ++i) system.at(i, j) = gens[j].coords[i];
  }
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < n; ++i) system.at(i, g + j) = span_columns.at(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) system.at(i, g + r + i) = group.modulus();

  IntMatrix kernel = integer_kernel(system);
  std::vector<TorsionVector> new_gens;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    std::vector<Integer> coords(n, Integer(0));
    for (std::size_t j = 0; j < g; ++j) {
      const Integer& a = kernel.at(j, k);
      if (a == 0) continue;
      for (std::size_t i = 0; i < n; ++i) coords[i] += a * gens[j].coords[i];
    }
    TorsionVector elem = TorsionVector::reduce(group.modulus(), std::move(coords));
    if (!elem.is_zero()) new_gens.push_back(std::move(elem));
  }
  return subgroup_structure(std::move(new_gens), group.modulus(), group.ambient());
}

FiniteAbelianSubgroup equal_character_kernel(const std::vector<TorsionVector>& characters,
                                             const std::vector<int>& support,
                                             const Integer& modulus, int group_rank) {
  if (support.empty()) throw Error("equal_character_kernel: empty support");
  for (int i : support) {
    if (i < 0 || static_cast<std::size_t>(i) >= characters.size()) {
      throw Error("equal_character_kernel: support index out of range");
    }
  }
  for (const TorsionVector& chi : characters) {
    if (chi.modulus != modulus || chi.coords.size() != static_cast<std::size_t>(group_rank)) {
      throw DimensionMismatchError("character does not live in (Z/m)^r");
    }
  }
  if (support.size() == 1) {
    return subgroup_structure(standard_generators(modulus, group_rank), modulus, group_rank);
  }

  std::size_t r = static_cast<std::size_t>(group_rank);
  std::size_t s = support.size();
  // Rows are the character differences χ_i - χ_{i0}; kernel mod m of this
  // matrix is the equalizer subgroup.
  IntMatrix system(s - 1, r + (s - 1));
  const TorsionVector& base = characters[support.front()];
  for (std::size_t row = 0; row + 1 < s; ++row) {
    const TorsionVector& chi = characters[support[row + 1]];
    for (std::size_t j = 0; j < r; ++j) {
      system.at(row, j) = chi.coords[j] - base.coords[j];
    }
    system.at(row, r + row) = modulus;
  }
  IntMatrix kernel = integer_kernel(system);
  std::vector<TorsionVector> gens;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    std::vector<Integer> coords(r);
    for (std::size_t j = 0; j < r; ++j) coords[j] = kernel.at(j, k);
    TorsionVector elem = TorsionVector::reduce(modulus, std::move(coords));
    if (!elem.is_zero()) gens.push_back(std::move(elem));
  }
  return subgroup_structure(std::move(gens), modulus, group_rank);
}

std::vector<TorsionVector> standard_generators(const Integer& modulus, int ambient) {
  std::vector<TorsionVector> out;
  for (int i = 0; i < ambient; ++i) {
    std::vector<Integer> coords(ambient, Integer(0));
    coords[i] = 1;
    out.push_back(TorsionVector::reduce(modulus, std::move(coords)));
  }
  return out;
}

bool is_subgroup_of(const FiniteAbelianSubgroup& a, const FiniteAbelianSubgroup& b) {
  for (const TorsionVector& g : a.generators()) {
    if (!contains(b, g)) return false;
  }
  return true;
}

bool same_subgroup(const FiniteAbelianSubgroup& a, const FiniteAbelianSubgroup& b) {
  return a.order() == b.order() && is_subgroup_of(a, b);
}

FiniteAbelianSubgroup rescale_modulus(const FiniteAbelianSubgroup& group,
                                      const Integer& new_modulus) {
  if (new_modulus < 1 || new_modulus % group.modulus() != 0) {
    throw Error("rescale_modulus: new modulus must be a multiple of the old one");
  }
  Integer scale = new_modulus / group.modulus();
  std::vector<TorsionVector> gens;
  for (const TorsionVector& g : group.generators()) {
    std::vector<Integer> coords = g.coords;
    for (Integer& c : coords) c *= scale;
    gens.push_back(TorsionVector::reduce(new_modulus, std::move(coords)));
  }
  return subgroup_structure(std::move(gens), new_modulus, group.ambient());
}

}  // namespace dualcx
