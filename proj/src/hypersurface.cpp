#include "dualcx/hypersurface.hpp"

#include <algorithm>
#include <sstream>

namespace dualcx {

namespace {

std::string support_name(const std::vector<int>& support) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i > 0) os << ",";
    os << support[i];
  }
  os << "}";
  return os.str();
}

Integer least_prime_factor(int d) {
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) return p;
  }
  return d;
}

}  // namespace

nlohmann::ordered_json DiagonalHypersurfaceAction::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = dimension;
  j["d"] = degree;
  j["modulus"] = to_int64(modulus);
  j["group_rank"] = group_rank;
  nlohmann::ordered_json chars = nlohmann::ordered_json::array();
  for (const TorsionVector& chi : characters) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (const Integer& v : chi.coords) c.push_back(to_int64(v));
    chars.push_back(std::move(c));
  }
  j["characters"] = std::move(chars);
  return j;
}

DiagonalHypersurfaceAction DiagonalHypersurfaceAction::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("modulus") ||
      !j.contains("group_rank") || !j.contains("characters")) {
    throw ParseError(
        "action: expected {\"n\", \"d\", \"modulus\", \"group_rank\", \"characters\"}");
  }
  if (!j["n"].is_number_integer() || !j["d"].is_number_integer() ||
      !j["modulus"].is_number_integer() || !j["group_rank"].is_number_integer() ||
      !j["characters"].is_array()) {
    throw ParseError("action: field types are wrong");
  }
  DiagonalHypersurfaceAction a;
  a.dimension = j["n"].get<int>();
  a.degree = j["d"].get<int>();
  a.modulus = j["modulus"].get<std::int64_t>();
  a.group_rank = j["group_rank"].get<int>();
  if (a.modulus < 1) throw ParseError("action: modulus must be >= 1");
  if (a.group_rank < 0) throw ParseError("action: group_rank must be >= 0");
  if (j["characters"].size() != static_cast<std::size_t>(std::max(0, a.dimension + 2))) {
    throw ParseError("action: expected n + 2 characters");
  }
  for (const auto& chi : j["characters"]) {
    if (!chi.is_array() || chi.size() != static_cast<std::size_t>(a.group_rank)) {
      throw ParseError("action: each character needs `group_rank` exponents");
    }
    std::vector<Integer> coords;
    for (const auto& c : chi) {
      if (!c.is_number_integer()) throw ParseError("action: exponents must be integers");
      coords.emplace_back(c.get<std::int64_t>());
    }
    a.characters.push_back(TorsionVector::reduce(a.modulus, std::move(coords)));
  }
  return a;
}

DiagonalHypersurfaceAction canonical_fermat_action(int n, int d, Integer modulus) {
  if (n < 1) throw Error("canonical action needs n >= 1");
  if (d < 2) throw Error("canonical action needs d >= 2");
  if (modulus == 0) modulus = least_prime_factor(d);
  if (modulus < 2 || Integer(d) % modulus != 0) {
    throw Error("canonical action: modulus must divide the degree");
  }
  DiagonalHypersurfaceAction a;
  a.dimension = n;
  a.degree = d;
  a.modulus = modulus;
  a.group_rank = n;
  a.characters.push_back(
      TorsionVector::reduce(modulus, std::vector<Integer>(static_cast<std::size_t>(n), 0)));
  a.characters.push_back(a.characters.front());
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> coords(static_cast<std::size_t>(n), Integer(0));
    coords[static_cast<std::size_t>(i)] = 1;
    a.characters.push_back(TorsionVector::reduce(modulus, std::move(coords)));
  }
  return a;
}

ActionValidation validate_action(const DiagonalHypersurfaceAction& action) {
  ActionValidation out;
  if (action.dimension < 1) out.violations.push_back("n must be >= 1");
  if (action.degree < 1) out.violations.push_back("d must be >= 1");
  if (action.modulus < 1) out.violations.push_back("modulus must be >= 1");
  if (action.group_rank < 0) out.violations.push_back("group_rank must be >= 0");
  if (action.characters.size() != static_cast<std::size_t>(action.coordinate_count())) {
    out.violations.push_back("expected " + std::to_string(action.coordinate_count()) +
                             " characters, got " + std::to_string(action.characters.size()));
    return out;
  }
  for (const TorsionVector& chi : action.characters) {
    if (chi.modulus != action.modulus ||
        chi.coords.size() != static_cast<std::size_t>(action.group_rank)) {
      out.violations.push_back("character does not live in (Z/m)^r");
      return out;
    }
  }
  if (!out.violations.empty()) return out;

  // Invariance: every monomial x_i^d transforms by the same character.
  const TorsionVector& base = action.characters.front();
  for (std::size_t i = 1; i < action.characters.size(); ++i) {
    TorsionVector diff = action.characters[i] - base;
    bool ok = true;
    for (const Integer& c : diff.coords) {
      if (mod_reduce(Integer(action.degree) * c, action.modulus) != 0) ok = false;
    }
    if (!ok) {
      out.violations.push_back("invariance fails: d*(chi_" + std::to_string(i) +
                               " - chi_0) != 0 (mod m)");
    }
  }

  // Faithfulness of the projective action: no nontrivial element acts by a
  // global scalar.
  std::vector<int> all_coords(action.characters.size());
  for (std::size_t i = 0; i < all_coords.size(); ++i) all_coords[i] = static_cast<int>(i);
  FiniteAbelianSubgroup kernel = equal_character_kernel(action.characters, all_coords,
                                                        action.modulus, action.group_rank);
  if (!kernel.is_trivial()) {
    out.violations.push_back("action is not faithful: scalar kernel " +
                             kernel.structure_string());
  }

  // Rank of the image in PGL = rank of the character-difference subgroup.
  std::vector<TorsionVector> diffs;
  for (std::size_t i = 1; i < action.characters.size(); ++i) {
    diffs.push_back(action.characters[i] - base);
  }
  out.effective_rank =
      subgroup_structure(std::move(diffs), action.modulus, action.group_rank).rank();
  out.full_rank = out.effective_rank == action.dimension;
  return out;
}

FiniteAbelianSubgroup stratum_stabilizer(const DiagonalHypersurfaceAction& action,
                                         const std::vector<int>& support) {
  if (support.size() < 2) {
    throw InvalidTargetError("stratum support needs at least two coordinates");
  }
  return equal_character_kernel(action.characters, support, action.modulus,
                                action.group_rank);
}

std::vector<Stratum> enumerate_maximal_rank_strata(const DiagonalHypersurfaceAction& action) {
  int coords = action.coordinate_count();
  std::vector<Stratum> listed;
  std::map<std::vector<int>, FiniteAbelianSubgroup> divisor_stabs;

  std::vector<std::vector<int>> supports;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << coords); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < coords; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.push_back(i);
    }
    if (s.size() >= 2) supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end());

  for (const auto& support : supports) {
    FiniteAbelianSubgroup stab = stratum_stabilizer(action, support);
    int codim = coords - static_cast<int>(support.size());
    if (static_cast<int>(support.size()) == coords - 1) {
      // Generic divisor stabilizers must be cyclic for a faithful action.
      if (stab.rank() > 1) {
        throw InconsistentGeometryError("divisor stratum " + support_name(support) +
                                        " has non-cyclic stabilizer " +
                                        stab.structure_string());
      }
      divisor_stabs.emplace(support, stab);
    }
    if (codim < 1 || stab.rank() != codim) continue;
    Stratum stratum{support, static_cast<int>(support.size()) - 2, codim, stab,
                    support.size() == 2 ? action.degree : 1};
    listed.push_back(std::move(stratum));
  }

  // Decomposition check: the stabilizer of a listed stratum must be the
  // direct sum of the cyclic stabilizers of the divisors containing it.
  std::set<std::vector<int>> listed_supports;
  for (const Stratum& s : listed) listed_supports.insert(s.support);
  for (const Stratum& s : listed) {
    Integer order_product = 1;
    std::vector<TorsionVector> combined;
    for (int j = 0; j < coords; ++j) {
      if (std::binary_search(s.support.begin(), s.support.end(), j)) continue;
      std::vector<int> divisor;
      for (int i = 0; i < coords; ++i) {
        if (i != j) divisor.push_back(i);
      }
      if (listed_supports.count(divisor) == 0) {
        throw InconsistentGeometryError("divisor " + support_name(divisor) +
                                        " contains listed stratum " +
                                        support_name(s.support) +
                                        " but is not maximal rank itself");
      }
      const FiniteAbelianSubgroup& h = divisor_stabs.at(divisor);
      order_product *= h.order();
      for (const TorsionVector& g : h.generators()) combined.push_back(g);
    }
    FiniteAbelianSubgroup generated =
        subgroup_structure(std::move(combined), action.modulus, action.group_rank);
    if (order_product != s.stabilizer.order() || !same_subgroup(generated, s.stabilizer)) {
      throw InconsistentGeometryError("stabilizer of stratum " + support_name(s.support) +
                                      " is not the direct sum of its divisor stabilizers");
    }
  }
  return listed;
}

HypersurfaceDualComplex dual_complex_hypersurface(const DiagonalHypersurfaceAction& action) {
  HypersurfaceDualComplex out;
  out.strata = enumerate_maximal_rank_strata(action);
  int coords = action.coordinate_count();

  // Attach by descending support size = ascending cell dimension.
  std::vector<const Stratum*> order;
  for (const Stratum& s : out.strata) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Stratum* a, const Stratum* b) {
    if (a->support.size() != b->support.size()) {
      return a->support.size() > b->support.size();
    }
    return a->support < b->support;
  });

  for (const Stratum* s : order) {
    int cell_dim = s->codim_in_x - 1;
    std::vector<VertexId> verts;
    std::vector<CellId> facets;
    if (cell_dim >= 1) {
      // Vertices are the divisors containing the stratum: complements of
      // single coordinates outside the support, in descending coordinate
      // order so vertex ids ascend.
      std::vector<int> missing;
      for (int j = coords - 1; j >= 0; --j) {
        if (!std::binary_search(s->support.begin(), s->support.end(), j)) {
          missing.push_back(j);
        }
      }
      for (int j : missing) {
        std::vector<int> divisor;
        for (int i = 0; i < coords; ++i) {
          if (i != j) divisor.push_back(i);
        }
        auto it = out.stratum_cells.find(divisor);
        if (it == out.stratum_cells.end() || it->second.size() != 1) {
          throw InconsistentGeometryError("divisor " + support_name(divisor) +
                                          " missing while attaching stratum " +
                                          support_name(s->support));
        }
        verts.push_back(out.complex.cell(it->second.front()).vertices.front());
      }
      if (cell_dim >= 1) {
        for (std::size_t omit = 0; omit < missing.size(); ++omit) {
          std::vector<int> facet_support = s->support;
          facet_support.push_back(missing[omit]);
          std::sort(facet_support.begin(), facet_support.end());
          auto it = out.stratum_cells.find(facet_support);
          if (it == out.stratum_cells.end() || it->second.size() != 1) {
            throw InconsistentGeometryError("facet stratum " + support_name(facet_support) +
                                            " missing while attaching stratum " +
                                            support_name(s->support));
          }
          facets.push_back(it->second.front());
        }
      }
    }
    std::vector<CellId>& cells = out.stratum_cells[s->support];
    for (int c = 0; c < s->component_count; ++c) {
      std::string suffix = s->component_count > 1 ? "#" + std::to_string(c) : "";
      if (cell_dim == 0) {
        // One fresh vertex per divisor component.
        int missing = -1;
        for (int i = 0; i < coords; ++i) {
          if (!std::binary_search(s->support.begin(), s->support.end(), i)) missing = i;
        }
        VertexId v = out.complex.add_vertex("x" + std::to_string(missing) + "=0" + suffix);
        cells.push_back(out.complex.attach_simplex({v}, {}, "Z" + support_name(s->support) + suffix));
      } else {
        cells.push_back(out.complex.attach_simplex(verts, facets,
                                                   "Z" + support_name(s->support) + suffix));
      }
    }
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Obstructed:
      return "OBSTRUCTED";
    case Verdict::NoObstruction:
      return "NO_OBSTRUCTION";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

nlohmann::ordered_json LinearizabilityReport::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(verdict);
  j["invariant"] = invariant.to_json();
  j["reference_value"] = "Z";
  return j;
}

LinearizabilityReport linearizability_report(const DiagonalHypersurfaceAction& action) {
  ActionValidation validation = validate_action(action);
  if (!validation.ok()) {
    throw InvalidActionError("action spec invalid: " + validation.violations.front());
  }
  HypersurfaceDualComplex dual = dual_complex_hypersurface(action);

  LinearizabilityReport report;
  report.effective_rank = validation.effective_rank;
  report.full_rank = validation.full_rank;
  report.invariant = top_invariant(dual.complex, action.dimension);
  if (action.dimension == 1) {
    report.unreduced_degree_zero = homology(dual.complex, 0);
    report.notes.push_back(
        "n = 1: the invariant uses the reduced group in degree 0; unreduced H_0 = " +
        report.unreduced_degree_zero->to_string());
  }
  if (validation.full_rank) {
    report.verdict = report.invariant.is_free_of_rank(1) ? Verdict::NoObstruction
                                                         : Verdict::Obstructed;
  } else {
    report.verdict = Verdict::Inconclusive;
    if (validation.effective_rank > action.dimension) {
      report.notes.push_back("acting rank exceeds n; the comparison needs rank exactly n");
    } else {
      report.notes.push_back("acting rank below n; the invariant vanishes on both sides");
    }
  }
  return report;
}

}  // namespace dualcx
