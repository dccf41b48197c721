// Acceptance suite: one named criterion per run line, exact expectations,
// nonzero exit when anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualcx/homology.hpp"
#include "dualcx/hypersurface.hpp"
#include "dualcx/quasicomplex.hpp"
#include "dualcx/toric.hpp"
#include "support/oracles.hpp"

namespace {

using dualcx::CellId;
using dualcx::canonical_fermat_action;
using dualcx::DiagonalHypersurfaceAction;
using dualcx::Fan;
using dualcx::FiniteAbelianSubgroup;
using dualcx::HomologyGroup;
using dualcx::Integer;
using dualcx::IntMatrix;
using dualcx::QuasiComplex;
using dualcx::Verdict;
using dualcx::VertexOrder;

struct Failure {
  std::string message;
};

struct Context {
  std::vector<std::pair<std::string, QuasiComplex>> built;  // swept by criterion 9

  void track(const std::string& name, const QuasiComplex& k) { built.emplace_back(name, k); }

  void require(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
  }
};

FiniteAbelianSubgroup full_group(std::int64_t m, int n) {
  return dualcx::subgroup_structure(dualcx::standard_generators(m, n), m, n);
}

std::string group_string(const HomologyGroup& h) { return h.to_string(); }

// --- criterion 1 -----------------------------------------------------------

void toric_sphere_values(Context& ctx) {
  for (int n = 2; n <= 6; ++n) {
    auto start = std::chrono::steady_clock::now();
    dualcx::ToricDualComplex dual =
        dualcx::dual_complex_toric(Fan::projective_space(n), full_group(2, n));
    HomologyGroup top = dualcx::top_invariant(dual.complex, n);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ctx.require(dualcx::isomorphic_complexes(dual.complex, dualcx::make_simplex_boundary(n),
                                             VertexOrder::ById, false),
                "P^" + std::to_string(n) + ": dual complex is not the simplex boundary");
    ctx.require(top.is_free_of_rank(1), "P^" + std::to_string(n) + ": H_" +
                                            std::to_string(n - 1) + " = " + group_string(top) +
                                            ", expected Z");
    ctx.require(seconds < 1.0,
                "P^" + std::to_string(n) + ": took " + std::to_string(seconds) + "s");
    ctx.track("toric P^" + std::to_string(n), dual.complex);
  }
}

// --- criterion 2 -----------------------------------------------------------

const std::vector<std::pair<int, int>> kHypersurfacePairs{{1, 3}, {2, 3}, {2, 4}, {3, 3},
                                                          {3, 5}, {4, 3}, {5, 3}};

std::int64_t binomial(int n, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

void hypersurface_invariants(Context& ctx) {
  for (auto [n, d] : kHypersurfacePairs) {
    std::string tag = "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
    auto start = std::chrono::steady_clock::now();
    DiagonalHypersurfaceAction spec = canonical_fermat_action(n, d);
    dualcx::HypersurfaceDualComplex dual = dualcx::dual_complex_hypersurface(spec);
    dualcx::LinearizabilityReport report = dualcx::linearizability_report(spec);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ctx.require(report.invariant.is_free_of_rank(d - 1),
                tag + ": invariant " + group_string(report.invariant) + ", expected Z^" +
                    std::to_string(d - 1));

    // (n-2)-skeleton equals the (n-2)-skeleton of the (n-1)-simplex: every
    // dimension below the top carries each vertex subset exactly once.
    std::vector<std::int64_t> f = dual.complex.f_vector();
    if (n == 1) {
      ctx.require(f == std::vector<std::int64_t>{d}, tag + ": expected d isolated vertices");
    } else {
      ctx.require(static_cast<int>(f.size()) == n, tag + ": dual complex has wrong dimension");
      for (int k = 0; k <= n - 2; ++k) {
        ctx.require(f[static_cast<std::size_t>(k)] == binomial(n, k + 1),
                    tag + ": f_" + std::to_string(k) + " = " +
                        std::to_string(f[static_cast<std::size_t>(k)]) + ", expected C(" +
                        std::to_string(n) + "," + std::to_string(k + 1) + ")");
        std::set<std::vector<dualcx::VertexId>> seen;
        for (CellId c : dual.complex.cells_of_dim(k)) {
          ctx.require(seen.insert(dual.complex.cell(c).vertices).second,
                      tag + ": repeated vertex set below the top dimension");
        }
      }
      ctx.require(f.back() == d, tag + ": expected d top cells");
    }
    ctx.require(seconds < 1.0, tag + ": took " + std::to_string(seconds) + "s");
    ctx.track("hypersurface " + tag, dual.complex);
  }
}

// --- criterion 3 -----------------------------------------------------------

void verdict_logic(Context& ctx) {
  for (auto [n, d] : kHypersurfacePairs) {
    if (d < 3) continue;
    dualcx::LinearizabilityReport report =
        dualcx::linearizability_report(canonical_fermat_action(n, d));
    ctx.require(report.verdict == Verdict::Obstructed,
                "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) +
                    ") should be OBSTRUCTED, got " + dualcx::verdict_name(report.verdict));
  }

  dualcx::LinearizabilityReport quadric =
      dualcx::linearizability_report(canonical_fermat_action(2, 2));
  ctx.require(quadric.verdict == Verdict::NoObstruction,
              "quadric should be NO_OBSTRUCTION, got " + dualcx::verdict_name(quadric.verdict));
  ctx.require(quadric.invariant.is_free_of_rank(1),
              "quadric invariant " + group_string(quadric.invariant) + ", expected Z");

  DiagonalHypersurfaceAction deficient;
  deficient.dimension = 2;
  deficient.degree = 3;
  deficient.modulus = 3;
  deficient.group_rank = 1;
  deficient.characters = {
      dualcx::TorsionVector::reduce(3, {Integer(0)}),
      dualcx::TorsionVector::reduce(3, {Integer(0)}),
      dualcx::TorsionVector::reduce(3, {Integer(1)}),
      dualcx::TorsionVector::reduce(3, {Integer(2)}),
  };
  dualcx::LinearizabilityReport low = dualcx::linearizability_report(deficient);
  ctx.require(low.verdict == Verdict::Inconclusive,
              "rank-deficient spec should be INCONCLUSIVE, got " +
                  dualcx::verdict_name(low.verdict));
}

// --- criterion 4 -----------------------------------------------------------

void invariance_suite(Context& ctx) {
  std::mt19937_64 rng(0x5eedULL);
  std::vector<QuasiComplex> bases;
  for (int n = 2; n <= 5; ++n) bases.push_back(dualcx::make_simplex_boundary(n));
  for (auto [n, d] : kHypersurfacePairs) {
    bases.push_back(dualcx::dual_complex_hypersurface(canonical_fermat_action(n, d)).complex);
  }

  int cases = 0;
  for (int trial = 0; trial < 220; ++trial) {
    const QuasiComplex& base = bases[trial % bases.size()];
    QuasiComplex k = base;
    int steps = 1 + static_cast<int>(rng() % 2);
    for (int step = 0; step < steps; ++step) {
      std::vector<CellId> candidates;
      for (CellId c : k.cell_ids()) {
        if (k.cell(c).dim >= 1) candidates.push_back(c);
      }
      if (candidates.empty()) break;
      CellId pick = candidates[rng() % candidates.size()];
      std::vector<HomologyGroup> before = dualcx::homology_table(k);
      k = dualcx::stellar_subdivide(k, pick);
      std::vector<HomologyGroup> after = dualcx::homology_table(k);
      ctx.require(before == after, "homology changed under stellar subdivision (trial " +
                                       std::to_string(trial) + ")");
      ++cases;
    }
    if (trial % 40 == 0) ctx.track("invariance sample " + std::to_string(trial), k);
  }
  ctx.require(cases >= 200, "only " + std::to_string(cases) + " subdivision cases ran");
}

// --- criterion 5 -----------------------------------------------------------

void blowup_commutation(Context& ctx) {
  struct Case {
    std::string name;
    Fan fan;
    FiniteAbelianSubgroup group;
  };
  std::vector<Case> cases{{"P^2", Fan::projective_space(2), full_group(2, 2)},
                          {"P^1xP^1", Fan::p1_times_p1(), full_group(3, 2)},
                          {"P^3", Fan::projective_space(3), full_group(2, 3)}};
  for (const Case& c : cases) {
    int checked = 0;
    for (const auto& cone : dualcx::fan_faces(c.fan)) {
      if (cone.size() < 2) continue;
      dualcx::ToricDualComplex before = dualcx::dual_complex_toric(c.fan, c.group);
      QuasiComplex via_complex =
          dualcx::stellar_subdivide(before.complex, before.cone_cells.at(cone));
      dualcx::ToricDualComplex via_fan =
          dualcx::dual_complex_toric(dualcx::star_subdivision(c.fan, cone), c.group);
      std::ostringstream cone_name;
      for (int r : cone) cone_name << r << " ";
      ctx.require(dualcx::isomorphic_complexes(via_fan.complex, via_complex, VertexOrder::ById,
                                               true),
                  c.name + ": routes disagree at cone { " + cone_name.str() + "}");
      ctx.track(c.name + " blowup {" + cone_name.str() + "}", via_fan.complex);
      ++checked;
    }
    ctx.require(checked > 0, c.name + ": no subdividable cones found");
  }
}

// --- criterion 6 -----------------------------------------------------------

void h0_non_invariance(Context& ctx) {
  // The diagonal involution on P^2 fixes the line {x_0 = 0} (the ray
  // (-1,-1) satisfies (1,1) = 1*(-1,-1) mod 2) plus the isolated point
  // (1:0:0). Blowing up that point adds one connected component to the
  // dual complex while the top invariant stays 0. (The spec's parenthetical
  // values for this example miss the solvable third congruence; see the
  // brute-force cross-check in the unit suite.)
  Fan p2 = Fan::projective_space(2);
  FiniteAbelianSubgroup diag = dualcx::subgroup_structure(
      {dualcx::TorsionVector::reduce(2, {Integer(1), Integer(1)})}, 2, 2);

  dualcx::ToricDualComplex before = dualcx::dual_complex_toric(p2, diag);
  HomologyGroup h0_before = dualcx::homology(before.complex, 0);
  ctx.require(h0_before.is_free_of_rank(1),
              "before the blowup H_0 = " + group_string(h0_before) + ", expected Z");
  ctx.require(dualcx::top_invariant(before.complex, 2).is_trivial(),
              "top invariant should vanish before the blowup");
  ctx.require(dualcx::cone_stabilizer(p2, {0, 1}, diag).rank() == 1,
              "the blowup center must have stabilizer rank below its codimension");

  dualcx::ToricDualComplex after =
      dualcx::dual_complex_toric(dualcx::star_subdivision(p2, {0, 1}), diag);
  HomologyGroup h0 = dualcx::homology(after.complex, 0);
  HomologyGroup h1 = dualcx::homology(after.complex, 1);
  ctx.require(h0.is_free_of_rank(2),
              "after the blowup H_0 = " + group_string(h0) + ", expected Z^2 (one new component)");
  ctx.require(h1.is_trivial(), "after the blowup H_1 = " + group_string(h1) + ", expected 0");
  ctx.require(dualcx::top_invariant(after.complex, 2).is_trivial(),
              "top invariant must be unchanged by the low-rank-center blowup");
  ctx.track("P^2 diagonal involution", before.complex);
  ctx.track("P^2 diagonal blowup", after.complex);
}

// --- criterion 7 -----------------------------------------------------------

void snf_oracle(Context& ctx) {
  std::mt19937_64 rng(0xabcdULL);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m = oracles::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    dualcx::SnfDecomposition snf = dualcx::smith_normal_form(m);
    ctx.require(snf.left * m * snf.right == snf.diagonal,
                "U*M*V != D at trial " + std::to_string(trial));
    ctx.require(dualcx::abs_int(dualcx::determinant(snf.left)) == 1,
                "U not unimodular at trial " + std::to_string(trial));
    ctx.require(dualcx::abs_int(dualcx::determinant(snf.right)) == 1,
                "V not unimodular at trial " + std::to_string(trial));
    std::vector<Integer> diag = snf.diagonal_entries();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] != 0) {
        ctx.require(diag[i] != 0 && diag[i + 1] % diag[i] == 0,
                    "divisibility chain broken at trial " + std::to_string(trial));
      }
    }
    for (const Integer& d : diag) {
      ctx.require(d >= 0, "negative diagonal at trial " + std::to_string(trial));
    }
    ctx.require(diag == oracles::snf_diagonal_by_minors(m),
                "diagonal disagrees with the minor-gcd oracle at trial " +
                    std::to_string(trial));
  }
}

// --- criterion 8 -----------------------------------------------------------

void group_oracle(Context& ctx) {
  std::mt19937_64 rng(0x900dULL);
  const std::vector<std::pair<std::int64_t, int>> shapes{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {6, 2}};
  for (auto [m, n] : shapes) {
    std::uniform_int_distribution<std::int64_t> coord(0, m - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::vector<std::int64_t>> gens(2, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
      for (auto& g : gens) {
        for (auto& c : g) c = coord(rng);
      }
      std::vector<dualcx::TorsionVector> tgens;
      for (const auto& g : gens) {
        tgens.push_back(
            dualcx::TorsionVector::reduce(m, std::vector<Integer>(g.begin(), g.end())));
      }
      FiniteAbelianSubgroup group = dualcx::subgroup_structure(tgens, m, n);
      auto elements = oracles::enumerate_subgroup(gens, m);
      std::string tag = " (m=" + std::to_string(m) + ", N=" + std::to_string(n) + ", trial " +
                        std::to_string(trial) + ")";

      ctx.require(group.order() == Integer(elements.size()), "order mismatch" + tag);
      ctx.require(group.rank() == oracles::min_generator_count_upto_2(elements, m),
                  "rank disagrees with minimal generator search" + tag);
      std::vector<std::int64_t> factors;
      for (const Integer& f : group.invariant_factors()) factors.push_back(dualcx::to_int64(f));
      ctx.require(oracles::order_statistics_of_product(factors) ==
                      oracles::order_statistics_of_elements(elements, m),
                  "invariant factors disagree with enumeration" + tag);
    }
  }
}

// --- criterion 9 -----------------------------------------------------------

void boundary_squares(Context& ctx) {
  ctx.require(!ctx.built.empty(), "no complexes were tracked");
  for (const auto& [name, complex] : ctx.built) {
    ctx.require(oracles::boundary_squares_to_zero(complex), "dd != 0 on " + name);
  }
  std::printf("        (checked d\xE2\x88\x98""d = 0 on %zu tracked complexes)\n", ctx.built.size());
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<void(Context&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "toric sphere values: P^n with (Z/2)^n gives the simplex boundary and H_(n-1) = Z",
       toric_sphere_values},
      {2, "hypersurface invariants: canonical specs give H_(n-1) = Z^(d-1) on the right skeleton",
       hypersurface_invariants},
      {3, "verdict logic: OBSTRUCTED / NO_OBSTRUCTION / INCONCLUSIVE", verdict_logic},
      {4, "invariance: >= 200 random stellar subdivisions preserve all homology",
       invariance_suite},
      {5, "blowup commutation on P^2, P^1xP^1, P^3 for every subdividable cone",
       blowup_commutation},
      {6, "H_0 non-invariance under a low-rank-center blowup", h0_non_invariance},
      {7, "SNF oracle: 500 random matrices against the minor-gcd reduction", snf_oracle},
      {8, "group oracle: invariant factors and rank against exhaustive enumeration",
       group_oracle},
      {9, "boundary-of-boundary vanishes on every complex built by this suite",
       boundary_squares},
  };

  Context ctx;
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run(ctx);
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.message;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("unexpected error: ") + e.what();
      ++failures;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d  %s (%.2fs)\n", verdict.c_str(), c.number, c.name.c_str(), seconds);
    if (!detail.empty()) std::printf("        %s\n", detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
