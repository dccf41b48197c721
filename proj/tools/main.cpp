#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualcx/abgroup.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/hypersurface.hpp"
#include "dualcx/quasicomplex.hpp"
#include "dualcx/toric.hpp"

namespace {

constexpr const char* kVersion = "dualcx 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dualcx::ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw dualcx::ParseError(path + ": " + e.what());
  }
  return j;
}

std::string format_f_vector(const std::vector<std::int64_t>& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << ", ";
    os << f[i];
  }
  os << ")";
  return os.str();
}

nlohmann::ordered_json f_vector_json(const std::vector<std::int64_t>& f) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::int64_t v : f) out.push_back(v);
  return out;
}

nlohmann::ordered_json homology_json(const std::vector<dualcx::HomologyGroup>& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& h : table) out.push_back(h.to_json());
  return out;
}

void print_homology(const std::vector<dualcx::HomologyGroup>& table) {
  for (const auto& h : table) {
    std::cout << "H_" << h.degree << " = " << h.to_string() << "\n";
  }
}

void emit(const nlohmann::ordered_json& report, bool json_mode,
          const std::function<void()>& human) {
  if (json_mode) {
    std::cout << report.dump(2) << "\n";
  } else {
    human();
  }
}

nlohmann::ordered_json group_summary(const dualcx::FiniteAbelianSubgroup& g) {
  nlohmann::ordered_json j;
  j["structure"] = g.structure_string();
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(dualcx::to_int64(f));
  j["invariant_factors"] = std::move(factors);
  j["order"] = dualcx::to_int64(g.order());
  j["rank"] = g.rank();
  j["exponent"] = dualcx::to_int64(g.exponent());
  return j;
}

// Degree-(n-1) invariant plus the n = 1 bookkeeping shared by the toric and
// hypersurface commands.
void append_top_invariant(nlohmann::ordered_json& report, std::vector<std::string>& warnings,
                          const dualcx::QuasiComplex& complex, int n) {
  dualcx::HomologyGroup top = dualcx::top_invariant(complex, n);
  report["top_invariant"] = top.to_json();
  report["top_invariant"]["pretty"] = top.to_string();
  if (n == 1) {
    dualcx::HomologyGroup unreduced = dualcx::homology(complex, 0);
    report["top_invariant_unreduced"] = unreduced.to_json();
    warnings.push_back("n = 1: invariant reports the reduced group in degree 0 (unreduced H_0 = " +
                       unreduced.to_string() + ")");
  }
}

int cmd_homology(const std::string& path, bool json_mode) {
  nlohmann::json input = load_json(path);
  dualcx::QuasiComplex complex = dualcx::QuasiComplex::from_json(input);
  std::vector<std::string> violations = complex.validate();
  if (!violations.empty()) {
    std::cerr << "complex fails validation:\n";
    for (const auto& v : violations) std::cerr << "  " << v << "\n";
    return kExitSemantic;
  }
  std::vector<dualcx::HomologyGroup> table = dualcx::homology_table(complex);

  nlohmann::ordered_json report;
  report["command"] = "homology";
  report["input"] = nlohmann::ordered_json::object();
  report["input"]["path"] = path;
  report["input"]["complex"] = complex.to_json();
  report["f_vector"] = f_vector_json(complex.f_vector());
  report["euler_characteristic"] = complex.euler_characteristic();
  report["homology"] = homology_json(table);
  report["warnings"] = nlohmann::ordered_json::array();
  emit(report, json_mode, [&] {
    std::cout << "complex: " << complex.cell_count() << " cells, dimension "
              << complex.dimension() << ", f = " << format_f_vector(complex.f_vector())
              << ", euler = " << complex.euler_characteristic() << "\n";
    print_homology(table);
  });
  return kExitOk;
}

std::vector<int> parse_cone_arg(const std::string& arg) {
  std::vector<int> cone;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      cone.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw dualcx::ParseError("--blowup expects comma-separated ray indices, got '" + arg +
                               "'");
    }
  }
  if (cone.empty()) throw dualcx::ParseError("--blowup needs at least one ray index");
  std::sort(cone.begin(), cone.end());
  return cone;
}

int cmd_toric(const std::string& fan_path, const std::string& group_path,
              const std::vector<std::string>& blowup_args, bool json_mode) {
  dualcx::Fan fan = dualcx::Fan::from_json(load_json(fan_path));
  dualcx::FiniteAbelianSubgroup group =
      dualcx::FiniteAbelianSubgroup::from_json(load_json(group_path));

  std::vector<std::string> smooth = dualcx::check_smooth(fan);
  if (!smooth.empty()) {
    std::cerr << "fan is not smooth:\n";
    for (const auto& v : smooth) std::cerr << "  " << v << "\n";
    return kExitSemantic;
  }

  nlohmann::ordered_json blowups = nlohmann::ordered_json::array();
  for (const std::string& arg : blowup_args) {
    std::vector<int> cone = parse_cone_arg(arg);
    fan = dualcx::star_subdivision(fan, cone);
    blowups.push_back(cone);
  }

  dualcx::ToricDualComplex dual = dualcx::dual_complex_toric(fan, group);
  std::vector<dualcx::HomologyGroup> table = dualcx::homology_table(dual.complex);
  std::vector<std::string> warnings;

  nlohmann::ordered_json report;
  report["command"] = "toric";
  report["input"] = nlohmann::ordered_json::object();
  report["input"]["fan_path"] = fan_path;
  report["input"]["group_path"] = group_path;
  report["input"]["blowups"] = std::move(blowups);
  report["fan"] = fan.to_json();
  report["group"] = group.to_json();
  report["group"]["summary"] = group_summary(group);
  report["dual_complex"] = dual.complex.to_json();
  report["f_vector"] = f_vector_json(dual.complex.f_vector());
  report["euler_characteristic"] = dual.complex.euler_characteristic();
  report["homology"] = homology_json(table);
  append_top_invariant(report, warnings, dual.complex, fan.rank);
  report["warnings"] = warnings;
  emit(report, json_mode, [&] {
    std::cout << "fan: rank " << fan.rank << ", " << fan.rays.size() << " rays, "
              << fan.max_cones.size() << " max cones\n";
    std::cout << "group: " << group.structure_string() << " (order " << group.order()
              << ", rank " << group.rank() << ", exponent " << group.exponent() << ")\n";
    std::cout << "dual complex: f = " << format_f_vector(dual.complex.f_vector())
              << ", euler = " << dual.complex.euler_characteristic() << "\n";
    print_homology(table);
    std::cout << "top invariant (degree " << fan.rank - 1
              << "): " << dualcx::top_invariant(dual.complex, fan.rank).to_string() << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  });
  return kExitOk;
}

int cmd_hypersurface(const std::string& spec_path, bool json_mode) {
  dualcx::DiagonalHypersurfaceAction action =
      dualcx::DiagonalHypersurfaceAction::from_json(load_json(spec_path));
  dualcx::ActionValidation validation = dualcx::validate_action(action);
  if (!validation.ok()) {
    std::cerr << "action spec fails validation:\n";
    for (const auto& v : validation.violations) std::cerr << "  " << v << "\n";
    return kExitSemantic;
  }
  dualcx::HypersurfaceDualComplex dual = dualcx::dual_complex_hypersurface(action);
  dualcx::LinearizabilityReport verdict = dualcx::linearizability_report(action);
  std::vector<dualcx::HomologyGroup> table = dualcx::homology_table(dual.complex);

  nlohmann::ordered_json strata = nlohmann::ordered_json::array();
  for (const auto& s : dual.strata) {
    nlohmann::ordered_json entry;
    entry["support"] = s.support;
    entry["dim"] = s.dim;
    entry["codim_in_x"] = s.codim_in_x;
    entry["stabilizer"] = group_summary(s.stabilizer);
    entry["components"] = s.component_count;
    strata.push_back(std::move(entry));
  }

  nlohmann::ordered_json report;
  report["command"] = "hyp";
  report["input"] = nlohmann::ordered_json::object();
  report["input"]["path"] = spec_path;
  report["input"]["action"] = action.to_json();
  report["validation"] = nlohmann::ordered_json::object();
  report["validation"]["effective_rank"] = validation.effective_rank;
  report["validation"]["full_rank"] = validation.full_rank;
  report["strata"] = std::move(strata);
  report["dual_complex"] = dual.complex.to_json();
  report["f_vector"] = f_vector_json(dual.complex.f_vector());
  report["euler_characteristic"] = dual.complex.euler_characteristic();
  report["homology"] = homology_json(table);
  report["verdict"] = verdict.to_json();
  report["warnings"] = verdict.notes;
  emit(report, json_mode, [&] {
    std::cout << "action: n = " << action.dimension << ", d = " << action.degree
              << ", group (Z/" << action.modulus << ")^" << action.group_rank
              << ", acting rank " << validation.effective_rank << "\n";
    std::cout << "maximal rank strata: " << dual.strata.size() << "\n";
    for (const auto& s : dual.strata) {
      std::cout << "  S = {";
      for (std::size_t i = 0; i < s.support.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << s.support[i];
      }
      std::cout << "}  codim " << s.codim_in_x << "  stabilizer "
                << s.stabilizer.structure_string() << "  components " << s.component_count
                << "\n";
    }
    std::cout << "dual complex: f = " << format_f_vector(dual.complex.f_vector())
              << ", euler = " << dual.complex.euler_characteristic() << "\n";
    print_homology(table);
    std::cout << "invariant H_" << verdict.invariant.degree << " = "
              << verdict.invariant.to_string() << " (toric reference: Z)\n";
    std::cout << "verdict: " << dualcx::verdict_name(verdict.verdict) << "\n";
    for (const auto& w : verdict.notes) std::cout << "note: " << w << "\n";
  });
  return kExitOk;
}

int cmd_subdivide(const std::string& path, std::int64_t cell_value,
                  const std::string& out_path, bool json_mode) {
  dualcx::QuasiComplex complex = dualcx::QuasiComplex::from_json(load_json(path));
  std::vector<std::string> violations = complex.validate();
  if (!violations.empty()) {
    std::cerr << "complex fails validation:\n";
    for (const auto& v : violations) std::cerr << "  " << v << "\n";
    return kExitSemantic;
  }
  std::vector<dualcx::HomologyGroup> before = dualcx::homology_table(complex);
  dualcx::QuasiComplex subdivided =
      dualcx::stellar_subdivide(complex, dualcx::CellId{cell_value});
  std::vector<dualcx::HomologyGroup> after = dualcx::homology_table(subdivided);
  if (before != after) {
    std::cerr << "internal error: homology changed under stellar subdivision\n";
    return kExitSemantic;
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitSemantic;
  }
  out << subdivided.to_json().dump(2) << "\n";

  nlohmann::ordered_json report;
  report["command"] = "subdivide";
  report["input"] = nlohmann::ordered_json::object();
  report["input"]["path"] = path;
  report["input"]["cell"] = cell_value;
  report["out"] = out_path;
  report["before"] = nlohmann::ordered_json::object();
  report["before"]["f_vector"] = f_vector_json(complex.f_vector());
  report["before"]["homology"] = homology_json(before);
  report["after"] = nlohmann::ordered_json::object();
  report["after"]["f_vector"] = f_vector_json(subdivided.f_vector());
  report["after"]["homology"] = homology_json(after);
  report["warnings"] = nlohmann::ordered_json::array();
  emit(report, json_mode, [&] {
    std::cout << "before: f = " << format_f_vector(complex.f_vector()) << "\n";
    print_homology(before);
    std::cout << "after:  f = " << format_f_vector(subdivided.f_vector()) << "\n";
    print_homology(after);
    std::cout << "homology preserved; subdivided complex written to " << out_path << "\n";
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant dual complexes: construction, integral homology, obstruction reports"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string complex_path, fan_path, group_path, spec_path, out_path;
  std::vector<std::string> blowup_args;
  std::int64_t cell_value = -1;
  bool json_homology = false, json_toric = false, json_hyp = false, json_subdivide = false;

  CLI::App* homology_cmd =
      app.add_subcommand("homology", "integral homology of a quasicomplex file");
  homology_cmd->add_option("complex", complex_path, "complex JSON file")->required();
  homology_cmd->add_flag("--json", json_homology, "machine-readable output");

  CLI::App* toric_cmd =
      app.add_subcommand("toric", "dual complex of a finite torus subgroup on a smooth fan");
  toric_cmd->add_option("fan", fan_path, "fan JSON file")->required();
  toric_cmd->add_option("group", group_path, "subgroup JSON file")->required();
  toric_cmd->add_option("--blowup", blowup_args,
                        "star-subdivide the cone with these ray indices (e.g. 0,1); repeatable, "
                        "applied in order before the dual complex is built");
  toric_cmd->add_flag("--json", json_toric, "machine-readable output");

  CLI::App* hyp_cmd = app.add_subcommand(
      "hyp", "strata, dual complex and obstruction verdict of a diagonal hypersurface action");
  hyp_cmd->add_option("spec", spec_path, "action spec JSON file")->required();
  hyp_cmd->add_flag("--json", json_hyp, "machine-readable output");

  CLI::App* subdivide_cmd =
      app.add_subcommand("subdivide", "stellar subdivision of a cell in a quasicomplex file");
  subdivide_cmd->add_option("complex", complex_path, "complex JSON file")->required();
  subdivide_cmd->add_option("--cell", cell_value, "id of the cell to subdivide")->required();
  subdivide_cmd->add_option("--out", out_path, "where to write the subdivided complex")
      ->required();
  subdivide_cmd->add_flag("--json", json_subdivide, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (homology_cmd->parsed()) return cmd_homology(complex_path, json_homology);
    if (toric_cmd->parsed()) return cmd_toric(fan_path, group_path, blowup_args, json_toric);
    if (hyp_cmd->parsed()) return cmd_hypersurface(spec_path, json_hyp);
    if (subdivide_cmd->parsed()) {
      return cmd_subdivide(complex_path, cell_value, out_path, json_subdivide);
    }
  } catch (const dualcx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dualcx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
