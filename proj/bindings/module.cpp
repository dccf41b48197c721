#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "dualcx/abgroup.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/hypersurface.hpp"
#include "dualcx/quasicomplex.hpp"
#include "dualcx/snf.hpp"
#include "dualcx/toric.hpp"

namespace py = pybind11;

namespace {

// Exact conversion cpp_int -> python int, through the decimal string.
py::object py_int(const dualcx::Integer& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::list matrix_to_py(const dualcx::IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(py_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

dualcx::IntMatrix matrix_from_py(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<dualcx::Integer>> converted;
  for (const auto& row : rows) {
    converted.emplace_back(row.begin(), row.end());
  }
  return dualcx::IntMatrix::from_rows(converted);
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json parse_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw dualcx::ParseError(std::string(what) + ": " + e.what());
  }
}

dualcx::QuasiComplex complex_from_str(const std::string& text) {
  return dualcx::QuasiComplex::from_json(parse_json(text, "complex"));
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2); }

py::dict group_to_py(const dualcx::FiniteAbelianSubgroup& g) {
  py::dict out;
  out["modulus"] = py_int(g.modulus());
  out["ambient"] = g.ambient();
  py::list gens;
  for (const auto& gen : g.generators()) {
    py::list coords;
    for (const auto& c : gen.coords) coords.append(py_int(c));
    gens.append(coords);
  }
  out["generators"] = gens;
  py::list factors;
  for (const auto& f : g.invariant_factors()) factors.append(py_int(f));
  out["invariant_factors"] = factors;
  out["order"] = py_int(g.order());
  out["rank"] = g.rank();
  out["structure"] = g.structure_string();
  return out;
}

py::dict homology_to_py(const dualcx::HomologyGroup& h) {
  py::dict out;
  out["degree"] = h.degree;
  out["betti"] = h.betti;
  py::list torsion;
  for (const auto& t : h.torsion) torsion.append(py_int(t));
  out["torsion"] = torsion;
  out["pretty"] = h.to_string();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact dual-complex computations: Smith normal form, finite abelian "
            "subgroups, simplicial quasicomplexes, integral homology, toric and "
            "hypersurface dual complexes";

  py::register_exception<dualcx::ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("__version__") = "0.1.0";

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<std::int64_t>>& rows) {
        dualcx::SnfDecomposition snf = dualcx::smith_normal_form(matrix_from_py(rows));
        py::dict out;
        out["left"] = matrix_to_py(snf.left);
        out["diagonal"] = matrix_to_py(snf.diagonal);
        out["right"] = matrix_to_py(snf.right);
        return out;
      },
      py::arg("matrix"),
      "Smith normal form U*M*V = D; returns {'left': U, 'diagonal': D, 'right': V}");

  m.def(
      "subgroup_structure",
      [](const std::vector<std::vector<std::int64_t>>& generators, std::int64_t modulus) {
        int ambient = generators.empty() ? 0 : static_cast<int>(generators.front().size());
        std::vector<dualcx::TorsionVector> gens;
        for (const auto& g : generators) {
          gens.push_back(dualcx::TorsionVector::reduce(
              modulus, std::vector<dualcx::Integer>(g.begin(), g.end())));
        }
        return group_to_py(dualcx::subgroup_structure(gens, modulus, ambient));
      },
      py::arg("generators"), py::arg("modulus"),
      "Invariant factors, order and rank of the subgroup of (Z/m)^N spanned by the "
      "given generators");

  m.def(
      "validate_complex",
      [](const std::string& complex_json) { return complex_from_str(complex_json).validate(); },
      py::arg("complex_json"), "Structural violations of a quasicomplex (empty = valid)");

  m.def(
      "homology",
      [](const std::string& complex_json) {
        py::list out;
        for (const auto& h : dualcx::homology_table(complex_from_str(complex_json))) {
          out.append(homology_to_py(h));
        }
        return out;
      },
      py::arg("complex_json"), "Integral homology table of a quasicomplex, degrees 0..dim");

  m.def(
      "top_invariant",
      [](const std::string& complex_json, int variety_dim) {
        return homology_to_py(dualcx::top_invariant(complex_from_str(complex_json), variety_dim));
      },
      py::arg("complex_json"), py::arg("variety_dim"),
      "Degree-(n-1) homology group compared against the toric reference value");

  m.def(
      "f_vector",
      [](const std::string& complex_json) { return complex_from_str(complex_json).f_vector(); },
      py::arg("complex_json"));

  m.def(
      "stellar_subdivide",
      [](const std::string& complex_json, std::int64_t cell) {
        return dump(dualcx::stellar_subdivide(complex_from_str(complex_json),
                                              dualcx::CellId{cell})
                        .to_json());
      },
      py::arg("complex_json"), py::arg("cell"),
      "Stellar subdivision at the given cell id; returns the subdivided complex as JSON");

  m.def(
      "simplex_boundary",
      [](int n) { return dump(dualcx::make_simplex_boundary(n).to_json()); }, py::arg("n"),
      "Boundary of the n-simplex as a quasicomplex JSON string");

  m.def(
      "check_smooth",
      [](const std::string& fan_json) {
        return dualcx::check_smooth(dualcx::Fan::from_json(parse_json(fan_json, "fan")));
      },
      py::arg("fan_json"), "Smoothness violations of a fan (empty = smooth)");

  m.def(
      "toric_dual_complex",
      [](const std::string& fan_json, const std::string& group_json) {
        dualcx::Fan fan = dualcx::Fan::from_json(parse_json(fan_json, "fan"));
        dualcx::FiniteAbelianSubgroup group =
            dualcx::FiniteAbelianSubgroup::from_json(parse_json(group_json, "group"));
        return dump(dualcx::dual_complex_toric(fan, group).complex.to_json());
      },
      py::arg("fan_json"), py::arg("group_json"),
      "Dual complex of a finite torus subgroup acting on a smooth toric variety");

  m.def(
      "star_subdivision",
      [](const std::string& fan_json, const std::vector<int>& cone) {
        dualcx::Fan fan = dualcx::Fan::from_json(parse_json(fan_json, "fan"));
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        return dump(dualcx::star_subdivision(fan, sorted).to_json());
      },
      py::arg("fan_json"), py::arg("cone"),
      "Fan of the blowup along the orbit closure of the given cone");

  m.def(
      "projective_space_fan",
      [](int n) { return dump(dualcx::Fan::projective_space(n).to_json()); }, py::arg("n"));

  m.def(
      "validate_hypersurface",
      [](const std::string& spec_json) {
        dualcx::ActionValidation v = dualcx::validate_action(
            dualcx::DiagonalHypersurfaceAction::from_json(parse_json(spec_json, "action")));
        py::dict out;
        out["violations"] = v.violations;
        out["effective_rank"] = v.effective_rank;
        out["full_rank"] = v.full_rank;
        return out;
      },
      py::arg("spec_json"));

  m.def(
      "hypersurface_dual_complex",
      [](const std::string& spec_json) {
        return dump(dualcx::dual_complex_hypersurface(
                        dualcx::DiagonalHypersurfaceAction::from_json(
                            parse_json(spec_json, "action")))
                        .complex.to_json());
      },
      py::arg("spec_json"));

  m.def(
      "linearizability_report",
      [](const std::string& spec_json) {
        dualcx::LinearizabilityReport r = dualcx::linearizability_report(
            dualcx::DiagonalHypersurfaceAction::from_json(parse_json(spec_json, "action")));
        py::dict out = json_to_py(r.to_json()).cast<py::dict>();
        out["effective_rank"] = r.effective_rank;
        out["full_rank"] = r.full_rank;
        out["notes"] = r.notes;
        out["pretty_invariant"] = r.invariant.to_string();
        return out;
      },
      py::arg("spec_json"),
      "Obstruction verdict: OBSTRUCTED / NO_OBSTRUCTION / INCONCLUSIVE with the "
      "degree-(n-1) invariant");

  m.def(
      "canonical_fermat",
      [](int n, int d) { return dump(dualcx::canonical_fermat_action(n, d).to_json()); },
      py::arg("n"), py::arg("d"),
      "Canonical diagonal action spec on the degree-d Fermat-type hypersurface of "
      "dimension n");
}
