#include "dualcx/toric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dualcx/snf.hpp"

namespace dualcx {

namespace {

std::string cone_name(const std::vector<int>& cone) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i > 0) os << ",";
    os << cone[i];
  }
  os << "}";
  return os.str();
}

std::string ray_name(const std::vector<Integer>& ray) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (i > 0) os << ",";
    os << ray[i];
  }
  os << ")";
  return os.str();
}

IntMatrix ray_matrix(const Fan& fan, const std::vector<int>& cone) {
  IntMatrix m(static_cast<std::size_t>(fan.rank), cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j) {
    const auto& ray = fan.rays[static_cast<std::size_t>(cone[j])];
    for (std::size_t i = 0; i < ray.size(); ++i) m.at(i, j) = ray[i];
  }
  return m;
}

bool valid_indices(const Fan& fan, const std::vector<int>& cone) {
  for (int i : cone) {
    if (i < 0 || static_cast<std::size_t>(i) >= fan.rays.size()) return false;
  }
  return std::is_sorted(cone.begin(), cone.end()) &&
         std::adjacent_find(cone.begin(), cone.end()) == cone.end();
}

}  // namespace

nlohmann::ordered_json Fan::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank;
  nlohmann::ordered_json rays_json = nlohmann::ordered_json::array();
  for (const auto& ray : rays) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Integer& c : ray) r.push_back(to_int64(c));
    rays_json.push_back(std::move(r));
  }
  j["rays"] = std::move(rays_json);
  nlohmann::ordered_json cones_json = nlohmann::ordered_json::array();
  for (const auto& cone : max_cones) cones_json.push_back(cone);
  j["max_cones"] = std::move(cones_json);
  j["complete"] = asserted_complete;
  j["projective"] = asserted_projective;
  return j;
}

Fan Fan::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") ||
      !j.contains("max_cones") || !j["rank"].is_number_integer() ||
      !j["rays"].is_array() || !j["max_cones"].is_array()) {
    throw ParseError("fan: expected {\"rank\", \"rays\", \"max_cones\", ...}");
  }
  Fan fan;
  fan.rank = j["rank"].get<int>();
  if (fan.rank < 1) throw ParseError("fan: rank must be >= 1");
  for (const auto& ray : j["rays"]) {
    if (!ray.is_array() || ray.size() != static_cast<std::size_t>(fan.rank)) {
      throw ParseError("fan: each ray must have `rank` coordinates");
    }
    std::vector<Integer> coords;
    for (const auto& c : ray) {
      if (!c.is_number_integer()) throw ParseError("fan: ray coordinates must be integers");
      coords.emplace_back(c.get<std::int64_t>());
    }
    fan.rays.push_back(std::move(coords));
  }
  for (const auto& cone : j["max_cones"]) {
    if (!cone.is_array()) throw ParseError("fan: max cones must be index arrays");
    std::vector<int> indices;
    for (const auto& i : cone) {
      if (!i.is_number_integer()) throw ParseError("fan: cone entries must be integers");
      indices.push_back(i.get<int>());
    }
    std::sort(indices.begin(), indices.end());
    fan.max_cones.push_back(std::move(indices));
  }
  if (j.contains("complete")) {
    if (!j["complete"].is_boolean()) throw ParseError("fan: `complete` must be a boolean");
    fan.asserted_complete = j["complete"].get<bool>();
  }
  if (j.contains("projective")) {
    if (!j["projective"].is_boolean()) throw ParseError("fan: `projective` must be a boolean");
    fan.asserted_projective = j["projective"].get<bool>();
  }
  return fan;
}

Fan Fan::projective_space(int n) {
  if (n < 1) throw Error("projective space fan needs n >= 1");
  Fan fan;
  fan.rank = n;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> ray(static_cast<std::size_t>(n), Integer(0));
    ray[static_cast<std::size_t>(i)] = 1;
    fan.rays.push_back(std::move(ray));
  }
  fan.rays.push_back(std::vector<Integer>(static_cast<std::size_t>(n), Integer(-1)));
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i) {
      if (i != omit) cone.push_back(i);
    }
    fan.max_cones.push_back(std::move(cone));
  }
  fan.asserted_complete = true;
  fan.asserted_projective = true;
  return fan;
}

Fan Fan::p1_times_p1() {
  Fan fan;
  fan.rank = 2;
  fan.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  fan.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  for (auto& cone : fan.max_cones) std::sort(cone.begin(), cone.end());
  fan.asserted_complete = true;
  fan.asserted_projective = true;
  return fan;
}

std::vector<std::string> check_smooth(const Fan& fan) {
  std::vector<std::string> report;
  if (fan.rank < 1) {
    report.push_back("fan rank must be >= 1");
    return report;
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const auto& ray = fan.rays[r];
    if (ray.size() != static_cast<std::size_t>(fan.rank)) {
      report.push_back("ray " + std::to_string(r) + " has wrong length");
      continue;
    }
    Integer g = 0;
    for (const Integer& c : ray) g = gcd_int(g, c);
    if (g != 1) {
      report.push_back("ray " + std::to_string(r) + " " + ray_name(ray) +
                       " is not primitive");
    }
  }
  std::set<std::vector<Integer>> seen;
  for (const auto& ray : fan.rays) {
    if (!seen.insert(ray).second) {
      report.push_back("duplicate ray " + ray_name(ray));
    }
  }
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    std::string tag = "cone " + cone_name(cone);
    if (!valid_indices(fan, cone)) {
      report.push_back(tag + ": invalid ray indices");
      continue;
    }
    if (cone.size() > static_cast<std::size_t>(fan.rank)) {
      report.push_back(tag + ": more rays than the ambient rank");
      continue;
    }
    if (cone.empty()) continue;
    // Smooth and simplicial together: the SNF diagonal of the ray matrix
    // must consist of |cone| ones.
    std::vector<Integer> diag = smith_normal_form(ray_matrix(fan, cone)).diagonal_entries();
    bool unimodular = diag.size() >= cone.size();
    for (std::size_t i = 0; i < cone.size() && unimodular; ++i) {
      unimodular = diag[i] == 1;
    }
    if (!unimodular) {
      report.push_back(tag + ": rays do not extend to a lattice basis");
    }
  }
  if (!report.empty()) return report;

  // Partial pairwise check: a ray lying in a cone must be one of its rays.
  for (const auto& cone : fan.max_cones) {
    if (cone.empty()) continue;
    SnfDecomposition snf = smith_normal_form(ray_matrix(fan, cone));
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      if (std::binary_search(cone.begin(), cone.end(), static_cast<int>(r))) continue;
      // Coordinates of the ray in the basis extending the cone's rays.
      std::vector<Integer> y = snf.left * fan.rays[r];
      bool in_span = true;
      for (std::size_t i = cone.size(); i < y.size(); ++i) {
        if (y[i] != 0) in_span = false;
      }
      if (!in_span) continue;
      std::vector<Integer> coeffs(cone.size(), Integer(0));
      for (std::size_t i = 0; i < cone.size(); ++i) {
        for (std::size_t jj = 0; jj < cone.size(); ++jj) {
          coeffs[i] += snf.right.at(i, jj) * y[jj];
        }
      }
      bool nonneg = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const Integer& v) { return v >= 0; });
      if (nonneg) {
        report.push_back("ray " + std::to_string(r) + " lies inside cone " +
                         cone_name(cone) + " without being one of its rays");
      }
    }
  }
  return report;
}

std::vector<std::vector<int>> fan_faces(const Fan& fan) {
  std::set<std::vector<int>> faces;
  for (const auto& cone : fan.max_cones) {
    std::size_t n = cone.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) face.push_back(cone[i]);
      }
      faces.insert(std::move(face));
    }
  }
  std::vector<std::vector<int>> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_face(const Fan& fan, const std::vector<int>& cone) {
  if (!valid_indices(fan, cone)) return false;
  if (cone.empty()) return true;
  for (const auto& max_cone : fan.max_cones) {
    if (std::includes(max_cone.begin(), max_cone.end(), cone.begin(), cone.end())) {
      return true;
    }
  }
  return false;
}

FiniteAbelianSubgroup cone_stabilizer(const Fan& fan, const std::vector<int>& cone,
                                      const FiniteAbelianSubgroup& group) {
  if (group.ambient() != fan.rank) {
    throw DimensionMismatchError("group ambient rank differs from the fan rank");
  }
  if (!is_face(fan, cone)) {
    throw UnknownConeError("cone " + cone_name(cone) + " is not a face of the fan");
  }
  if (cone.empty()) {
    return FiniteAbelianSubgroup(group.modulus(), group.ambient());
  }
  return intersect_with_span(group, ray_matrix(fan, cone));
}

ToricDualComplex dual_complex_toric(const Fan& fan, const FiniteAbelianSubgroup& group) {
  std::vector<std::string> smooth = check_smooth(fan);
  if (!smooth.empty()) {
    throw NotSmoothError("fan is not smooth: " + smooth.front());
  }
  if (group.ambient() != fan.rank) {
    throw DimensionMismatchError("group ambient rank differs from the fan rank");
  }

  ToricDualComplex out;
  std::vector<std::vector<int>> faces = fan_faces(fan);
  std::map<std::vector<int>, int> stab_rank;
  for (const auto& cone : faces) {
    stab_rank[cone] = cone_stabilizer(fan, cone, group).rank();
  }

  // Vertices: rays with nontrivial (hence rank-1 cyclic) stabilizer, in ray
  // order so that cell vertex lists follow sorted ray indices.
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    std::vector<int> ray_cone{static_cast<int>(r)};
    if (stab_rank.count(ray_cone) > 0 && stab_rank[ray_cone] == 1) {
      out.ray_vertices[static_cast<int>(r)] =
          out.complex.add_vertex(ray_name(fan.rays[r]));
    }
  }

  for (const auto& cone : faces) {
    int k = static_cast<int>(cone.size());
    if (stab_rank[cone] != k) continue;
    std::vector<VertexId> verts;
    for (int r : cone) {
      auto it = out.ray_vertices.find(r);
      if (it == out.ray_vertices.end()) {
        throw InconsistentGeometryError(
            "cone " + cone_name(cone) + " has maximal stabilizer rank but its ray " +
            std::to_string(r) + " has trivial stabilizer");
      }
      verts.push_back(it->second);
    }
    std::vector<CellId> facets;
    if (k >= 2) {
      for (int omit = 0; omit < k; ++omit) {
        std::vector<int> facet_cone;
        for (int i = 0; i < k; ++i) {
          if (i != omit) facet_cone.push_back(cone[static_cast<std::size_t>(i)]);
        }
        auto it = out.cone_cells.find(facet_cone);
        if (it == out.cone_cells.end()) {
          throw InconsistentGeometryError("facet cone " + cone_name(facet_cone) +
                                          " of maximal-rank cone " + cone_name(cone) +
                                          " is not itself maximal rank");
        }
        facets.push_back(it->second);
      }
    }
    out.cone_cells[cone] =
        out.complex.attach_simplex(std::move(verts), std::move(facets), "V" + cone_name(cone));
  }
  return out;
}

Fan star_subdivision(const Fan& fan, const std::vector<int>& cone) {
  if (!is_face(fan, cone) || cone.empty()) {
    throw UnknownConeError("cone " + cone_name(cone) + " is not a face of the fan");
  }
  if (cone.size() < 2) {
    throw InvalidTargetError("star subdivision target must have dimension >= 2");
  }
  std::vector<Integer> new_ray(static_cast<std::size_t>(fan.rank), Integer(0));
  for (int r : cone) {
    const auto& ray = fan.rays[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < new_ray.size(); ++i) new_ray[i] += ray[i];
  }
  for (const auto& ray : fan.rays) {
    if (ray == new_ray) {
      throw InconsistentGeometryError("barycentric ray " + ray_name(new_ray) +
                                      " already present in the fan");
    }
  }
  Fan out = fan;
  int new_index = static_cast<int>(out.rays.size());
  out.rays.push_back(new_ray);
  std::vector<std::vector<int>> cones;
  for (const auto& max_cone : fan.max_cones) {
    if (!std::includes(max_cone.begin(), max_cone.end(), cone.begin(), cone.end())) {
      cones.push_back(max_cone);
      continue;
    }
    for (int omit : cone) {
      std::vector<int> replaced;
      for (int r : max_cone) {
        if (r != omit) replaced.push_back(r);
      }
      replaced.push_back(new_index);
      std::sort(replaced.begin(), replaced.end());
      cones.push_back(std::move(replaced));
    }
  }
  out.max_cones = std::move(cones);
  std::vector<std::string> smooth = check_smooth(out);
  if (!smooth.empty()) {
    throw NotSmoothError("star subdivision produced a non-smooth fan: " + smooth.front());
  }
  return out;
}

}  // namespace dualcx
