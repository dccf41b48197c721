#include "dualcx/quasicomplex.hpp"

#include <algorithm>
#include <sstream>

namespace dualcx {

namespace {

std::string id_list(const std::vector<VertexId>& ids) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) os << ",";
    os << ids[i].value;
  }
  os << "}";
  return os.str();
}

}  // namespace

VertexId QuasiComplex::add_vertex(std::string label) {
  VertexId id{next_vertex_id_++};
  vertices_.emplace(id, std::move(label));
  return id;
}

CellId QuasiComplex::attach_simplex(std::vector<VertexId> vertices,
                                    std::vector<CellId> facets, std::string component) {
  if (vertices.empty()) {
    throw MalformedAttachmentError("a simplex needs at least one vertex");
  }
  for (VertexId v : vertices) {
    if (!has_vertex(v)) {
      throw UnknownIdError("attach_simplex: unknown vertex " + std::to_string(v.value));
    }
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!(vertices[i] < vertices[i + 1])) {
      throw MalformedAttachmentError("vertex list must be strictly increasing: " +
                                     id_list(vertices));
    }
  }
  int dim = static_cast<int>(vertices.size()) - 1;
  std::size_t expected_facets = dim == 0 ? 0 : vertices.size();
  if (facets.size() != expected_facets) {
    throw MalformedAttachmentError("a " + std::to_string(dim) + "-cell needs " +
                                   std::to_string(expected_facets) + " facets, got " +
                                   std::to_string(facets.size()));
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    auto it = cells_.find(facets[i]);
    if (it == cells_.end()) {
      throw UnknownIdError("attach_simplex: unknown facet cell " +
                           std::to_string(facets[i].value));
    }
    const Cell& f = it->second;
    std::vector<VertexId> expected = vertices;
    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(i));
    if (f.vertices != expected) {
      throw MalformedAttachmentError("facet " + std::to_string(i) + " of " +
                                     id_list(vertices) + " must span " + id_list(expected) +
                                     ", cell " + std::to_string(facets[i].value) +
                                     " spans " + id_list(f.vertices));
    }
  }
  CellId id{next_cell_id_++};
  cells_.emplace(id, Cell{id, dim, std::move(vertices), std::move(facets),
                          std::move(component)});
  return id;
}

const std::string& QuasiComplex::vertex_label(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw UnknownIdError("unknown vertex " + std::to_string(v.value));
  }
  return it->second;
}

const Cell& QuasiComplex::cell(CellId c) const {
  auto it = cells_.find(c);
  if (it == cells_.end()) {
    throw UnknownIdError("unknown cell " + std::to_string(c.value));
  }
  return it->second;
}

std::vector<VertexId> QuasiComplex::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [id, label] : vertices_) out.push_back(id);
  return out;
}

std::vector<CellId> QuasiComplex::cell_ids() const {
  std::vector<CellId> out;
  out.reserve(cells_.size());
  for (const auto& [id, cell] : cells_) out.push_back(id);
  return out;
}

std::vector<CellId> QuasiComplex::cells_of_dim(int dim) const {
  std::vector<CellId> out;
  for (const auto& [id, cell] : cells_) {
    if (cell.dim == dim) out.push_back(id);
  }
  return out;
}

int QuasiComplex::dimension() const {
  int dim = -1;
  for (const auto& [id, cell] : cells_) dim = std::max(dim, cell.dim);
  return dim;
}

std::vector<std::int64_t> QuasiComplex::f_vector() const {
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& [id, cell] : cells_) ++f[static_cast<std::size_t>(cell.dim)];
  return f;
}

std::int64_t QuasiComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [id, cell] : cells_) chi += (cell.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::set<CellId> QuasiComplex::closure(const std::set<CellId>& cells) const {
  std::set<CellId> out;
  std::vector<CellId> stack(cells.begin(), cells.end());
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    if (!out.insert(c).second) continue;
    for (CellId f : cell(c).facets) stack.push_back(f);
  }
  return out;
}

std::set<CellId> QuasiComplex::star(CellId c) const {
  if (!has_cell(c)) throw UnknownIdError("star: unknown cell " + std::to_string(c.value));
  std::set<CellId> out;
  for (const auto& [id, candidate] : cells_) {
    if (candidate.dim < cell(c).dim) continue;
    if (closure({id}).count(c) > 0) out.insert(id);
  }
  return out;
}

std::set<CellId> QuasiComplex::link(CellId c) const {
  std::set<CellId> st = star(c);
  std::set<CellId> out;
  for (CellId d : closure(st)) {
    if (st.count(d) == 0) out.insert(d);
  }
  return out;
}

std::vector<std::string> QuasiComplex::validate(bool check_pairwise_intersections) const {
  std::vector<std::string> violations;
  for (const auto& [id, cell] : cells_) {
    std::string tag = "cell " + std::to_string(id.value);
    if (cell.dim != static_cast<int>(cell.vertices.size()) - 1) {
      violations.push_back(tag + ": dim field disagrees with vertex count");
      continue;
    }
    bool known = true;
    for (VertexId v : cell.vertices) {
      if (!has_vertex(v)) {
        violations.push_back(tag + ": unknown vertex " + std::to_string(v.value));
        known = false;
      }
    }
    if (!known) continue;
    for (std::size_t i = 0; i + 1 < cell.vertices.size(); ++i) {
      if (!(cell.vertices[i] < cell.vertices[i + 1])) {
        violations.push_back(tag + ": vertex list not strictly increasing");
        break;
      }
    }
    std::size_t expected = cell.dim == 0 ? 0 : cell.vertices.size();
    if (cell.facets.size() != expected) {
      violations.push_back(tag + ": wrong facet count");
      continue;
    }
    for (std::size_t i = 0; i < cell.facets.size(); ++i) {
      auto it = cells_.find(cell.facets[i]);
      if (it == cells_.end()) {
        violations.push_back(tag + ": dangling facet " + std::to_string(cell.facets[i].value));
        continue;
      }
      std::vector<VertexId> want = cell.vertices;
      want.erase(want.begin() + static_cast<std::ptrdiff_t>(i));
      if (it->second.vertices != want) {
        violations.push_back(tag + ": facet " + std::to_string(i) + " spans " +
                             id_list(it->second.vertices) + ", expected " + id_list(want));
      }
    }
  }
  if (check_pairwise_intersections && violations.empty()) {
    // Shared vertices of two cells must be covered by shared faces.
    std::vector<CellId> ids = cell_ids();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      std::set<CellId> closure_a = closure({ids[a]});
      const std::vector<VertexId>& va = cell(ids[a]).vertices;
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        const std::vector<VertexId>& vb = cell(ids[b]).vertices;
        std::vector<VertexId> shared;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(shared));
        if (shared.empty()) continue;
        std::set<VertexId> covered;
        for (CellId f : closure({ids[b]})) {
          if (closure_a.count(f) == 0) continue;
          for (VertexId v : cell(f).vertices) covered.insert(v);
        }
        for (VertexId v : shared) {
          if (covered.count(v) == 0) {
            violations.push_back("cells " + std::to_string(ids[a].value) + " and " +
                                 std::to_string(ids[b].value) + " share vertex " +
                                 std::to_string(v.value) + " but no face through it");
          }
        }
      }
    }
  }
  return violations;
}

nlohmann::ordered_json QuasiComplex::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const auto& [id, label] : vertices_) {
    nlohmann::ordered_json v;
    v["id"] = id.value;
    v["label"] = label;
    verts.push_back(std::move(v));
  }
  j["vertices"] = std::move(verts);
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& [id, cell] : cells_) {
    nlohmann::ordered_json c;
    c["id"] = id.value;
    c["dim"] = cell.dim;
    nlohmann::ordered_json vlist = nlohmann::ordered_json::array();
    for (VertexId v : cell.vertices) vlist.push_back(v.value);
    c["vertices"] = std::move(vlist);
    nlohmann::ordered_json flist = nlohmann::ordered_json::array();
    for (CellId f : cell.facets) flist.push_back(f.value);
    c["facets"] = std::move(flist);
    c["component"] = cell.component;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

QuasiComplex QuasiComplex::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("cells") ||
      !j["vertices"].is_array() || !j["cells"].is_array()) {
    throw ParseError("complex: expected {\"vertices\": [...], \"cells\": [...]}");
  }
  QuasiComplex out;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("label") ||
        !v["id"].is_number_integer() || !v["label"].is_string()) {
      throw ParseError("complex: vertex entries need integer \"id\" and string \"label\"");
    }
    VertexId id{v["id"].get<std::int64_t>()};
    if (out.vertices_.count(id) > 0) {
      throw ParseError("complex: duplicate vertex id " + std::to_string(id.value));
    }
    out.vertices_.emplace(id, v["label"].get<std::string>());
    out.next_vertex_id_ = std::max(out.next_vertex_id_, id.value + 1);
  }
  for (const auto& c : j["cells"]) {
    if (!c.is_object() || !c.contains("id") || !c.contains("dim") ||
        !c.contains("vertices") || !c.contains("facets") || !c.contains("component") ||
        !c["id"].is_number_integer() || !c["dim"].is_number_integer() ||
        !c["vertices"].is_array() || !c["facets"].is_array() ||
        !c["component"].is_string()) {
      throw ParseError("complex: cell entries need id, dim, vertices, facets, component");
    }
    Cell cell;
    cell.id = CellId{c["id"].get<std::int64_t>()};
    cell.dim = c["dim"].get<int>();
    for (const auto& v : c["vertices"]) {
      if (!v.is_number_integer()) throw ParseError("complex: vertex refs must be integers");
      cell.vertices.push_back(VertexId{v.get<std::int64_t>()});
    }
    for (const auto& f : c["facets"]) {
      if (!f.is_number_integer()) throw ParseError("complex: facet refs must be integers");
      cell.facets.push_back(CellId{f.get<std::int64_t>()});
    }
    cell.component = c["component"].get<std::string>();
    if (out.cells_.count(cell.id) > 0) {
      throw ParseError("complex: duplicate cell id " + std::to_string(cell.id.value));
    }
    out.next_cell_id_ = std::max(out.next_cell_id_, cell.id.value + 1);
    out.cells_.emplace(cell.id, std::move(cell));
  }
  return out;
}

std::map<std::vector<VertexId>, CellId> QuasiComplex::face_lattice(CellId root) const {
  std::map<std::vector<VertexId>, CellId> out;
  std::vector<CellId> stack{root};
  while (!stack.empty()) {
    CellId cid = stack.back();
    stack.pop_back();
    const Cell& c = cell(cid);
    auto [it, fresh] = out.try_emplace(c.vertices, cid);
    if (!fresh) {
      if (it->second != cid) {
        throw InvalidComplexError(
            "cells " + std::to_string(it->second.value) + " and " +
            std::to_string(cid.value) + " are parallel faces of cell " +
            std::to_string(root.value) + "; its faces do not form a simplex lattice");
      }
      continue;
    }
    for (CellId f : c.facets) stack.push_back(f);
  }
  return out;
}

QuasiComplex stellar_subdivide(const QuasiComplex& k, CellId target) {
  const Cell& center = k.cell(target);
  if (center.dim < 1) {
    throw InvalidTargetError("stellar subdivision target must have dimension >= 1");
  }
  std::set<CellId> star = k.star(target);

  std::map<CellId, std::map<std::vector<VertexId>, CellId>> lattice;
  for (CellId s : star) lattice.emplace(s, k.face_lattice(s));

  // Proper faces of the center, the empty face included, by ascending size.
  std::vector<std::vector<VertexId>> center_faces;
  std::size_t cn = center.vertices.size();
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << cn); ++mask) {
    std::vector<VertexId> face;
    for (std::size_t i = 0; i < cn; ++i) {
      if (mask & (std::size_t{1} << i)) face.push_back(center.vertices[i]);
    }
    center_faces.push_back(std::move(face));
  }
  std::sort(center_faces.begin(), center_faces.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  QuasiComplex out = k;
  VertexId bary = out.add_vertex("bary(" + center.component + ")");

  // Star cells by ascending dimension; the center comes first.
  std::vector<CellId> order(star.begin(), star.end());
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
    int da = k.cell(a).dim, db = k.cell(b).dim;
    return da != db ? da < db : a < b;
  });

  // One new cell per (star cell sigma, proper face of the center): the cone
  // from the barycenter over that face joined with sigma's complement of
  // the center. Cells with a nonempty complement are private to sigma.
  std::map<std::pair<std::int64_t, std::vector<VertexId>>, CellId> made;
  for (CellId sid : order) {
    const Cell& sigma = k.cell(sid);
    std::vector<VertexId> complement;
    std::set_difference(sigma.vertices.begin(), sigma.vertices.end(),
                        center.vertices.begin(), center.vertices.end(),
                        std::back_inserter(complement));
    const auto& sigma_lattice = lattice.at(sid);
    for (const std::vector<VertexId>& face : center_faces) {
      std::vector<VertexId> base;
      std::merge(face.begin(), face.end(), complement.begin(), complement.end(),
                 std::back_inserter(base));
      std::vector<VertexId> verts = base;
      verts.push_back(bary);  // the barycenter is last in the global order
      std::vector<CellId> facets;
      if (verts.size() > 1) {
        for (VertexId w : verts) {
          if (w == bary) {
            facets.push_back(sigma_lattice.at(base));
          } else if (std::binary_search(face.begin(), face.end(), w)) {
            std::vector<VertexId> sub = face;
            sub.erase(std::find(sub.begin(), sub.end(), w));
            facets.push_back(made.at({sid.value, sub}));
          } else {
            std::vector<VertexId> rest = sigma.vertices;
            rest.erase(std::find(rest.begin(), rest.end(), w));
            CellId parent = sigma_lattice.at(rest);
            facets.push_back(made.at({parent.value, face}));
          }
        }
      }
      std::string label = sigma.component + "@" + id_list(face);
      made[{sid.value, face}] = out.attach_simplex(std::move(verts), std::move(facets),
                                                   std::move(label));
    }
  }
  for (CellId s : star) out.cells_.erase(s);
  return out;
}

QuasiComplex make_skeleton_complex(int vertex_count, int max_dim) {
  if (vertex_count < 0) throw Error("vertex count must be >= 0");
  QuasiComplex out;
  std::vector<VertexId> verts;
  for (int i = 0; i < vertex_count; ++i) {
    verts.push_back(out.add_vertex("v" + std::to_string(i)));
  }
  if (max_dim < 0) return out;
  std::map<std::vector<VertexId>, CellId> by_subset;
  // Subsets by ascending size so facets exist when needed.
  std::vector<std::vector<VertexId>> subsets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << vertex_count); ++mask) {
    std::vector<VertexId> subset;
    for (int i = 0; i < vertex_count; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(verts[static_cast<std::size_t>(i)]);
    }
    if (static_cast<int>(subset.size()) <= max_dim + 1) subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& subset : subsets) {
    std::vector<CellId> facets;
    if (subset.size() > 1) {
      for (std::size_t i = 0; i < subset.size(); ++i) {
        std::vector<VertexId> facet = subset;
        facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
        facets.push_back(by_subset.at(facet));
      }
    }
    std::string label = "s" + id_list(subset);
    by_subset[subset] = out.attach_simplex(subset, std::move(facets), std::move(label));
  }
  return out;
}

QuasiComplex make_simplex_boundary(int n) {
  if (n < 1) throw Error("simplex boundary needs n >= 1");
  return make_skeleton_complex(n + 1, n - 1);
}

namespace {

struct CanonicalData {
  std::string structure;
  std::vector<std::string> cell_labels;    // in canonical cell order
  std::vector<std::string> vertex_labels;  // in canonical vertex order
};

CanonicalData canonicalize(const QuasiComplex& k, VertexOrder order, bool include_labels) {
  std::vector<VertexId> vids = k.vertex_ids();
  if (order == VertexOrder::ByLabel) {
    std::sort(vids.begin(), vids.end(), [&](VertexId a, VertexId b) {
      return k.vertex_label(a) < k.vertex_label(b);
    });
    for (std::size_t i = 0; i + 1 < vids.size(); ++i) {
      if (k.vertex_label(vids[i]) == k.vertex_label(vids[i + 1])) {
        throw Error("canonical_form: vertex labels are not unique");
      }
    }
  }
  std::map<VertexId, std::size_t> vindex;
  for (std::size_t i = 0; i < vids.size(); ++i) vindex[vids[i]] = i;

  CanonicalData out;
  for (VertexId v : vids) out.vertex_labels.push_back(k.vertex_label(v));

  std::ostringstream os;
  os << "V" << vids.size() << ";";
  std::map<CellId, std::size_t> canon;
  for (int d = 0; d <= k.dimension(); ++d) {
    struct Desc {
      std::vector<std::size_t> verts;
      std::vector<std::size_t> facets;
      std::string label;
      CellId id;
    };
    std::vector<Desc> descs;
    for (CellId cid : k.cells_of_dim(d)) {
      const Cell& c = k.cell(cid);
      Desc desc;
      for (VertexId v : c.vertices) desc.verts.push_back(vindex.at(v));
      for (CellId f : c.facets) desc.facets.push_back(canon.at(f));
      desc.label = c.component;
      desc.id = cid;
      descs.push_back(std::move(desc));
    }
    // Label is always a tie-break so parallel cells pair deterministically,
    // but it only reaches the fingerprint when labels are requested.
    std::sort(descs.begin(), descs.end(), [](const Desc& a, const Desc& b) {
      if (a.verts != b.verts) return a.verts < b.verts;
      if (a.facets != b.facets) return a.facets < b.facets;
      return a.label < b.label;
    });
    os << "d" << d << ":";
    for (std::size_t i = 0; i < descs.size(); ++i) {
      const Desc& desc = descs[i];
      canon[desc.id] = i;
      out.cell_labels.push_back(desc.label);
      os << "(";
      for (std::size_t v : desc.verts) os << v << ",";
      os << "|";
      for (std::size_t f : desc.facets) os << f << ",";
      if (include_labels) os << "|" << desc.label;
      os << ")";
    }
    os << ";";
  }
  out.structure = os.str();
  return out;
}

}  // namespace

std::string canonical_form(const QuasiComplex& k, VertexOrder order, bool include_labels) {
  CanonicalData data = canonicalize(k, order, include_labels);
  if (include_labels) {
    std::ostringstream os;
    os << "L[";
    for (const std::string& l : data.vertex_labels) os << l << ";";
    os << "]" << data.structure;
    return os.str();
  }
  return data.structure;
}

bool isomorphic_complexes(const QuasiComplex& a, const QuasiComplex& b, VertexOrder order,
                          bool match_labels) {
  CanonicalData da = canonicalize(a, order, false);
  CanonicalData db = canonicalize(b, order, false);
  if (da.structure != db.structure) return false;
  if (!match_labels) return true;
  // Component labels must correspond one-to-one under the canonical pairing.
  if (da.cell_labels.size() != db.cell_labels.size()) return false;
  std::map<std::string, std::string> fwd, rev;
  for (std::size_t i = 0; i < da.cell_labels.size(); ++i) {
    const std::string& x = da.cell_labels[i];
    const std::string& y = db.cell_labels[i];
    auto [itf, newf] = fwd.try_emplace(x, y);
    if (!newf && itf->second != y) return false;
    auto [itr, newr] = rev.try_emplace(y, x);
    if (!newr && itr->second != x) return false;
  }
  return true;
}

}  // namespace dualcx
