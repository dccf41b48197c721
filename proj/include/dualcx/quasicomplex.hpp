#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/errors.hpp"

namespace dualcx {

struct VertexId {
  std::int64_t value = -1;
  auto operator<=>(const VertexId&) const = default;
};

struct CellId {
  std::int64_t value = -1;
  auto operator<=>(const CellId&) const = default;
};

// A k-simplex of the complex. Facet i is the chosen (k-1)-face omitting
// vertices[i]; a 0-cell has no facets. Distinct cells may share the same
// vertex list (parallel cells), so facet links are explicit.
struct Cell {
  CellId id;
  int dim = 0;
  std::vector<VertexId> vertices;  // strictly increasing
  std::vector<CellId> facets;
  std::string component;
};

// Simplicial quasicomplex with Δ-complex semantics: cells are simplices,
// the cell set is closed under faces, and faces are tracked by id rather
// than by vertex set. Vertices are never deleted; their insertion order is
// the global total order used for orientations.
class QuasiComplex {
 public:
  VertexId add_vertex(std::string label);
  CellId attach_simplex(std::vector<VertexId> vertices, std::vector<CellId> facets,
                        std::string component);

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool has_cell(CellId c) const { return cells_.count(c) > 0; }
  const std::string& vertex_label(VertexId v) const;
  const Cell& cell(CellId c) const;

  std::vector<VertexId> vertex_ids() const;  // ascending = global order
  std::vector<CellId> cell_ids() const;      // ascending
  std::vector<CellId> cells_of_dim(int dim) const;
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t cell_count() const { return cells_.size(); }

  int dimension() const;  // -1 when empty
  std::vector<std::int64_t> f_vector() const;
  std::int64_t euler_characteristic() const;

  // Cells whose iterated-facet closure contains c (c itself included).
  std::set<CellId> star(CellId c) const;
  // Input cells together with all iterated facets.
  std::set<CellId> closure(const std::set<CellId>& cells) const;
  // closure(star(c)) minus star(c).
  std::set<CellId> link(CellId c) const;

  // Structural check: face closure, facet/vertex consistency, vertex
  // ordering. With check_pairwise_intersections also compares shared
  // vertex sets against shared faces for every pair of cells.
  std::vector<std::string> validate(bool check_pairwise_intersections = false) const;

  nlohmann::ordered_json to_json() const;
  static QuasiComplex from_json(const nlohmann::json& j);

  friend QuasiComplex stellar_subdivide(const QuasiComplex& k, CellId target);

 private:
  // vertex-subset -> unique face of `root`; throws InvalidComplexError if
  // two distinct faces of root share a vertex set.
  std::map<std::vector<VertexId>, CellId> face_lattice(CellId root) const;

  std::map<VertexId, std::string> vertices_;
  std::map<CellId, Cell> cells_;
  std::int64_t next_vertex_id_ = 0;
  std::int64_t next_cell_id_ = 0;
};

// Replaces the open star of `target` by the cone from a fresh barycenter
// vertex over the boundary of each star cell. Surviving cells keep their
// ids; the barycenter is appended last in the global vertex order.
QuasiComplex stellar_subdivide(const QuasiComplex& k, CellId target);

// All simplices on `vertex_count` vertices of dimension <= max_dim.
QuasiComplex make_skeleton_complex(int vertex_count, int max_dim);

// Boundary of the n-simplex (n + 1 vertices, dimension n - 1).
QuasiComplex make_simplex_boundary(int n);

enum class VertexOrder {
  ById,     // identify vertices by position in the global order
  ByLabel,  // identify vertices by label (labels must be unique)
};

// Deterministic structural fingerprint; two complexes are isomorphic under
// the chosen vertex identification iff their forms are equal.
std::string canonical_form(const QuasiComplex& k, VertexOrder order, bool include_labels);

// Structural isomorphism; with match_labels the component labels must also
// correspond one-to-one under the canonical cell pairing.
bool isomorphic_complexes(const QuasiComplex& a, const QuasiComplex& b, VertexOrder order,
                          bool match_labels);

}  // namespace dualcx
