#include "dualcx/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dualcx/snf.hpp"

namespace dualcx {

ChainComplexData boundary_matrices(const QuasiComplex& k) {
  std::vector<std::string> violations = k.validate();
  if (!violations.empty()) {
    throw InvalidComplexError("complex fails validation: " + violations.front());
  }
  ChainComplexData data;
  int dim = k.dimension();
  data.cells_by_dim.resize(static_cast<std::size_t>(std::max(dim + 1, 0)));
  for (int d = 0; d <= dim; ++d) {
    data.cells_by_dim[static_cast<std::size_t>(d)] = k.cells_of_dim(d);
  }
  data.boundary.resize(static_cast<std::size_t>(std::max(dim + 1, 0)));
  if (dim >= 0) {
    data.boundary[0] = IntMatrix(0, data.cells_by_dim[0].size());
  }
  for (int d = 1; d <= dim; ++d) {
    const auto& rows = data.cells_by_dim[static_cast<std::size_t>(d - 1)];
    const auto& cols = data.cells_by_dim[static_cast<std::size_t>(d)];
    std::map<CellId, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Cell& c = k.cell(cols[j]);
      for (std::size_t i = 0; i < c.facets.size(); ++i) {
        Integer sign = (i % 2 == 0) ? 1 : -1;
        m.at(row_index.at(c.facets[i]), j) += sign;
      }
    }
    data.boundary[static_cast<std::size_t>(d)] = std::move(m);
  }
  return data;
}

std::string HomologyGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const Integer& t : torsion) {
    if (!first) os << " ⊕ ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

nlohmann::ordered_json HomologyGroup::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  j["betti"] = betti;
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (const Integer& v : torsion) t.push_back(to_int64(v));
  j["torsion"] = std::move(t);
  return j;
}

std::vector<HomologyGroup> homology_table(const QuasiComplex& k) {
  ChainComplexData data = boundary_matrices(k);
  int dim = k.dimension();
  if (dim < 0) return {};
  // One SNF per boundary matrix serves both the ranks and the torsion.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);
  std::vector<std::vector<Integer>> torsions(static_cast<std::size_t>(dim + 2));
  for (int d = 1; d <= dim; ++d) {
    SnfDecomposition snf = smith_normal_form(data.boundary[static_cast<std::size_t>(d)]);
    ranks[static_cast<std::size_t>(d)] = snf.rank();
    for (const Integer& t : snf.diagonal_entries()) {
      if (t > 1) torsions[static_cast<std::size_t>(d)].push_back(t);
    }
  }
  std::vector<HomologyGroup> table;
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup h;
    h.degree = d;
    std::int64_t cells =
        static_cast<std::int64_t>(data.cells_by_dim[static_cast<std::size_t>(d)].size());
    h.betti = cells - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d)]) -
              static_cast<std::int64_t>(ranks[static_cast<std::size_t>(d + 1)]);
    h.torsion = torsions[static_cast<std::size_t>(d + 1)];
    table.push_back(std::move(h));
  }
  return table;
}

HomologyGroup homology(const QuasiComplex& k, int degree) {
  if (degree < 0) throw InvalidTargetError("homology degree must be >= 0");
  std::vector<HomologyGroup> table = homology_table(k);
  if (degree < static_cast<int>(table.size())) return table[static_cast<std::size_t>(degree)];
  HomologyGroup trivial;
  trivial.degree = degree;
  return trivial;
}

HomologyGroup top_invariant(const QuasiComplex& k, int variety_dim) {
  if (variety_dim < 1) throw InvalidTargetError("variety dimension must be >= 1");
  if (k.dimension() > variety_dim - 1) {
    throw DimensionMismatchError("complex has cells of dimension >= the variety dimension");
  }
  HomologyGroup h = homology(k, variety_dim - 1);
  if (variety_dim == 1) {
    // Degree 0 compares against the reference after dropping one copy of Z.
    h.betti = std::max<std::int64_t>(0, h.betti - 1);
  }
  return h;
}

}  // namespace dualcx
