#include "toric/homology.hpp"

#include <algorithm>
#include <map>

namespace toric {

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  BoundaryMatrix b;
  b.dimension = d;
  const auto cols = faces_of_dimension(k, d);
  const auto rows = faces_of_dimension(k, d - 1);
  b.matrix.rows = rows.size();
  b.matrix.cols = cols.size();
  if (rows.empty() || cols.empty()) return b;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    const Face& face = cols[c];
    for (std::size_t j = 0; j < face.size(); ++j) {
      Face facet_of;
      facet_of.reserve(face.size() - 1);
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (i != j) facet_of.push_back(face[i]);
      }
      auto it = std::lower_bound(rows.begin(), rows.end(), facet_of);
      const auto r = static_cast<std::uint32_t>(it - rows.begin());
      b.matrix.entries.push_back({r, c, (j % 2 == 0) ? 1 : -1});
    }
  }
  return b;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.matrix.cols != upper.matrix.rows) return false;
  // Index lower's entries by column, then accumulate (lower * upper) sparsely.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> by_col(lower.matrix.cols);
  for (const auto& e : lower.matrix.entries) by_col[e.col].emplace_back(e.row, e.value);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> product;
  for (const auto& e : upper.matrix.entries) {
    for (const auto& [r, v] : by_col[e.row]) product[{r, e.col}] += v * e.value;
  }
  return std::all_of(product.begin(), product.end(), [](const auto& kv) { return kv.second == 0; });
}

bool ReducedHomology::vanishes() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

ReducedHomology reduced_homology(const SimplicialComplex& k, const FieldSpec& f, const HomologyOptions& opts) {
  ReducedHomology h;
  if (k.is_void()) {
    h.dims = {0};
    return h;
  }
  const int top = k.dimension();
  h.dims.assign(static_cast<std::size_t>(top + 2), 0);
  if (opts.cone_shortcut && k.is_cone()) return h;

  // ranks[d + 1] = rank of the boundary out of dimension d; the map out of
  // dimension -1 and the one into dimension top + 1 are zero.
  std::vector<std::size_t> face_count(static_cast<std::size_t>(top + 2));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int d = -1; d <= top; ++d) face_count[static_cast<std::size_t>(d + 1)] = faces_of_dimension(k, d).size();
  for (int d = 0; d <= top; ++d) {
    ranks[static_cast<std::size_t>(d + 1)] = rank(boundary_matrix(k, d).matrix, f, opts.rank);
  }
  for (int d = -1; d <= top; ++d) {
    const auto i = static_cast<std::size_t>(d + 1);
    h.dims[i] = face_count[i] - ranks[i] - ranks[i + 1];
  }
  return h;
}

long reduced_euler_characteristic(const SimplicialComplex& k) {
  if (k.is_void()) return 0;
  long chi = 0;
  for (int d = -1; d <= k.dimension(); ++d) {
    const long n = static_cast<long>(faces_of_dimension(k, d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

bool euler_characteristic_check(const SimplicialComplex& k, const FieldSpec& f) {
  HomologyOptions opts;
  opts.cone_shortcut = false;
  const auto h = reduced_homology(k, f, opts);
  long alt = 0;
  for (int d = -1; d <= k.dimension(); ++d) {
    const long n = static_cast<long>(h.at(d));
    alt += (d % 2 == 0) ? n : -n;
  }
  return alt == reduced_euler_characteristic(k);
}

}  // namespace toric
