#include "toric/complex.hpp"

#include <algorithm>
#include <numeric>

#include "toric/error.hpp"
#include "toric/kernels.hpp"

namespace toric {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Face& f, std::size_t words) {
  Bits b(words, 0);
  for (auto x : f) b[x / 64] |= 1ull << (x % 64);
  return b;
}

// Supports must already be distinct. Quadratic subset filter.
std::vector<Face> maximal_only(std::vector<Face> faces, std::size_t ground_size) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const std::size_t words = std::max<std::size_t>(1, (ground_size + 63) / 64);
  std::vector<Bits> bits;
  bits.reserve(faces.size());
  for (const auto& f : faces) bits.push_back(to_bits(f, words));

  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
      if (i != j && faces[j].size() > faces[i].size() && kernels::is_subset(bits[i], bits[j])) maximal = false;
    }
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::irrelevant(std::size_t ground_size) {
  SimplicialComplex k(ground_size);
  k.facets_.push_back({});
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t ground_size, std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("face repeats a ground element");
    if (!f.empty() && f.back() >= ground_size) throw InputError("face leaves the ground set");
  }
  SimplicialComplex k(ground_size);
  k.facets_ = maximal_only(std::move(faces), ground_size);
  return k;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::contains(const Face& face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  Face common = facets_.front();
  for (const auto& f : facets_) {
    Face next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::permuted(const std::vector<std::uint32_t>& perm) const {
  std::vector<Face> faces;
  for (const auto& f : facets_) {
    Face g;
    for (auto x : f) g.push_back(perm.at(x));
    faces.push_back(std::move(g));
  }
  return from_faces(ground_size_, std::move(faces));
}

SimplicialComplex build_delta(const Graph& g, const MultiDegree& s, const FiberOptions& opts) {
  std::vector<Face> supports;
  for_each_decomposition(g, s, opts, [&](const std::vector<int>& c) {
    Face f;
    for (std::uint32_t e = 0; e < c.size(); ++e) {
      if (c[e] > 0) f.push_back(e);
    }
    supports.push_back(std::move(f));
    return true;
  });
  if (supports.empty()) return SimplicialComplex::void_complex(g.edge_count());
  return SimplicialComplex::from_faces(g.edge_count(), std::move(supports));
}

std::vector<Face> faces_of_dimension(const SimplicialComplex& k, int d) {
  std::vector<Face> out;
  if (k.is_void() || d < -1) return out;
  if (d == -1) return {Face{}};
  const auto size = static_cast<std::size_t>(d + 1);
  for (const auto& f : k.facets()) {
    if (f.size() < size) continue;
    // Walk all `size`-subsets of f by index combination.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Face face(size);
      for (std::size_t i = 0; i < size; ++i) face[i] = f[idx[i]];
      out.push_back(std::move(face));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == f.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toric
