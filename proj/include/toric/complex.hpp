#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/fiber.hpp"
#include "toric/graph.hpp"

namespace toric {

/// Sorted list of ground-set positions.
using Face = std::vector<std::uint32_t>;

/// Finite simplicial complex on {0, ..., ground_size - 1}, stored by facets.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They are different values: the first has no reduced homology,
/// the second has H~_{-1} of rank one.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::size_t ground_size) { return SimplicialComplex(ground_size); }
  static SimplicialComplex irrelevant(std::size_t ground_size);
  /// Keeps only the maximal members of `faces`; facets end up in lexicographic order.
  static SimplicialComplex from_faces(std::size_t ground_size, std::vector<Face> faces);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dimension() const;
  bool contains(const Face& face) const;
  /// True when some ground element lies in every facet (the complex is a cone).
  bool is_cone() const;
  /// Relabels ground element i as perm[i].
  SimplicialComplex permuted(const std::vector<std::uint32_t>& perm) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  explicit SimplicialComplex(std::size_t n) : ground_size_(n) {}
  std::size_t ground_size_ = 0;
  std::vector<Face> facets_;
};

/// The degree complex on E whose facets are the maximal supports of the fiber over s.
SimplicialComplex build_delta(const Graph& g, const MultiDegree& s, const FiberOptions& opts = {});

/// All faces with d + 1 elements, deduplicated and lexicographically ordered.
/// For d = -1 this is the empty face unless the complex is void.
std::vector<Face> faces_of_dimension(const SimplicialComplex& k, int d);

}  // namespace toric
