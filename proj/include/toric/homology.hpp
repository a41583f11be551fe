#pragma once

#include <cstddef>
#include <vector>

#include "toric/complex.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// Matrix of the simplicial boundary map from d-faces to (d-1)-faces.
/// Rows follow faces_of_dimension(k, d - 1), columns faces_of_dimension(k, d).
/// Dropping the j-th smallest element (j from 0) carries sign (-1)^j.
struct BoundaryMatrix {
  int dimension = 0;
  SparseIntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// True when the product lower * upper (boundary_{d-1} * boundary_d) is zero.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

struct HomologyOptions {
  RankOptions rank;
  /// Skip elimination for cones, whose reduced homology vanishes.
  bool cone_shortcut = true;
};

/// Reduced homology ranks, dims[0] being degree -1 and dims.back() degree dim(k).
struct ReducedHomology {
  std::vector<std::size_t> dims;

  /// Rank in degree `d`; zero outside the stored range.
  std::size_t at(int d) const {
    const int i = d + 1;
    return (i >= 0 && static_cast<std::size_t>(i) < dims.size()) ? dims[static_cast<std::size_t>(i)] : 0;
  }
  bool vanishes() const;
};

ReducedHomology reduced_homology(const SimplicialComplex& k, const FieldSpec& f = FieldSpec::rationals(),
                                 const HomologyOptions& opts = {});

/// Reduced Euler characteristic from face counts versus the alternating sum of
/// reduced Betti numbers, each computed independently.
bool euler_characteristic_check(const SimplicialComplex& k, const FieldSpec& f = FieldSpec::rationals());

long reduced_euler_characteristic(const SimplicialComplex& k);

}  // namespace toric
