#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

/// Degree s in Z^V, indexed by vertex position.
struct MultiDegree {
  std::vector<int> values;

  int total() const;
  std::size_t size() const { return values.size(); }
  bool is_zero() const;

  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

/// Degree JSON {"label": n, ...}; absent labels are 0. Rejects unknown labels and negatives.
MultiDegree parse_multidegree(const Graph& g, const std::string& json_text);
std::string multidegree_json(const Graph& g, const MultiDegree& s);

/// Nonnegative edge coefficients c with M_G c = s.
class Decomposition {
 public:
  /// Throws InputError when the coefficients do not sum to `s` entrywise.
  static Decomposition make(const Graph& g, const MultiDegree& s, std::vector<int> coeffs);

  const std::vector<int>& coefficients() const { return coeffs_; }
  std::vector<EdgeId> support() const;

  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;

 private:
  explicit Decomposition(std::vector<int> c) : coeffs_(std::move(c)) {}
  std::vector<int> coeffs_;
};

struct FiberOptions {
  std::size_t max_decompositions = 1'000'000;
  /// Branch on the edge whose endpoints have the fewest unassigned edges first.
  /// Output order is unaffected.
  bool min_remaining_degree_first = false;
};

/// Every c >= 0 with sum c_e a_e = s, in lexicographic order of the coefficient
/// vectors. Empty iff s is not in the semigroup. Throws FiberOverflow past the cap.
std::vector<Decomposition> enumerate_fiber(const Graph& g, const MultiDegree& s, const FiberOptions& opts = {});

/// Streams raw coefficient vectors in the same order; the callback returns false to stop.
/// Returns the number of vectors delivered.
std::size_t for_each_decomposition(const Graph& g, const MultiDegree& s, const FiberOptions& opts,
                                   const std::function<bool(const std::vector<int>&)>& visit);

bool in_semigroup(const Graph& g, const MultiDegree& s);

}  // namespace toric
