#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/complex.hpp"
#include "toric/fiber.hpp"
#include "toric/graph.hpp"
#include "toric/homology.hpp"

namespace toric {

struct BettiEntry {
  int i = 0;
  MultiDegree s;
  std::uint64_t value = 0;
};

/// Nonzero multigraded Betti numbers of k[G] over k[E] for all |s| <= 2D.
///
/// Entries are sorted by (|s|, s lexicographically, i). The table is exact up
/// to the scan bound; pd and reg read from it are lower bounds unless
/// `certified` is set.
struct BettiTable {
  std::vector<BettiEntry> entries;
  int scan_bound = 0;
  bool certified = false;
  /// Why the table is (or is not) known to be complete.
  std::string certification;
  std::size_t semigroup_elements = 0;

  std::uint64_t value(int i, const MultiDegree& s) const;
};

struct BettiOptions {
  FieldSpec field = FieldSpec::rationals();
  FiberOptions fiber;
  HomologyOptions homology;
  /// Maximum number of semigroup elements a scan may visit.
  std::size_t max_scan = 100'000;
  bool assume_complete = false;
  /// 0 = default_thread_count().
  unsigned threads = 0;
  /// Called (serialised) with every degree complex whose homology is computed.
  std::function<void(const MultiDegree&, const SimplicialComplex&)> observer;
};

/// beta_{i,s} = dim H~_{i-1}(Delta_s).
std::uint64_t betti_number(const Graph& g, int i, const MultiDegree& s, const BettiOptions& opts = {});

BettiTable betti_table(const Graph& g, int max_degree, const BettiOptions& opts = {});

/// Semigroup elements of standard degree 0..max_degree (|s| = 2d), grouped by
/// degree, each group sorted. Throws ScanOverflow past `cap` elements in total.
std::vector<std::vector<MultiDegree>> semigroup_levels(const Graph& g, int max_degree, std::size_t cap);

/// Smallest scan bound known to capture every nonzero Betti number of k[G],
/// with the reason, when every connected component is covered by a rule:
///  - K_{u,v}: the closed forms give the largest shift pd + reg;
///  - the component passes the odd cycle condition: its toric ring is a normal
///    Cohen-Macaulay domain, so its largest shift is at most |E_c| - 1.
/// Largest shifts add over components because k[G] is their tensor product.
std::optional<std::pair<int, std::string>> known_complete_bound(const Graph& g);

enum class CmVerdict { kYes, kNo, kUnknown };
const char* to_string(CmVerdict v);

struct InvariantsReport {
  int reg = 0;
  int pd = 0;
  int depth = 0;
  int dim = 0;
  CmVerdict cohen_macaulay = CmVerdict::kUnknown;
  bool certified = false;
  int scan_bound = 0;
  std::vector<std::string> caveats;
};

InvariantsReport invariants(const Graph& g, const BettiTable& t);

/// (i, j) -> sum of beta_{i,s} over stored s with |s|/2 = j.
using StandardBetti = std::map<std::pair<int, int>, std::uint64_t>;
StandardBetti standard_graded_betti(const BettiTable& t);

}  // namespace toric
