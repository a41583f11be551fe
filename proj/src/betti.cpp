#include "toric/betti.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "toric/error.hpp"
#include "toric/parallel.hpp"
#include "toric/structure.hpp"

namespace toric {

std::uint64_t BettiTable::value(int i, const MultiDegree& s) const {
  for (const auto& e : entries) {
    if (e.i == i && e.s == s) return e.value;
  }
  return 0;
}

std::uint64_t betti_number(const Graph& g, int i, const MultiDegree& s, const BettiOptions& opts) {
  if (i < 0) throw InputError("homological index must be nonnegative");
  const auto delta = build_delta(g, s, opts.fiber);
  if (opts.observer) opts.observer(s, delta);
  return reduced_homology(delta, opts.field, opts.homology).at(i - 1);
}

std::vector<std::vector<MultiDegree>> semigroup_levels(const Graph& g, int max_degree, std::size_t cap) {
  std::vector<std::vector<MultiDegree>> levels;
  levels.push_back({MultiDegree{std::vector<int>(g.vertex_count(), 0)}});
  std::size_t total = 1;
  for (int d = 1; d <= max_degree; ++d) {
    std::set<std::vector<int>> next;
    for (const auto& x : levels.back()) {
      for (const Edge& e : g.edges()) {
        std::vector<int> y = x.values;
        ++y[e.u];
        ++y[e.v];
        next.insert(std::move(y));
      }
      if (total + next.size() > cap) {
        throw ScanOverflow("semigroup scan exceeds " + std::to_string(cap) + " elements at degree " +
                           std::to_string(d) + "; lower --max-deg or raise --max-scan");
      }
    }
    if (next.empty()) break;
    total += next.size();
    std::vector<MultiDegree> level;
    level.reserve(next.size());
    for (const auto& v : next) level.push_back(MultiDegree{v});
    levels.push_back(std::move(level));
  }
  return levels;
}

namespace {

std::optional<std::pair<int, std::string>> connected_bound(const Graph& g) {
  const int m = static_cast<int>(g.edge_count());
  if (m == 0) return std::make_pair(0, std::string("edgeless"));
  if (auto kuv = recognize_complete_bipartite(g)) {
    const auto [u, v] = *kuv;
    const int pd = static_cast<int>((u - 1) * (v - 1));
    const int reg = static_cast<int>(u) - 1;
    return std::make_pair(pd + reg, "K_{" + std::to_string(u) + "," + std::to_string(v) + "} closed form");
  }
  if (g.vertex_count() > kOddCycleCompleteLimit) return std::nullopt;
  if (odd_cycle_condition(g).status != OddCycleStatus::kSatisfied) return std::nullopt;
  return std::make_pair(m - 1, std::string("odd cycle condition (normal)"));
}

}  // namespace

std::optional<std::pair<int, std::string>> known_complete_bound(const Graph& g) {
  int total = 0;
  std::string reasons;
  for (const auto& comp : connected_components(g)) {
    const Graph part = induced_subgraph(g, comp);
    if (part.edge_count() == 0) continue;
    auto b = connected_bound(part);
    if (!b) return std::nullopt;
    total += b->first;
    if (!reasons.empty()) reasons += " + ";
    reasons += b->second + " " + std::to_string(b->first);
  }
  if (reasons.empty()) return std::make_pair(0, std::string("no edges: k[G] = k"));
  return std::make_pair(total, "largest Betti shift <= " + std::to_string(total) + " (" + reasons + ")");
}

BettiTable betti_table(const Graph& g, int max_degree, const BettiOptions& opts) {
  if (max_degree < 0) throw InputError("scan bound must be nonnegative");
  const auto levels = semigroup_levels(g, max_degree, opts.max_scan);
  std::vector<const MultiDegree*> work;
  for (const auto& level : levels) {
    for (const auto& s : level) work.push_back(&s);
  }

  std::vector<std::vector<std::pair<int, std::uint64_t>>> results(work.size());
  std::mutex observer_mutex;
  parallel_for(work.size(), opts.threads, [&](std::size_t idx) {
    const MultiDegree& s = *work[idx];
    const auto delta = build_delta(g, s, opts.fiber);
    if (opts.observer) {
      std::lock_guard lock(observer_mutex);
      opts.observer(s, delta);
    }
    if (delta.facets().size() == 1 && !delta.is_irrelevant()) return;  // a simplex
    const auto h = reduced_homology(delta, opts.field, opts.homology);
    for (int d = -1; d <= delta.dimension(); ++d) {
      if (const auto v = h.at(d); v > 0) results[idx].emplace_back(d + 1, v);
    }
  });

  BettiTable t;
  t.scan_bound = max_degree;
  t.semigroup_elements = work.size();
  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    for (const auto& [i, v] : results[idx]) t.entries.push_back({i, *work[idx], v});
  }
  // Levels are already in (|s|, lex) order and i ascends within each element.

  if (opts.assume_complete) {
    t.certified = true;
    t.certification = "assumed complete by the caller";
  } else if (auto known = known_complete_bound(g)) {
    t.certified = max_degree >= known->first;
    t.certification = known->second + (t.certified ? "" : "; scan bound " + std::to_string(max_degree) +
                                                             " is below " + std::to_string(known->first));
  } else {
    t.certification = "no completeness bound known for this graph";
  }
  return t;
}

const char* to_string(CmVerdict v) {
  switch (v) {
    case CmVerdict::kYes:
      return "yes";
    case CmVerdict::kNo:
      return "no";
    case CmVerdict::kUnknown:
      break;
  }
  return "unknown";
}

InvariantsReport invariants(const Graph& g, const BettiTable& t) {
  InvariantsReport r;
  for (const auto& e : t.entries) {
    r.pd = std::max(r.pd, e.i);
    r.reg = std::max(r.reg, e.s.total() / 2 - e.i);
  }
  r.depth = static_cast<int>(g.edge_count()) - r.pd;
  r.dim = static_cast<int>(incidence_rank(g));
  r.certified = t.certified;
  r.scan_bound = t.scan_bound;
  if (t.certified) {
    r.cohen_macaulay = r.depth == r.dim ? CmVerdict::kYes : CmVerdict::kNo;
  } else {
    // pd can only grow with the scan bound, so depth < dim is already final.
    r.cohen_macaulay = r.depth < r.dim ? CmVerdict::kNo : CmVerdict::kUnknown;
    r.caveats.push_back("Betti table scanned only up to degree " + std::to_string(t.scan_bound) +
                        " and not certified complete: pd and reg are lower bounds, depth is an upper bound");
  }
  return r;
}

StandardBetti standard_graded_betti(const BettiTable& t) {
  StandardBetti out;
  for (const auto& e : t.entries) out[{e.i, e.s.total() / 2}] += e.value;
  return out;
}

}  // namespace toric
