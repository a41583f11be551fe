#include "toric/fiber.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "toric/error.hpp"

namespace toric {

int MultiDegree::total() const { return std::accumulate(values.begin(), values.end(), 0); }

bool MultiDegree::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

MultiDegree parse_multidegree(const Graph& g, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed degree JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("degree JSON must be an object {vertexLabel: integer}");
  MultiDegree s{std::vector<int>(g.vertex_count(), 0)};
  for (const auto& [label, value] : doc.items()) {
    auto v = g.find_vertex(label);
    if (!v) throw InputError("degree names unknown vertex '" + label + "'");
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw InputError("degree of '" + label + "' must be a nonnegative integer");
    }
    s.values[*v] = value.get<int>();
  }
  return s;
}

std::string multidegree_json(const Graph& g, const MultiDegree& s) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.values[v] != 0) doc[g.label(v)] = s.values[v];
  }
  return doc.dump();
}

Decomposition Decomposition::make(const Graph& g, const MultiDegree& s, std::vector<int> coeffs) {
  if (coeffs.size() != g.edge_count() || s.size() != g.vertex_count()) {
    throw InputError("decomposition size does not match the graph");
  }
  std::vector<int> sum(g.vertex_count(), 0);
  for (EdgeId e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] < 0) throw InputError("negative edge coefficient");
    sum[g.edge(e).u] += coeffs[e];
    sum[g.edge(e).v] += coeffs[e];
  }
  if (sum != s.values) throw InputError("coefficients do not decompose the multidegree");
  return Decomposition(std::move(coeffs));
}

std::vector<EdgeId> Decomposition::support() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] > 0) out.push_back(e);
  }
  return out;
}

namespace {

// Depth-first search over edges in a fixed order. `residual` holds s minus the
// assigned part; `open[x]` counts unassigned edges at x. When an edge is the
// last open one at an endpoint its coefficient is forced.
class Search {
 public:
  Search(const Graph& g, const MultiDegree& s, const FiberOptions& opts,
         const std::function<bool(const std::vector<int>&)>& visit)
      : g_(g), opts_(opts), visit_(visit), residual_(s.values), coeffs_(g.edge_count(), 0) {
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), 0);
    open_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) open_[v] = static_cast<int>(g.degree(v));
  }

  std::size_t run() {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (residual_[v] < 0) return 0;
      if (open_[v] == 0 && residual_[v] != 0) return 0;
    }
    if ((std::accumulate(residual_.begin(), residual_.end(), 0) & 1) != 0) return 0;
    assigned_.assign(g_.edge_count(), false);
    descend(0);
    return delivered_;
  }

 private:
  EdgeId pick(std::size_t depth) {
    if (!opts_.min_remaining_degree_first) return order_[depth];
    EdgeId best = g_.edge_count();
    int best_key = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (assigned_[e]) continue;
      const int key = std::min(open_[g_.edge(e).u], open_[g_.edge(e).v]);
      if (best == g_.edge_count() || key < best_key) {
        best = e;
        best_key = key;
      }
    }
    return best;
  }

  // A vertex cannot absorb more than its open edges can carry.
  bool feasible(VertexId x) const {
    if (open_[x] == 0) return residual_[x] == 0;
    long capacity = 0;
    for (EdgeId f : g_.incident_edges(x)) {
      if (!assigned_[f]) capacity += residual_[g_.edge(f).other(x)];
    }
    return residual_[x] <= capacity;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == g_.edge_count()) {
      if (++delivered_ > opts_.max_decompositions) {
        throw FiberOverflow("fiber exceeds " + std::to_string(opts_.max_decompositions) + " decompositions");
      }
      if (!visit_(coeffs_)) stop_ = true;
      return;
    }
    const EdgeId e = pick(depth);
    const VertexId u = g_.edge(e).u, v = g_.edge(e).v;
    int lo = 0, hi = std::min(residual_[u], residual_[v]);
    if (open_[u] == 1) lo = std::max(lo, residual_[u]);
    if (open_[v] == 1) lo = std::max(lo, residual_[v]);
    if (open_[u] == 1 && residual_[u] > hi) return;
    if (open_[v] == 1 && residual_[v] > hi) return;
    if (open_[u] == 1 && open_[v] == 1 && residual_[u] != residual_[v]) return;

    assigned_[e] = true;
    --open_[u];
    --open_[v];
    for (int c = lo; c <= hi && !stop_; ++c) {
      coeffs_[e] = c;
      residual_[u] -= c;
      residual_[v] -= c;
      if (neighbours_feasible(u, v)) descend(depth + 1);
      residual_[u] += c;
      residual_[v] += c;
    }
    coeffs_[e] = 0;
    ++open_[u];
    ++open_[v];
    assigned_[e] = false;
  }

  bool neighbours_feasible(VertexId u, VertexId v) const {
    if (!feasible(u) || !feasible(v)) return false;
    for (VertexId x : {u, v}) {
      for (VertexId w : g_.neighbors(x)) {
        if (open_[w] > 0 && !feasible(w)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const FiberOptions& opts_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> residual_;
  std::vector<int> coeffs_;
  std::vector<int> open_;
  std::vector<EdgeId> order_;
  std::vector<bool> assigned_;
  std::size_t delivered_ = 0;
  bool stop_ = false;
};

void check_dimension(const Graph& g, const MultiDegree& s) {
  if (s.size() != g.vertex_count()) {
    throw InputError("multidegree has " + std::to_string(s.size()) + " entries but the graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

std::size_t for_each_decomposition(const Graph& g, const MultiDegree& s, const FiberOptions& opts,
                                   const std::function<bool(const std::vector<int>&)>& visit) {
  check_dimension(g, s);
  return Search(g, s, opts, visit).run();
}

std::vector<Decomposition> enumerate_fiber(const Graph& g, const MultiDegree& s, const FiberOptions& opts) {
  std::vector<Decomposition> out;
  for_each_decomposition(g, s, opts, [&](const std::vector<int>& c) {
    out.push_back(Decomposition::make(g, s, c));
    return true;
  });
  if (opts.min_remaining_degree_first) std::sort(out.begin(), out.end());
  return out;
}

bool in_semigroup(const Graph& g, const MultiDegree& s) {
  FiberOptions opts;
  opts.max_decompositions = 1;
  return for_each_decomposition(g, s, opts, [](const std::vector<int>&) { return false; }) > 0;
}

}  // namespace toric
