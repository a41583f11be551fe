#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toric {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Unordered vertex pair; `u` and `v` keep the order in which they were declared.
struct Edge {
  VertexId u;
  VertexId v;

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Simple undirected graph with opaque string labels.
///
/// Vertex and edge orders are insertion orders and never change, so every
/// positional quantity (incidence columns, multidegrees, decompositions) is
/// reproducible. Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates loops, duplicate edges, unknown endpoints and duplicate vertices.
  /// Throws InputError naming the offending edge.
  static Graph from_labels(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges);

  static Graph from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// "u-v" using the declared endpoint order.
  std::string edge_label(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view label) const;
  VertexId vertex(std::string_view label) const;  // throws InputError when unknown

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Sorted neighbour list.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  /// Incident edges in edge order.
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      if (a.edges_[i].u != b.edges_[i].u || a.edges_[i].v != b.edges_[i].v) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Column a_e of the incidence matrix: 1 at both endpoints of e, 0 elsewhere.
struct IncidenceColumn {
  std::vector<int> entries;
};

IncidenceColumn incidence_column(const Graph& g, EdgeId e);
IncidenceColumn incidence_column(const Graph& g, std::string_view a, std::string_view b);

/// Rank over Q of the |V| x |E| incidence matrix. This is dim k[G].
std::size_t incidence_rank(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest vertex index.
/// Each component lists its vertices in increasing index order.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Bipartiteness per connected component, in connected_components() order.
std::vector<bool> is_bipartite(const Graph& g);

/// Graph on `vs` with exactly the edges of `g` joining two members of `vs`.
/// Vertex and edge orders follow `g`.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels);

/// Part sizes (u, v) with u <= v when `g` is K_{u,v} with u >= 1.
/// Throws InputError when `g` is disconnected.
std::optional<std::pair<std::size_t, std::size_t>> recognize_complete_bipartite(const Graph& g);

/// Parses JSON {"vertices": [...], "edges": [[u, v], ...]} or a whitespace edge
/// list (one "u v" per line, '#' comments). Errors carry a location.
Graph load_graph(std::string_view source);
Graph load_graph_file(const std::string& path);

std::string write_graph_json(const Graph& g);
std::string write_edge_list(const Graph& g);

}  // namespace toric
