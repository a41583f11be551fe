#include "toric/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

using nlohmann::json;

Graph Graph::from_indices(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  Graph g;
  std::unordered_map<std::string, VertexId> seen;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (!seen.emplace(vertices[v], v).second) {
      throw InputError("duplicate vertex label '" + vertices[v] + "'");
    }
  }
  g.labels_ = std::move(vertices);
  const std::size_t n = g.labels_.size();
  g.adjacency_.assign(n, {});
  g.incidence_.assign(n, {});
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    const std::string where = "edge " + std::to_string(e);
    if (ed.u >= n || ed.v >= n) throw InputError(where + ": unknown vertex");
    if (ed.u == ed.v) throw InputError(where + ": loop at '" + g.labels_[ed.u] + "'");
    if (g.find_edge(ed.u, ed.v)) {
      throw InputError(where + ": duplicate edge {" + g.labels_[ed.u] + ", " + g.labels_[ed.v] + "}");
    }
    g.edges_.push_back(ed);
    auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
      list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(g.adjacency_[ed.u], ed.v);
    insert_sorted(g.adjacency_[ed.v], ed.u);
    g.incidence_[ed.u].push_back(e);
    g.incidence_[ed.v].push_back(e);
  }
  return g;
}

Graph Graph::from_labels(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [a, b] = edges[e];
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw InputError("edge " + std::to_string(e) + ": unknown vertex '" + (ia == index.end() ? a : b) + "'");
    }
    ids.push_back({ia->second, ib->second});
  }
  return from_indices(std::move(vertices), ids);
}

std::string Graph::edge_label(EdgeId e) const {
  const Edge& ed = edges_.at(e);
  return labels_[ed.u] + "-" + labels_[ed.v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

VertexId Graph::vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= incidence_.size()) return std::nullopt;
  for (EdgeId e : incidence_[a]) {
    if (edges_[e].other(a) == b) return e;
  }
  return std::nullopt;
}

IncidenceColumn incidence_column(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InputError("unknown edge " + std::to_string(e));
  IncidenceColumn col{std::vector<int>(g.vertex_count(), 0)};
  col.entries[g.edge(e).u] = 1;
  col.entries[g.edge(e).v] = 1;
  return col;
}

IncidenceColumn incidence_column(const Graph& g, std::string_view a, std::string_view b) {
  auto e = g.find_edge(g.vertex(a), g.vertex(b));
  if (!e) throw InputError("unknown edge {" + std::string(a) + ", " + std::string(b) + "}");
  return incidence_column(g, *e);
}

std::size_t incidence_rank(const Graph& g) {
  SparseIntMatrix m;
  m.rows = g.vertex_count();
  m.cols = g.edge_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m.entries.push_back({static_cast<std::uint32_t>(g.edge(e).u), static_cast<std::uint32_t>(e), 1});
    m.entries.push_back({static_cast<std::uint32_t>(g.edge(e).v), static_cast<std::uint32_t>(e), 1});
  }
  return rank(m, FieldSpec::rationals());
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<bool> is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<bool> out;
  for (const auto& comp : connected_components(g)) {
    bool ok = true;
    std::vector<VertexId> queue{comp.front()};
    color[comp.front()] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId x = queue[i];
      for (VertexId w : g.neighbors(x)) {
        if (color[w] < 0) {
          color[w] = 1 - color[x];
          queue.push_back(w);
        } else if (color[w] == color[x]) {
          ok = false;
        }
      }
    }
    out.push_back(ok);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::ptrdiff_t> position(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (VertexId v : sorted) {
    if (v >= g.vertex_count()) throw InputError("unknown vertex index " + std::to_string(v));
    position[v] = static_cast<std::ptrdiff_t>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      edges.push_back({static_cast<VertexId>(position[e.u]), static_cast<VertexId>(position[e.v])});
    }
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> vs;
  vs.reserve(labels.size());
  for (const auto& l : labels) vs.push_back(g.vertex(l));
  return induced_subgraph(g, vs);
}

std::optional<std::pair<std::size_t, std::size_t>> recognize_complete_bipartite(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.size() > 1) throw InputError("complete bipartite recognition needs a connected graph");
  if (g.edge_count() == 0) return std::nullopt;
  if (!is_bipartite(g).front()) return std::nullopt;

  std::vector<int> side(g.vertex_count(), -1);
  std::vector<VertexId> queue{0};
  side[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : g.neighbors(queue[i])) {
      if (side[w] < 0) {
        side[w] = 1 - side[queue[i]];
        queue.push_back(w);
      }
    }
  }
  const auto u = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
  const std::size_t v = g.vertex_count() - u;
  if (g.edge_count() != u * v) return std::nullopt;
  return std::make_pair(std::min(u, v), std::max(u, v));
}

namespace {

std::string location_from_offset(std::string_view source, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Graph parse_json_graph(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    throw InputError("malformed graph JSON at " + location_from_offset(source, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object() || !doc.contains("edges")) {
    throw InputError("graph JSON must be an object with an \"edges\" array");
  }
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  const bool declared = doc.contains("vertices");
  if (declared) {
    if (!doc["vertices"].is_array()) throw InputError("\"vertices\" must be an array of strings");
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
      const auto& v = doc["vertices"][i];
      if (!v.is_string()) throw InputError("vertices[" + std::to_string(i) + "]: expected a string label");
      vertices.push_back(v.get<std::string>());
    }
  }
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError(where + ": expected a pair of string labels");
    }
    std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
    if (a == b) throw InputError(where + ": loop at '" + a + "'");
    for (const auto& l : {a, b}) {
      if (std::find(vertices.begin(), vertices.end(), l) == vertices.end()) {
        if (declared) throw InputError(where + ": unknown vertex '" + l + "'");
        vertices.push_back(l);
      }
    }
    edges.emplace_back(std::move(a), std::move(b));
  }
  try {
    return Graph::from_labels(std::move(vertices), edges);
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind("edge ", 0) == 0) msg = "edges[" + msg.substr(5, msg.find(':') - 5) + "]" + msg.substr(msg.find(':'));
    throw InputError(msg);
  }
}

Graph parse_edge_list(std::string_view source) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::size_t> edge_line;
  std::istringstream in{std::string(source)};
  std::string line;
  std::size_t lineno = 0;
  auto declare = [&](const std::string& l) {
    if (std::find(vertices.begin(), vertices.end(), l) == vertices.end()) vertices.push_back(l);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    const std::string where = "line " + std::to_string(lineno);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {  // isolated vertex declaration
      declare(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) throw InputError(where + ": expected two vertex labels");
    if (tokens[0] == tokens[1]) throw InputError(where + ": loop at '" + tokens[0] + "'");
    const std::string key = std::min(tokens[0], tokens[1]) + "\n" + std::max(tokens[0], tokens[1]);
    if (auto [it, fresh] = edge_line.emplace(key, lineno); !fresh) {
      throw InputError(where + ": duplicate edge {" + tokens[0] + ", " + tokens[1] + "} (first on line " +
                       std::to_string(it->second) + ")");
    }
    declare(tokens[0]);
    declare(tokens[1]);
    edges.emplace_back(tokens[0], tokens[1]);
  }
  return Graph::from_labels(std::move(vertices), edges);
}

}  // namespace

Graph load_graph(std::string_view source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') return parse_json_graph(source);
  return parse_edge_list(source);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_graph(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_graph_json(const Graph& g) {
  json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({g.label(e.u), g.label(e.v)});
  return doc.dump() + "\n";
}

std::string write_edge_list(const Graph& g) {
  // Plain edge lines rebuild the vertex order by first appearance. When that
  // order differs (or isolated vertices exist) every vertex is declared first.
  std::vector<VertexId> appearance;
  std::vector<bool> seen(g.vertex_count(), false);
  for (const Edge& e : g.edges()) {
    for (VertexId x : {e.u, e.v}) {
      if (!seen[x]) {
        seen[x] = true;
        appearance.push_back(x);
      }
    }
  }
  bool in_order = appearance.size() == g.vertex_count();
  for (std::size_t i = 0; in_order && i < appearance.size(); ++i) in_order = appearance[i] == i;

  std::string out;
  if (!in_order) {
    for (const auto& l : g.labels()) out += l + "\n";
  }
  for (const Edge& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + "\n";
  return out;
}

}  // namespace toric
