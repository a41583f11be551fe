#include "toric/structure.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "toric/error.hpp"

namespace toric {
namespace {

bool contains(const std::vector<VertexId>& xs, VertexId x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

class InducedCycleSearch {
 public:
  InducedCycleSearch(const Graph& g, int max_len) : g_(g), max_len_(max_len) {}

  std::vector<Cycle> run() {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      path_ = {v};
      extend();
    }
    std::sort(out_.begin(), out_.end(), [](const Cycle& a, const Cycle& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out_;
  }

 private:
  // path_ is an induced path whose first vertex is the smallest of the cycle.
  void extend() {
    const VertexId start = path_.front();
    const VertexId last = path_.back();
    for (VertexId w : g_.neighbors(last)) {
      if (w <= start || contains(path_, w)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size() && !chord; ++i) chord = g_.adjacent(w, path_[i]);
      if (chord) continue;
      const bool closes = path_.size() >= 2 && g_.adjacent(w, start);
      if (closes) {
        const std::size_t len = path_.size() + 1;
        if (len % 2 == 1 && static_cast<int>(len) <= max_len_ && path_[1] < w) {
          Cycle c = path_;
          c.push_back(w);
          out_.push_back(std::move(c));
        }
        continue;  // any longer path through w would have the chord w-start
      }
      if (static_cast<int>(path_.size()) + 1 >= max_len_) continue;
      path_.push_back(w);
      extend();
      path_.pop_back();
    }
  }

  const Graph& g_;
  int max_len_;
  std::vector<VertexId> path_;
  std::vector<Cycle> out_;
};

bool joined_by_edge(const Graph& g, const Cycle& a, const Cycle& b) {
  for (VertexId x : a) {
    for (VertexId y : b) {
      if (g.adjacent(x, y)) return true;
    }
  }
  return false;
}

bool disjoint(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return std::none_of(a.begin(), a.end(), [&](VertexId x) { return contains(b, x); });
}

std::optional<std::string> cycle_violation(const Graph& g, const Cycle& c, const char* name) {
  const std::string n = name;
  if (c.size() < 3 || c.size() % 2 == 0) return n + " must be an odd cycle with at least 3 vertices";
  if (std::set<VertexId>(c.begin(), c.end()).size() != c.size()) return n + " repeats a vertex";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) {
      return n + ": '" + g.label(c[i]) + "' and '" + g.label(c[(i + 1) % c.size()]) + "' are not adjacent";
    }
  }
  return std::nullopt;
}

std::optional<std::string> path_violation(const Graph& g, const Path& p, const ForbiddenEmbedding& emb,
                                          const char* name) {
  const std::string n = name;
  if (p.size() < 3) return n + " must have length at least 2";
  if (std::set<VertexId>(p.begin(), p.end()).size() != p.size()) return n + " repeats a vertex";
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) {
      return n + ": '" + g.label(p[i]) + "' and '" + g.label(p[i + 1]) + "' are not adjacent";
    }
  }
  if (!contains(emb.c1, p.front())) return n + " must start on c1";
  if (!contains(emb.c2, p.back())) return n + " must end on c2";
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (contains(emb.c1, p[i]) || contains(emb.c2, p[i])) {
      return n + ": internal vertex '" + g.label(p[i]) + "' lies on a cycle";
    }
  }
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> union_edges(const ForbiddenEmbedding& emb) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto add = [&](VertexId a, VertexId b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
  for (const Cycle* c : {&emb.c1, &emb.c2}) {
    for (std::size_t i = 0; i < c->size(); ++i) add((*c)[i], (*c)[(i + 1) % c->size()]);
  }
  for (const Path* p : {&emb.p1, &emb.p2}) {
    for (std::size_t i = 0; i + 1 < p->size(); ++i) add((*p)[i], (*p)[i + 1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Induced paths from C1 to C2 with internal vertices off both cycles and no
// chords to the cycles except at the two end edges.
class ConnectingPathSearch {
 public:
  ConnectingPathSearch(const Graph& g, const Cycle& c1, const Cycle& c2, int max_path)
      : g_(g), c1_(c1), c2_(c2), max_path_(max_path) {}

  std::vector<Path> run() {
    Cycle starts = c1_;
    std::sort(starts.begin(), starts.end());
    for (VertexId x : starts) {
      path_ = {x};
      for (VertexId w : g_.neighbors(x)) step(w);
    }
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void step(VertexId w) {
    if (contains(c1_, w) || contains(c2_, w) || contains(path_, w)) return;
    // w becomes internal vertex number path_.size().
    for (VertexId x : c1_) {
      if (x != path_.front() && g_.adjacent(w, x)) return;
    }
    if (path_.size() >= 2 && g_.adjacent(w, path_.front())) return;
    for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
      if (g_.adjacent(w, path_[i])) return;
    }
    std::vector<VertexId> to_c2;
    for (VertexId y : c2_) {
      if (g_.adjacent(w, y)) to_c2.push_back(y);
    }
    path_.push_back(w);
    const int length_if_closed = static_cast<int>(path_.size());
    if (to_c2.size() == 1) {
      if (length_if_closed <= max_path_) {
        Path p = path_;
        p.push_back(to_c2.front());
        out_.push_back(std::move(p));
      }
    } else if (to_c2.empty() && length_if_closed < max_path_) {
      for (VertexId next : g_.neighbors(w)) step(next);
    }
    path_.pop_back();
  }

  const Graph& g_;
  const Cycle& c1_;
  const Cycle& c2_;
  int max_path_;
  Path path_;
  std::vector<Path> out_;
};

std::vector<VertexId> labels_to_ids(const Graph& g, const nlohmann::json& arr, const std::string& key) {
  if (!arr.is_array()) throw InputError("embedding field \"" + key + "\" must be an array of vertex labels");
  std::vector<VertexId> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw InputError("embedding field \"" + key + "\" must contain strings");
    out.push_back(g.vertex(v.get<std::string>()));
  }
  return out;
}

}  // namespace

std::vector<Cycle> find_induced_odd_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw InputError("max cycle length must be at least 3");
  return InducedCycleSearch(g, max_len).run();
}

const char* to_string(OddCycleStatus s) {
  switch (s) {
    case OddCycleStatus::kSatisfied:
      return "satisfied";
    case OddCycleStatus::kViolated:
      return "violated";
    case OddCycleStatus::kBoundedInconclusive:
      break;
  }
  return "bounded-inconclusive";
}

OddCycleVerdict odd_cycle_condition(const Graph& g, int max_len) {
  OddCycleVerdict verdict;
  verdict.max_len = max_len;
  const auto cycles = find_induced_odd_cycles(g, max_len);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (disjoint(cycles[i], cycles[j]) && !joined_by_edge(g, cycles[i], cycles[j])) {
        verdict.status = OddCycleStatus::kViolated;
        verdict.witness = std::make_pair(cycles[i], cycles[j]);
        return verdict;
      }
    }
  }
  verdict.status = static_cast<std::size_t>(max_len) < g.vertex_count() ? OddCycleStatus::kBoundedInconclusive
                                                                         : OddCycleStatus::kSatisfied;
  return verdict;
}

OddCycleVerdict odd_cycle_condition(const Graph& g) {
  if (g.vertex_count() > kOddCycleCompleteLimit) {
    throw InputError("graph has more than " + std::to_string(kOddCycleCompleteLimit) +
                     " vertices; pass an explicit maximum cycle length");
  }
  return odd_cycle_condition(g, static_cast<int>(std::max<std::size_t>(3, g.vertex_count())));
}

ForbiddenEmbedding parse_embedding(const Graph& g, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed embedding JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("embedding JSON must be an object");
  for (const char* key : {"c1", "c2", "p1", "p2"}) {
    if (!doc.contains(key)) throw InputError(std::string("embedding JSON lacks \"") + key + "\"");
  }
  return ForbiddenEmbedding{labels_to_ids(g, doc["c1"], "c1"), labels_to_ids(g, doc["c2"], "c2"),
                            labels_to_ids(g, doc["p1"], "p1"), labels_to_ids(g, doc["p2"], "p2")};
}

std::string embedding_json(const Graph& g, const ForbiddenEmbedding& emb) {
  nlohmann::ordered_json doc;
  auto labels = [&](const std::vector<VertexId>& xs) {
    std::vector<std::string> out;
    for (VertexId x : xs) out.push_back(g.label(x));
    return out;
  };
  doc["c1"] = labels(emb.c1);
  doc["c2"] = labels(emb.c2);
  doc["p1"] = labels(emb.p1);
  doc["p2"] = labels(emb.p2);
  return doc.dump();
}

std::vector<VertexId> embedding_vertices(const ForbiddenEmbedding& emb) {
  std::vector<VertexId> vs;
  for (const auto* part : {&emb.c1, &emb.c2, &emb.p1, &emb.p2}) vs.insert(vs.end(), part->begin(), part->end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::optional<std::string> embedding_violation(const Graph& g, const ForbiddenEmbedding& emb) {
  for (const auto* part : {&emb.c1, &emb.c2, &emb.p1, &emb.p2}) {
    for (VertexId x : *part) {
      if (x >= g.vertex_count()) throw InputError("embedding refers to an unknown vertex");
    }
  }
  if (auto r = cycle_violation(g, emb.c1, "c1")) return r;
  if (auto r = cycle_violation(g, emb.c2, "c2")) return r;
  if (!disjoint(emb.c1, emb.c2)) return "c1 and c2 share a vertex";
  if (auto r = path_violation(g, emb.p1, emb, "p1")) return r;
  if (auto r = path_violation(g, emb.p2, emb, "p2")) return r;
  const Path inner1(emb.p1.begin() + 1, emb.p1.end() - 1);
  const Path inner2(emb.p2.begin() + 1, emb.p2.end() - 1);
  if (!disjoint(inner1, emb.p2) || !disjoint(inner2, emb.p1)) return "p1 and p2 share a vertex other than an endpoint";

  const auto vs = embedding_vertices(emb);
  const auto own = union_edges(emb);
  if (own.size() != vs.size() + 2) return "union subgraph does not have |E| = |V| + 2";
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(vs.begin(), vs.end(), e.u) || !std::binary_search(vs.begin(), vs.end(), e.v)) continue;
    const std::pair<VertexId, VertexId> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!std::binary_search(own.begin(), own.end(), key)) {
      return "union is not induced: extra edge {" + g.label(e.u) + ", " + g.label(e.v) + "}";
    }
  }
  return std::nullopt;
}

bool verify_embedding(const Graph& g, const ForbiddenEmbedding& emb) { return !embedding_violation(g, emb); }

std::optional<ForbiddenEmbedding> detect_forbidden(const Graph& g, const SearchLimits& limits) {
  if (limits.max_cycle < 3) return std::nullopt;
  const auto cycles = find_induced_odd_cycles(g, limits.max_cycle);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const Cycle& c1 = cycles[i];
      const Cycle& c2 = cycles[j];
      if (!disjoint(c1, c2) || joined_by_edge(g, c1, c2)) continue;
      const auto paths = ConnectingPathSearch(g, c1, c2, limits.max_path).run();
      for (std::size_t a = 0; a < paths.size(); ++a) {
        for (std::size_t b = a + 1; b < paths.size(); ++b) {
          ForbiddenEmbedding emb{c1, c2, paths[a], paths[b]};
          if (verify_embedding(g, emb)) return emb;
        }
      }
    }
  }
  return std::nullopt;
}

MultiDegree certificate_degree(const Graph& g, const ForbiddenEmbedding& emb) {
  MultiDegree s{std::vector<int>(g.vertex_count(), 0)};
  for (VertexId x : embedding_vertices(emb)) {
    s.values.at(x) = 1 + (contains(emb.p1, x) ? 1 : 0) + (contains(emb.p2, x) ? 1 : 0);
  }
  return s;
}

const char* to_string(CertificateVerdict v) {
  return v == CertificateVerdict::kNotCohenMacaulay ? "not-CM" : "inconclusive";
}

NonCMCertificate noncm_certificate(const Graph& g, const ForbiddenEmbedding& emb, const FieldSpec& field,
                                   const FiberOptions& fiber) {
  if (auto why = embedding_violation(g, emb)) throw InputError("invalid embedding: " + *why);
  NonCMCertificate cert;
  cert.embedding = emb;
  const auto vs = embedding_vertices(emb);
  cert.h = induced_subgraph(g, vs);
  cert.s_star = certificate_degree(g, emb);
  cert.s_star_h.values.reserve(vs.size());
  for (VertexId v : vs) cert.s_star_h.values.push_back(cert.s_star.values[v]);

  const auto delta = build_delta(cert.h, cert.s_star_h, fiber);
  cert.facets = delta.facets();
  cert.facet_count = delta.facets().size();
  cert.h2_dim = reduced_homology(delta, field).at(2);
  cert.beta_3 = cert.h2_dim;
  cert.applicable = g.edge_count() <= g.vertex_count() + 2;
  cert.verdict = (cert.applicable && cert.beta_3 >= 1) ? CertificateVerdict::kNotCohenMacaulay
                                                       : CertificateVerdict::kInconclusive;
  return cert;
}

std::vector<PartSpec> parse_parts(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed parts JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("parts")) doc = doc["parts"];
  if (!doc.is_array()) throw InputError("parts JSON must be an array of parts");
  std::vector<PartSpec> parts;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    const std::string where = "parts[" + std::to_string(i) + "]";
    PartSpec spec;
    const nlohmann::json* verts = &p;
    if (p.is_object()) {
      if (!p.contains("vertices")) throw InputError(where + ": missing \"vertices\"");
      verts = &p["vertices"];
      if (p.contains("edges")) {
        spec.edges.emplace();
        for (const auto& e : p["edges"]) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw InputError(where + ": edges must be pairs of labels");
          }
          spec.edges->emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
      }
    }
    if (!verts->is_array()) throw InputError(where + ": expected an array of vertex labels");
    for (const auto& v : *verts) {
      if (!v.is_string()) throw InputError(where + ": vertex labels must be strings");
      spec.vertices.push_back(v.get<std::string>());
    }
    parts.push_back(std::move(spec));
  }
  return parts;
}

LowerBounds lower_bounds(const Graph& g, const std::vector<PartSpec>& parts, const BettiOptions& opts) {
  std::vector<int> owner(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> ids(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& label : parts[i].vertices) {
      const VertexId v = g.vertex(label);
      if (owner[v] >= 0) {
        throw InputError("parts are not disjoint: '" + label + "' is in parts " + std::to_string(owner[v]) +
                         " and " + std::to_string(i));
      }
      owner[v] = static_cast<int>(i);
      ids[i].push_back(v);
    }
  }
  for (const Edge& e : g.edges()) {
    if (owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v]) {
      throw InputError("cross edge {" + g.label(e.u) + ", " + g.label(e.v) + "} joins parts " +
                       std::to_string(owner[e.u]) + " and " + std::to_string(owner[e.v]));
    }
  }

  LowerBounds out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph part = induced_subgraph(g, ids[i]);
    if (parts[i].edges) {
      std::set<std::pair<std::string, std::string>> given, induced;
      for (const auto& [a, b] : *parts[i].edges) given.emplace(std::min(a, b), std::max(a, b));
      for (EdgeId e = 0; e < part.edge_count(); ++e) {
        const auto& a = part.label(part.edge(e).u);
        const auto& b = part.label(part.edge(e).v);
        induced.emplace(std::min(a, b), std::max(a, b));
      }
      if (given != induced) {
        throw InputError("union not induced: part " + std::to_string(i) +
                         " does not list exactly the edges the graph induces on its vertices");
      }
    }
    PartBound pb;
    pb.vertices = ids[i];
    std::sort(pb.vertices.begin(), pb.vertices.end());
    const bool connected = part.vertex_count() > 0 && connected_components(part).size() == 1;
    if (part.edge_count() == 0) {
      pb.method = "edgeless: k[H] = k";
    } else if (auto kuv = connected ? recognize_complete_bipartite(part) : std::nullopt) {
      const auto [m, n] = *kuv;
      pb.complete_bipartite = kuv;
      pb.reg = static_cast<int>(std::min(m, n)) - 1;
      pb.pd = static_cast<int>((m - 1) * (n - 1));
      pb.method = "complete bipartite closed form";
    } else {
      const auto table = betti_table(part, static_cast<int>(part.edge_count()), opts);
      const auto inv = invariants(part, table);
      pb.reg = inv.reg;
      pb.pd = inv.pd;
      pb.exact = table.certified;
      pb.method = "Betti scan to degree " + std::to_string(table.scan_bound) +
                  (table.certified ? " (certified)" : " (lower bound)");
    }
    out.reg_lb += pb.reg;
    out.pd_lb += pb.pd;
    out.parts.push_back(std::move(pb));
  }
  return out;
}

ForbiddenRegBound forbidden_reg_bound(const ForbiddenEmbedding& emb) {
  ForbiddenRegBound b;
  b.t = static_cast<int>(embedding_vertices(emb).size());
  b.p = static_cast<int>(emb.p1.size()) - 1;
  b.q = static_cast<int>(emb.p2.size()) - 1;
  b.corollary_value = b.t + b.p + b.q - 1;
  b.s_star_total = b.t + b.p + b.q + 2;
  b.standard_reading = b.s_star_total / 2 - 3;
  b.note = "corollary_value reads degrees as |s| (vertex weight); with each edge generator in degree 1, "
           "beta_{3,s*} != 0 gives reg >= |s*|/2 - 3 = standard_reading";
  return b;
}

}  // namespace toric
