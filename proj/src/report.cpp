#include "toric/report.hpp"

#include <cstdint>
#include <cstdio>

namespace toric {
namespace {

Json labels_of(const Graph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

Json faces_json(const Graph& g, const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const auto& f : faces) {
    Json face = Json::array();
    for (auto e : f) face.push_back(g.edge_label(e));
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

std::string input_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json graph_summary_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  Json comps = Json::array();
  for (const auto& c : connected_components(g)) comps.push_back(labels_of(g, c));
  j["components"] = std::move(comps);
  Json bip = Json::array();
  for (bool b : is_bipartite(g)) bip.push_back(b);
  j["bipartite"] = std::move(bip);
  return j;
}

Json multidegree_object(const Graph& g, const MultiDegree& s) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.values[v] != 0) j[g.label(v)] = s.values[v];
  }
  return j;
}

Json fiber_json(const Graph& g, const MultiDegree& s, const std::vector<Decomposition>& fiber) {
  Json j;
  j["degree"] = multidegree_object(g, s);
  j["total"] = s.total();
  j["in_semigroup"] = !fiber.empty();
  j["count"] = fiber.size();
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge_label(e));
  j["edge_order"] = std::move(edges);
  Json list = Json::array();
  for (const auto& d : fiber) list.push_back(d.coefficients());
  j["decompositions"] = std::move(list);
  return j;
}

Json complex_json(const Graph& g, const MultiDegree& s, const SimplicialComplex& k, const FieldSpec& field) {
  Json j;
  j["degree"] = multidegree_object(g, s);
  j["void"] = k.is_void();
  j["irrelevant"] = k.is_irrelevant();
  j["facets"] = faces_json(g, k.facets());
  const auto h = reduced_homology(k, field);
  Json hom = Json::object();
  for (int d = -1; d <= k.dimension(); ++d) {
    if (h.at(d) != 0) hom[std::to_string(d)] = h.at(d);
  }
  j["field"] = field.name();
  j["reduced_homology"] = std::move(hom);
  return j;
}

Json standard_betti_json(const StandardBetti& b) {
  Json out = Json::array();
  for (const auto& [ij, v] : b) out.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"value", v}});
  return out;
}

Json betti_table_json(const Graph& g, const BettiTable& t, const FieldSpec& field) {
  Json j;
  j["field"] = field.name();
  j["scan_bound"] = t.scan_bound;
  j["certified"] = t.certified;
  j["certification"] = t.certification;
  j["semigroup_elements_scanned"] = t.semigroup_elements;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    entries.push_back(Json{{"i", e.i}, {"degree", multidegree_object(g, e.s)}, {"total", e.s.total()}, {"value", e.value}});
  }
  j["entries"] = std::move(entries);
  j["standard"] = standard_betti_json(standard_graded_betti(t));
  return j;
}

Json invariants_json(const InvariantsReport& r) {
  Json j;
  j["reg"] = r.reg;
  j["pd"] = r.pd;
  j["depth"] = r.depth;
  j["dim"] = r.dim;
  j["cohen_macaulay"] = to_string(r.cohen_macaulay);
  j["certified"] = r.certified;
  j["scan_bound"] = r.scan_bound;
  j["caveats"] = r.caveats;
  return j;
}

Json odd_cycle_json(const Graph& g, const OddCycleVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["max_len"] = v.max_len;
  if (v.witness) j["witness"] = Json::array({labels_of(g, v.witness->first), labels_of(g, v.witness->second)});
  return j;
}

Json embedding_object(const Graph& g, const ForbiddenEmbedding& emb) {
  return Json{{"c1", labels_of(g, emb.c1)}, {"c2", labels_of(g, emb.c2)}, {"p1", labels_of(g, emb.p1)},
              {"p2", labels_of(g, emb.p2)}};
}

Json reg_bound_json(const ForbiddenRegBound& b) {
  Json j;
  j["t"] = b.t;
  j["p"] = b.p;
  j["q"] = b.q;
  j["corollary_value"] = b.corollary_value;
  j["s_star_total"] = b.s_star_total;
  j["standard_reading"] = b.standard_reading;
  j["convention_note"] = b.note;
  return j;
}

Json certificate_json(const Graph& g, const NonCMCertificate& c) {
  Json j;
  j["embedding"] = embedding_object(g, c.embedding);
  j["s_star"] = multidegree_object(g, c.s_star);
  j["s_star_total"] = c.s_star.total();
  j["union_vertices"] = c.h.vertex_count();
  j["union_edges"] = c.h.edge_count();
  j["facets"] = faces_json(c.h, c.facets);
  j["facet_count"] = c.facet_count;
  j["h2_dim"] = c.h2_dim;
  j["beta_3"] = c.beta_3;
  j["applicable"] = c.applicable;
  j["verdict"] = to_string(c.verdict);
  j["reg_bound"] = reg_bound_json(forbidden_reg_bound(c.embedding));
  if (!c.applicable) {
    j["note"] = "|E| > |V| + 2: a nonzero beta_3 of the forbidden structure does not decide Cohen-Macaulayness";
  }
  return j;
}

Json lower_bounds_json(const Graph& g, const LowerBounds& lb) {
  Json j;
  j["reg_lb"] = lb.reg_lb;
  j["pd_lb"] = lb.pd_lb;
  Json parts = Json::array();
  for (const auto& p : lb.parts) {
    Json pj;
    pj["vertices"] = labels_of(g, p.vertices);
    if (p.complete_bipartite) {
      pj["complete_bipartite"] = Json::array({p.complete_bipartite->first, p.complete_bipartite->second});
    }
    pj["reg"] = p.reg;
    pj["pd"] = p.pd;
    pj["exact"] = p.exact;
    pj["method"] = p.method;
    parts.push_back(std::move(pj));
  }
  j["parts"] = std::move(parts);
  return j;
}

Json analyze(const Graph& g, const AnalyzeOptions& opts, const std::string& hash) {
  std::vector<std::string> caveats;
  Json report;
  report["tool"] = Json{{"name", "toric"}, {"version", std::string(kToolVersion)}};
  report["input_hash"] = hash;

  const int max_degree = opts.max_degree.value_or(static_cast<int>(g.edge_count()));
  Json config;
  config["field"] = opts.betti.field.name();
  config["max_deg"] = max_degree;
  config["max_fiber"] = opts.betti.fiber.max_decompositions;
  config["max_scan"] = opts.betti.max_scan;
  config["assume_complete"] = opts.betti.assume_complete;
  config["max_cycle"] = opts.limits.max_cycle;
  config["max_path"] = opts.limits.max_path;
  report["config"] = std::move(config);
  report["graph"] = graph_summary_json(g);

  const auto table = betti_table(g, max_degree, opts.betti);
  const auto inv = invariants(g, table);
  Json inv_json = invariants_json(inv);
  inv_json["certification"] = table.certification;
  report["invariants"] = std::move(inv_json);
  report["betti"] = Json{{"scan_bound", table.scan_bound},
                         {"certified", table.certified},
                         {"multigraded_entries", table.entries.size()},
                         {"standard", standard_betti_json(standard_graded_betti(table))}};
  for (const auto& c : inv.caveats) caveats.push_back(c);

  // Odd cycle condition, per the whole graph and per component.
  std::optional<OddCycleVerdict> occ;
  const auto cap = opts.max_cycle.value_or(0);
  if (opts.max_cycle) {
    occ = odd_cycle_condition(g, cap);
  } else if (g.vertex_count() <= kOddCycleCompleteLimit) {
    occ = odd_cycle_condition(g);
  }
  if (occ) {
    report["odd_cycle_condition"] = odd_cycle_json(g, *occ);
    if (occ->status == OddCycleStatus::kBoundedInconclusive) {
      caveats.push_back("odd cycle search bounded at length " + std::to_string(occ->max_len));
    }
  } else {
    report["odd_cycle_condition"] = Json{{"status", "not-run"}};
    caveats.push_back("odd cycle condition not checked: more than " + std::to_string(kOddCycleCompleteLimit) +
                      " vertices and no --max-cycle given");
  }
  bool normal_by_components = g.vertex_count() <= kOddCycleCompleteLimit;
  for (const auto& comp : connected_components(g)) {
    if (!normal_by_components) break;
    const Graph part = induced_subgraph(g, comp);
    normal_by_components = odd_cycle_condition(part).status == OddCycleStatus::kSatisfied;
  }

  // Forbidden structure.
  Json forbidden;
  std::optional<NonCMCertificate> cert;
  if (auto emb = detect_forbidden(g, opts.limits)) {
    forbidden["found"] = true;
    cert = noncm_certificate(g, *emb, opts.betti.field, opts.betti.fiber);
    forbidden["certificate"] = certificate_json(g, *cert);
  } else {
    forbidden["found"] = false;
    forbidden["search"] = "none found (bounded by max_cycle " + std::to_string(opts.limits.max_cycle) +
                          ", max_path " + std::to_string(opts.limits.max_path) + ")";
  }
  report["forbidden_structure"] = std::move(forbidden);

  Json bounds = Json::object();
  if (cert) bounds["forbidden_reg_bound"] = reg_bound_json(forbidden_reg_bound(cert->embedding));
  report["bounds"] = std::move(bounds);

  // Combined verdict.
  std::string verdict = "unknown";
  Json basis = Json::array();
  if (table.certified) {
    verdict = to_string(inv.cohen_macaulay);
    basis.push_back("certified Betti table: depth " + std::to_string(inv.depth) + ", dim " + std::to_string(inv.dim));
  } else if (inv.cohen_macaulay == CmVerdict::kNo) {
    verdict = "no";
    basis.push_back("partial Betti table already gives depth " + std::to_string(inv.depth) + " < dim " +
                    std::to_string(inv.dim));
  }
  if (cert && cert->verdict == CertificateVerdict::kNotCohenMacaulay) {
    if (verdict == "yes") {
      verdict = "conflict";
    } else {
      verdict = "no";
    }
    basis.push_back("forbidden-structure certificate: beta_3 = " + std::to_string(cert->beta_3) +
                    " at s*, |E| <= |V| + 2");
  }
  if (normal_by_components) {
    if (verdict == "no") {
      verdict = "conflict";
    } else {
      verdict = "yes";
    }
    basis.push_back("odd cycle condition holds on every component: k[G] is normal, hence Cohen-Macaulay");
  }
  report["cohen_macaulay"] = Json{{"verdict", verdict}, {"basis", std::move(basis)}};
  report["caveats"] = caveats;
  return report;
}

}  // namespace toric
