#pragma once

// Fixture builders and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the library's fiber, complex, homology or
// linear-algebra code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/graph.hpp"
#include "toric/structure.hpp"

namespace toric::testing {

inline Graph make_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                        std::vector<std::string> extra_vertices = {}) {
  std::vector<std::string> vs;
  for (const auto& [a, b] : edges) {
    for (const auto& l : {a, b}) {
      if (std::find(vs.begin(), vs.end(), l) == vs.end()) vs.push_back(l);
    }
  }
  for (auto& l : extra_vertices) vs.push_back(std::move(l));
  return Graph::from_labels(vs, edges);
}

inline Graph triangle() { return make_graph({{"x1", "x2"}, {"x2", "x3"}, {"x1", "x3"}}); }

inline Graph cycle(int n, const std::string& prefix = "x") {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(prefix + std::to_string(i), prefix + std::to_string(i % n + 1));
  return make_graph(edges);
}

inline Graph complete_bipartite(int u, int v, const std::string& a = "a", const std::string& b = "b") {
  std::vector<std::string> vs;
  for (int i = 1; i <= u; ++i) vs.push_back(a + std::to_string(i));
  for (int j = 1; j <= v; ++j) vs.push_back(b + std::to_string(j));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= u; ++i) {
    for (int j = 1; j <= v; ++j) edges.emplace_back(a + std::to_string(i), b + std::to_string(j));
  }
  return Graph::from_labels(vs, edges);
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::string> vs = g1.labels();
  vs.insert(vs.end(), g2.labels().begin(), g2.labels().end());
  std::vector<Edge> es = g1.edges();
  for (const Edge& e : g2.edges()) es.push_back({e.u + g1.vertex_count(), e.v + g1.vertex_count()});
  return Graph::from_indices(vs, es);
}

enum class Endpoints { kShareBoth, kShareOne, kShareNone };

/// Two odd cycles x1..x_a, y1..y_b joined by paths z (length p) and w (length q).
/// Edges are declared as e_1..e_a, e'_1..e'_b, f_1..f_p, f'_1..f'_q where
/// e_j = {x_j, x_{j+1}}, f_j = {z_{j-1}, z_j}, f'_j = {w_{j-1}, w_j}.
/// Paths start at x1 (w at x2 when no endpoint is shared) and end at y1 (w at
/// y2 unless both endpoints are shared).
struct ForbiddenFixture {
  Graph graph;
  ForbiddenEmbedding embedding;
  int p = 0;
  int q = 0;
  int c1 = 0;
  int c2 = 0;
};

inline ForbiddenFixture forbidden_structure(int c1, int c2, int p, int q, Endpoints share) {
  auto x = [](int i) { return "x" + std::to_string(i); };
  auto y = [](int i) { return "y" + std::to_string(i); };
  std::vector<std::string> zs{x(1)}, ws{share == Endpoints::kShareNone ? x(2) : x(1)};
  for (int j = 1; j < p; ++j) zs.push_back("z" + std::to_string(j));
  for (int j = 1; j < q; ++j) ws.push_back("w" + std::to_string(j));
  zs.push_back(y(1));
  ws.push_back(share == Endpoints::kShareBoth ? y(1) : y(2));

  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 1; j <= c1; ++j) edges.emplace_back(x(j), x(j % c1 + 1));
  for (int j = 1; j <= c2; ++j) edges.emplace_back(y(j), y(j % c2 + 1));
  for (int j = 1; j <= p; ++j) edges.emplace_back(zs[j - 1], zs[j]);
  for (int j = 1; j <= q; ++j) edges.emplace_back(ws[j - 1], ws[j]);

  std::vector<std::string> vs;
  for (int j = 1; j <= c1; ++j) vs.push_back(x(j));
  for (int j = 1; j <= c2; ++j) vs.push_back(y(j));
  for (int j = 1; j < p; ++j) vs.push_back(zs[j]);
  for (int j = 1; j < q; ++j) vs.push_back(ws[j]);

  ForbiddenFixture f;
  f.graph = Graph::from_labels(vs, edges);
  auto ids = [&](const std::vector<std::string>& ls) {
    std::vector<VertexId> out;
    for (const auto& l : ls) out.push_back(f.graph.vertex(l));
    return out;
  };
  std::vector<std::string> cyc1, cyc2;
  for (int j = 1; j <= c1; ++j) cyc1.push_back(x(j));
  for (int j = 1; j <= c2; ++j) cyc2.push_back(y(j));
  f.embedding = ForbiddenEmbedding{ids(cyc1), ids(cyc2), ids(zs), ids(ws)};
  f.p = p;
  f.q = q;
  f.c1 = c1;
  f.c2 = c2;
  return f;
}

/// The minimal forbidden graph: two triangles, two length-2 paths sharing both endpoints.
inline ForbiddenFixture minimal_forbidden() { return forbidden_structure(3, 3, 2, 2, Endpoints::kShareBoth); }

/// Closed-form facets for shared endpoints, as edge positions in forbidden_structure() order.
/// Each facet is selected by the parity classes it uses on C1, P1, P2 and C2.
inline std::vector<std::vector<std::uint32_t>> shared_endpoint_facets(const ForbiddenFixture& f) {
  enum Sel { kOdd, kEven, kAll };
  auto pick = [](int offset, int count, Sel sel) {
    std::vector<std::uint32_t> out;
    for (int j = 1; j <= count; ++j) {
      if (sel == kAll || (sel == kOdd) == (j % 2 == 1)) out.push_back(static_cast<std::uint32_t>(offset + j - 1));
    }
    return out;
  };
  const int off_c2 = f.c1, off_p1 = f.c1 + f.c2, off_p2 = off_p1 + f.p;
  auto facet = [&](Sel c1, Sel p1, Sel p2, Sel c2) {
    std::vector<std::uint32_t> out;
    for (auto part : {pick(0, f.c1, c1), pick(off_p1, f.p, p1), pick(off_p2, f.q, p2), pick(off_c2, f.c2, c2)}) {
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const bool p_odd = f.p % 2 == 1, q_odd = f.q % 2 == 1;
  std::vector<std::vector<std::uint32_t>> facets{
      facet(kEven, kOdd, kAll, p_odd ? kEven : kOdd),   // F11: G11 / G11'
      facet(kOdd, kEven, kAll, p_odd ? kOdd : kEven),   // F12: G12 / G12'
      facet(kOdd, kAll, kEven, q_odd ? kOdd : kEven),   // F21: G21 / G21'
      facet(kEven, kAll, kOdd, q_odd ? kEven : kOdd)};  // F22: G22 / G22'
  return facets;
}

inline Graph random_graph(std::mt19937& rng, int n, int m) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  for (auto [a, b] : all) es.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  return Graph::from_indices(vs, es);
}

/// Exact rank by fraction elimination on int64 numerators/denominators.
inline std::size_t oracle_rank(std::vector<std::vector<long long>> a) {
  struct Q {
    long long n = 0, d = 1;
  };
  auto norm = [](Q x) {
    if (x.d < 0) {
      x.n = -x.n;
      x.d = -x.d;
    }
    const long long g = std::gcd(x.n < 0 ? -x.n : x.n, x.d);
    if (g > 1) {
      x.n /= g;
      x.d /= g;
    }
    return x;
  };
  std::vector<std::vector<Q>> m;
  for (auto& row : a) {
    std::vector<Q> r;
    for (long long v : row) r.push_back({v, 1});
    m.push_back(r);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].n == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].n == 0) continue;
      const Q f = norm({m[r][c].n * m[rank][c].d, m[r][c].d * m[rank][c].n});
      for (std::size_t k = c; k < cols; ++k) {
        const Q t = norm({f.n * m[rank][k].n, f.d * m[rank][k].d});
        m[r][k] = norm({m[r][k].n * t.d - t.n * m[r][k].d, m[r][k].d * t.d});
      }
    }
    ++rank;
  }
  return rank;
}

/// Brute force over the box 0 <= c_e <= min(s_u, s_v).
inline std::vector<std::vector<int>> oracle_fiber(const Graph& g, const std::vector<int>& s) {
  const std::size_t m = g.edge_count();
  std::vector<int> top(m);
  for (std::size_t e = 0; e < m; ++e) top[e] = std::min(s[g.edge(e).u], s[g.edge(e).v]);
  std::vector<std::vector<int>> out;
  std::vector<int> c(m, 0);
  while (true) {
    std::vector<int> sum(g.vertex_count(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      sum[g.edge(e).u] += c[e];
      sum[g.edge(e).v] += c[e];
    }
    if (sum == s) out.push_back(c);
    std::size_t i = m;
    while (i > 0 && c[i - 1] == top[i - 1]) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of coefficient vectors the brute-force box visits.
inline double oracle_box_size(const Graph& g, const std::vector<int>& s) {
  double size = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) size *= std::min(s[g.edge(e).u], s[g.edge(e).v]) + 1;
  return size;
}

/// Semigroup membership by bounded search on the residual, independent of the library search.
inline bool oracle_member(const Graph& g, std::vector<int> s, std::size_t e = 0) {
  if (std::any_of(s.begin(), s.end(), [](int v) { return v < 0; })) return false;
  if (e == g.edge_count()) return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
  const auto [u, v] = g.edge(e);
  for (int c = 0; c <= std::min(s[u], s[v]); ++c) {
    auto t = s;
    t[u] -= c;
    t[v] -= c;
    if (oracle_member(g, t, e + 1)) return true;
  }
  return false;
}

/// Coefficient of t^s in H(t) * prod_e (1 - t^{a_e}): equals sum_i (-1)^i beta_{i,s}.
inline long oracle_alternating_betti(const Graph& g, const std::vector<int>& s) {
  const std::size_t m = g.edge_count();
  long total = 0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    auto t = s;
    int bits = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        --t[g.edge(e).u];
        --t[g.edge(e).v];
        ++bits;
      }
    }
    if (oracle_member(g, t)) total += (bits % 2 == 0) ? 1 : -1;
  }
  return total;
}

}  // namespace toric::testing
