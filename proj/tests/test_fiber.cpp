#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "toric/error.hpp"
#include "toric/fiber.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<std::vector<int>> coeffs(const std::vector<Decomposition>& f) {
  std::vector<std::vector<int>> out;
  for (const auto& d : f) out.push_back(d.coefficients());
  return out;
}

MultiDegree random_degree(std::mt19937& rng, const Graph& g, int max_edges) {
  // Sum of random edge columns, so most samples lie in the semigroup.
  MultiDegree s{std::vector<int>(g.vertex_count(), 0)};
  if (g.edge_count() == 0) return s;
  const int k = static_cast<int>(rng() % (max_edges + 1));
  for (int i = 0; i < k; ++i) {
    const Edge& e = g.edge(rng() % g.edge_count());
    ++s.values[e.u];
    ++s.values[e.v];
  }
  if (rng() % 4 == 0) ++s.values[rng() % g.vertex_count()];
  return s;
}

}  // namespace

TEST_SUITE("fiber") {
TEST_CASE("triangle fibers") {
  const Graph t = triangle();
  CHECK(coeffs(enumerate_fiber(t, {{1, 1, 0}})) == std::vector<std::vector<int>>{{1, 0, 0}});
  CHECK(coeffs(enumerate_fiber(t, {{2, 2, 2}})) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(enumerate_fiber(t, {{1, 0, 0}}).empty());
}

TEST_CASE("semigroup membership") {
  CHECK(in_semigroup(cycle(4), {{1, 1, 1, 1}}));
  CHECK(in_semigroup(triangle(), {{0, 0, 0}}));
  CHECK(in_semigroup(complete_bipartite(2, 3), {{0, 0, 0, 0, 0}}));
  CHECK_FALSE(in_semigroup(triangle(), {{3, 1, 0}}));
  CHECK_FALSE(in_semigroup(cycle(4), {{2, 0, 0, 0}}));
}

TEST_CASE("parsing degrees") {
  const Graph t = triangle();
  CHECK(parse_multidegree(t, R"({"x1": 2, "x3": 1})").values == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(parse_multidegree(t, R"({"q": 1})"), InputError);
  CHECK_THROWS_AS(parse_multidegree(t, R"({"x1": -1})"), InputError);
  CHECK_THROWS_AS(parse_multidegree(t, "[1,2]"), InputError);
  const MultiDegree s{{1, 2, 3}};
  CHECK(parse_multidegree(t, multidegree_json(t, s)) == s);
}

TEST_CASE("decompositions validate their degree") {
  const Graph t = triangle();
  CHECK_NOTHROW(Decomposition::make(t, {{1, 1, 0}}, {1, 0, 0}));
  CHECK_THROWS_AS(Decomposition::make(t, {{1, 1, 0}}, {0, 1, 0}), InputError);
  CHECK(Decomposition::make(t, {{2, 2, 2}}, {1, 1, 1}).support() == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("random fibers equal the brute-force box") {
  std::mt19937 rng(31);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng() % 7));
    const MultiDegree s = random_degree(rng, g, 4);
    if (oracle_box_size(g, s.values) > 2e5) continue;
    const auto expected = oracle_fiber(g, s.values);
    CHECK(coeffs(enumerate_fiber(g, s)) == expected);
    FiberOptions reorder;
    reorder.min_remaining_degree_first = true;
    CHECK(coeffs(enumerate_fiber(g, s, reorder)) == expected);
    CHECK(in_semigroup(g, s) == !expected.empty());
    nonempty += expected.empty() ? 0 : 1;
  }
  CHECK(nonempty > 30);
}

TEST_CASE("fiber invariants") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 6, 1 + static_cast<int>(rng() % 10));
    const MultiDegree s = random_degree(rng, g, 6);
    const auto fiber = enumerate_fiber(g, s);
    if (s.total() % 2 != 0) CHECK(fiber.empty());
    CHECK(std::is_sorted(fiber.begin(), fiber.end()));
    CHECK(std::adjacent_find(fiber.begin(), fiber.end()) == fiber.end());
    for (const auto& d : fiber) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(d.coefficients()[e] <= std::min(s.values[g.edge(e).u], s.values[g.edge(e).v]));
      }
    }
  }
}

TEST_CASE("streaming stops early and the cap throws") {
  const Graph k33 = complete_bipartite(3, 3);
  const MultiDegree s{{2, 2, 2, 2, 2, 2}};
  std::size_t seen = 0;
  for_each_decomposition(k33, s, {}, [&](const std::vector<int>&) { return ++seen < 3; });
  CHECK(seen == 3);
  FiberOptions tiny;
  tiny.max_decompositions = 2;
  CHECK_THROWS_AS(enumerate_fiber(k33, s, tiny), FiberOverflow);
  CHECK(enumerate_fiber(k33, s).size() == oracle_fiber(k33, s.values).size());
}

TEST_CASE("degree length must match the vertex count") {
  CHECK_THROWS_AS(enumerate_fiber(triangle(), {{1, 1}}), InputError);
}
}
