#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "toric/betti.hpp"
#include "toric/error.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

BettiOptions complete() {
  BettiOptions o;
  o.assume_complete = true;
  return o;
}

}  // namespace

TEST_SUITE("betti") {
TEST_CASE("single Betti numbers") {
  CHECK(betti_number(triangle(), 0, {{0, 0, 0}}) == 1);
  CHECK(betti_number(complete_bipartite(2, 3), 0, {{0, 0, 0, 0, 0}}) == 1);
  CHECK(betti_number(cycle(4), 1, {{1, 1, 1, 1}}) == 1);
  CHECK(betti_number(cycle(4), 0, {{1, 1, 1, 1}}) == 0);
  const auto f = minimal_forbidden();
  CHECK(betti_number(f.graph, 3, {{3, 1, 1, 3, 1, 1, 2, 2}}) == 1);
}

TEST_CASE("small tables") {
  const auto t = betti_table(triangle(), 3);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].i == 0);
  CHECK(t.entries[0].s.is_zero());

  const auto c4 = betti_table(cycle(4), 2);
  REQUIRE(c4.entries.size() == 2);
  CHECK(c4.value(1, {{1, 1, 1, 1}}) == 1);

  const auto k23 = betti_table(complete_bipartite(2, 3), 4);
  int pd = 0;
  for (const auto& e : k23.entries) pd = std::max(pd, e.i);
  CHECK(pd == 2);
  CHECK(k23.certified);
}

TEST_CASE("invariants and standard grading") {
  const Graph t = triangle();
  const auto r = invariants(t, betti_table(t, 3));
  CHECK(r.reg == 0);
  CHECK(r.pd == 0);
  CHECK(r.depth == 3);
  CHECK(r.dim == 3);
  CHECK(r.cohen_macaulay == CmVerdict::kYes);

  const Graph k23 = complete_bipartite(2, 3);
  const auto r23 = invariants(k23, betti_table(k23, 6));
  CHECK(r23.reg == 1);
  CHECK(r23.pd == 2);
  CHECK(r23.depth == 4);
  CHECK(r23.dim == 4);
  CHECK(r23.cohen_macaulay == CmVerdict::kYes);

  const auto sc4 = standard_graded_betti(betti_table(cycle(4), 2));
  CHECK(sc4 == StandardBetti{{{0, 0}, 1}, {{1, 2}, 1}});
  CHECK(standard_graded_betti(betti_table(complete_bipartite(2, 2), 2)).at({1, 2}) == 1);
  CHECK(standard_graded_betti(betti_table(t, 3)) == StandardBetti{{{0, 0}, 1}});
}

TEST_CASE("the forbidden graph is not Cohen-Macaulay from a partial scan") {
  const auto f = minimal_forbidden();
  const auto table = betti_table(f.graph, 7);
  CHECK_FALSE(table.certified);
  const auto r = invariants(f.graph, table);
  CHECK(r.pd >= 3);
  CHECK(r.depth <= 7);
  CHECK(r.dim == 8);
  CHECK(r.cohen_macaulay == CmVerdict::kNo);
  CHECK_FALSE(r.caveats.empty());
}

TEST_CASE("table invariants and the alternating-sum oracle") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 2), 3 + static_cast<int>(rng() % 5));
    const int d = 4;
    const auto table = betti_table(g, d, complete());
    std::map<MultiDegree, long> alternating;
    for (const auto& e : table.entries) {
      CHECK(e.s.total() % 2 == 0);
      CHECK(in_semigroup(g, e.s));
      CHECK(2 * e.i <= e.s.total());
      if (e.i == 0) CHECK(e.s.is_zero());
      if (e.i >= 1) CHECK(e.i + 1 <= e.s.total() / 2);
      alternating[e.s] += (e.i % 2 == 0 ? 1L : -1L) * static_cast<long>(e.value);
    }
    CHECK(table.value(0, MultiDegree{std::vector<int>(g.vertex_count(), 0)}) == 1);
    // Every semigroup degree up to the bound: the K-polynomial coefficient
    // must equal the signed Betti sum (zero where the table stores nothing).
    for (const auto& level : semigroup_levels(g, d, 100000)) {
      for (const auto& s : level) {
        CHECK(alternating[s] == oracle_alternating_betti(g, s.values));
      }
    }
  }
}

TEST_CASE("scan cap and certification rules") {
  CHECK_THROWS_AS(semigroup_levels(complete_bipartite(3, 3), 6, 10), ScanOverflow);
  CHECK(known_complete_bound(complete_bipartite(2, 2))->first == 1 + 1);
  CHECK(known_complete_bound(complete_bipartite(2, 3))->first == 2 + 1);
  CHECK(known_complete_bound(complete_bipartite(3, 3))->first == 4 + 2);
  CHECK(known_complete_bound(triangle())->first == 2);
  CHECK(known_complete_bound(disjoint_union(complete_bipartite(2, 2), complete_bipartite(2, 3, "c", "d")))->first ==
        5);
  CHECK_FALSE(known_complete_bound(minimal_forbidden().graph).has_value());
  const auto uncertified = betti_table(cycle(4), 1);
  CHECK_FALSE(uncertified.certified);
  CHECK(invariants(cycle(4), uncertified).cohen_macaulay == CmVerdict::kUnknown);
}

TEST_CASE("field option and thread count do not change tables") {
  const Graph k33 = complete_bipartite(3, 3);
  BettiOptions one;
  one.threads = 1;
  BettiOptions four;
  four.threads = 4;
  four.field = FieldSpec::prime(2);
  const auto a = betti_table(k33, 6, one);
  const auto b = betti_table(k33, 6, four);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].s == b.entries[i].s);
    CHECK(a.entries[i].i == b.entries[i].i);
    CHECK(a.entries[i].value == b.entries[i].value);
  }
}
}
