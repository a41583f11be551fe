#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/betti.hpp"
#include "toric/complex.hpp"
#include "toric/fiber.hpp"
#include "toric/graph.hpp"

namespace toric {

/// Graphs up to this many vertices get a complete odd-cycle search by default.
inline constexpr std::size_t kOddCycleCompleteLimit = 16;

/// Cycle as its vertex sequence (closing edge implied); path as z_0, ..., z_p.
using Cycle = std::vector<VertexId>;
using Path = std::vector<VertexId>;

/// Induced odd cycles with at most `max_len` vertices. Each cycle appears once,
/// starting at its smallest vertex and oriented so the second vertex is smaller
/// than the last. Ordered by length, then lexicographically.
std::vector<Cycle> find_induced_odd_cycles(const Graph& g, int max_len);

enum class OddCycleStatus { kSatisfied, kViolated, kBoundedInconclusive };
const char* to_string(OddCycleStatus s);

struct OddCycleVerdict {
  OddCycleStatus status = OddCycleStatus::kSatisfied;
  /// First vertex-disjoint pair with no edge between them.
  std::optional<std::pair<Cycle, Cycle>> witness;
  int max_len = 0;
};

/// Every two induced odd cycles share a vertex or are joined by an edge.
/// Inconclusive when nothing is violated but cycles longer than `max_len` could exist.
OddCycleVerdict odd_cycle_condition(const Graph& g, int max_len);
/// Complete search; throws InputError above kOddCycleCompleteLimit vertices.
OddCycleVerdict odd_cycle_condition(const Graph& g);

/// Two vertex-disjoint odd cycles joined by two paths of length >= 2 that meet
/// only at their endpoints.
struct ForbiddenEmbedding {
  Cycle c1;
  Cycle c2;
  Path p1;
  Path p2;

  friend bool operator==(const ForbiddenEmbedding&, const ForbiddenEmbedding&) = default;
};

/// {"c1": [...], "c2": [...], "p1": [...], "p2": [...]} with vertex labels.
ForbiddenEmbedding parse_embedding(const Graph& g, const std::string& json_text);
std::string embedding_json(const Graph& g, const ForbiddenEmbedding& emb);

/// Sorted distinct vertices of the union subgraph H.
std::vector<VertexId> embedding_vertices(const ForbiddenEmbedding& emb);

/// First violated requirement, or nullopt when the embedding is valid and its
/// union is an induced subgraph of g.
std::optional<std::string> embedding_violation(const Graph& g, const ForbiddenEmbedding& emb);
bool verify_embedding(const Graph& g, const ForbiddenEmbedding& emb);

struct SearchLimits {
  int max_cycle = 9;
  int max_path = 6;
};

/// Lexicographically first valid embedding within the limits.
std::optional<ForbiddenEmbedding> detect_forbidden(const Graph& g, const SearchLimits& limits = {});

/// s_x = 1 + (number of the two paths through x) on H, 0 elsewhere in g.
MultiDegree certificate_degree(const Graph& g, const ForbiddenEmbedding& emb);

enum class CertificateVerdict { kNotCohenMacaulay, kInconclusive };
const char* to_string(CertificateVerdict v);

struct NonCMCertificate {
  ForbiddenEmbedding embedding;
  Graph h;                  // union subgraph, induced in g
  MultiDegree s_star;       // over g
  MultiDegree s_star_h;     // restricted to H
  std::vector<Face> facets; // facets of Delta_{s*} over the edges of H
  std::size_t facet_count = 0;
  std::uint64_t h2_dim = 0;
  std::uint64_t beta_3 = 0;
  bool applicable = false;  // |E_G| <= |V_G| + 2
  CertificateVerdict verdict = CertificateVerdict::kInconclusive;
};

/// Throws InputError when the embedding is not valid in g.
NonCMCertificate noncm_certificate(const Graph& g, const ForbiddenEmbedding& emb,
                                   const FieldSpec& field = FieldSpec::rationals(),
                                   const FiberOptions& fiber = {});

/// One part of an induced disjoint union; `edges`, when given, must be exactly
/// the edges g induces on `vertices`.
struct PartSpec {
  std::vector<std::string> vertices;
  std::optional<std::vector<std::pair<std::string, std::string>>> edges;
};

std::vector<PartSpec> parse_parts(const std::string& json_text);

struct PartBound {
  std::vector<VertexId> vertices;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
  int reg = 0;
  int pd = 0;
  /// False when the part's own Betti scan was not certified (values are then lower bounds).
  bool exact = true;
  std::string method;
};

struct LowerBounds {
  int reg_lb = 0;
  int pd_lb = 0;
  std::vector<PartBound> parts;
};

/// reg k[G] >= sum reg k[H_i] and pd k[G] >= sum pd k[H_i]; complete bipartite
/// parts use min{m,n} - 1 and (m-1)(n-1), other parts their own Betti scan.
LowerBounds lower_bounds(const Graph& g, const std::vector<PartSpec>& parts, const BettiOptions& opts = {});

struct ForbiddenRegBound {
  int t = 0;  // |V_H|
  int p = 0;
  int q = 0;
  /// t + p + q - 1, reading degrees as |s|.
  int corollary_value = 0;
  /// |s*| = t + p + q + 2.
  int s_star_total = 0;
  /// |s*| / 2 - 3, the same certificate with edge generators in degree 1.
  int standard_reading = 0;
  std::string note;
};

ForbiddenRegBound forbidden_reg_bound(const ForbiddenEmbedding& emb);

}  // namespace toric
