#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "toric/betti.hpp"
#include "toric/complex.hpp"
#include "toric/fiber.hpp"
#include "toric/graph.hpp"
#include "toric/structure.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

/// 64-bit FNV-1a of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_hash(std::string_view bytes);

Json graph_summary_json(const Graph& g);
Json multidegree_object(const Graph& g, const MultiDegree& s);
Json fiber_json(const Graph& g, const MultiDegree& s, const std::vector<Decomposition>& fiber);
Json complex_json(const Graph& g, const MultiDegree& s, const SimplicialComplex& k, const FieldSpec& field);
Json betti_table_json(const Graph& g, const BettiTable& t, const FieldSpec& field);
Json standard_betti_json(const StandardBetti& b);
Json invariants_json(const InvariantsReport& r);
Json odd_cycle_json(const Graph& g, const OddCycleVerdict& v);
Json embedding_object(const Graph& g, const ForbiddenEmbedding& emb);
Json certificate_json(const Graph& g, const NonCMCertificate& c);
Json reg_bound_json(const ForbiddenRegBound& b);
Json lower_bounds_json(const Graph& g, const LowerBounds& lb);

struct AnalyzeOptions {
  /// Scan bound; defaults to |E|.
  std::optional<int> max_degree;
  BettiOptions betti;
  SearchLimits limits;
  /// Cap for the odd cycle check; required for complete answers above 16 vertices.
  std::optional<int> max_cycle;
};

/// Full analysis report: graph summary, Betti invariants with certification,
/// odd cycle condition, forbidden-structure search and certificate, bounds,
/// combined Cohen-Macaulay verdict and caveats.
Json analyze(const Graph& g, const AnalyzeOptions& opts, const std::string& hash);

}  // namespace toric
