#include "toric/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/error.hpp"
#include "toric/report.hpp"

namespace toric {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// JSON arguments may be given inline ("{...}" / "[...]") or as a file path.
std::string json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

struct Common {
  std::string graph_path;
  std::string field = "q";
  std::size_t max_fiber = 1'000'000;
  std::size_t max_scan = 100'000;
  bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("graph", c.graph_path, "Graph file (JSON or edge list)")->required();
  cmd->add_option("--field", c.field, "Coefficient field: q or a prime")->capture_default_str();
  cmd->add_option("--max-fiber", c.max_fiber, "Abort when a fiber exceeds this many decompositions")
      ->capture_default_str();
  cmd->add_option("--max-scan", c.max_scan, "Abort when a scan visits more semigroup elements")
      ->capture_default_str();
  cmd->add_flag("--verbose,-v", c.verbose, "Human-readable summary on stderr");
}

BettiOptions betti_options(const Common& c) {
  BettiOptions o;
  o.field = FieldSpec::parse(c.field);
  o.fiber.max_decompositions = c.max_fiber;
  o.max_scan = c.max_scan;
  return o;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological invariants of toric rings of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common common;
  std::optional<int> max_deg;
  bool assume_complete = false;
  std::string degree_arg, embedding_arg, parts_arg;
  std::optional<int> max_cycle;
  int max_path = SearchLimits{}.max_path;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full invariants report");
  add_common(analyze_cmd, common);
  analyze_cmd->add_option("--max-deg", max_deg, "Betti scan bound D (default |E|)");
  analyze_cmd->add_flag("--assume-complete", assume_complete, "Treat the scan as complete");
  analyze_cmd->add_option("--max-cycle", max_cycle, "Longest odd cycle searched");
  analyze_cmd->add_option("--max-path", max_path, "Longest connecting path searched")->capture_default_str();

  auto* betti_cmd = app.add_subcommand("betti", "Multigraded Betti table up to degree D");
  add_common(betti_cmd, common);
  betti_cmd->add_option("--max-deg", max_deg, "Betti scan bound D")->required();
  betti_cmd->add_flag("--assume-complete", assume_complete, "Treat the scan as complete");

  auto* complex_cmd = app.add_subcommand("complex", "Facets of the degree complex");
  add_common(complex_cmd, common);
  complex_cmd->add_option("--degree", degree_arg, "Multidegree JSON file (or inline JSON)")->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "All decompositions of a multidegree");
  add_common(fiber_cmd, common);
  fiber_cmd->add_option("--degree", degree_arg, "Multidegree JSON file (or inline JSON)")->required();

  auto* certify_cmd = app.add_subcommand("certify-noncm", "Non-Cohen-Macaulay certificate");
  add_common(certify_cmd, common);
  certify_cmd->add_option("--embedding", embedding_arg, "Embedding JSON file (default: search)");
  certify_cmd->add_option("--max-cycle", max_cycle, "Longest odd cycle searched");
  certify_cmd->add_option("--max-path", max_path, "Longest connecting path searched")->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds from an induced disjoint union");
  add_common(bounds_cmd, common);
  bounds_cmd->add_option("--parts", parts_arg, "Parts JSON file (or inline JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const std::string source = read_file(common.graph_path);
    Graph g;
    try {
      g = load_graph(source);
    } catch (const InputError& e) {
      throw InputError(common.graph_path + ": " + e.what());
    }
    BettiOptions betti = betti_options(common);
    betti.assume_complete = assume_complete;
    SearchLimits limits;
    if (max_cycle) limits.max_cycle = *max_cycle;
    limits.max_path = max_path;

    if (analyze_cmd->parsed()) {
      AnalyzeOptions opts;
      opts.max_degree = max_deg;
      opts.betti = betti;
      opts.limits = limits;
      opts.max_cycle = max_cycle;
      const Json report = analyze(g, opts, input_hash(source));
      emit(out, report);
      if (common.verbose) {
        const auto& inv = report["invariants"];
        err << "n=" << g.vertex_count() << " m=" << g.edge_count() << " reg=" << inv["reg"].get<int>()
            << " pd=" << inv["pd"].get<int>() << " depth=" << inv["depth"].get<int>()
            << " dim=" << inv["dim"].get<int>() << " CM=" << report["cohen_macaulay"]["verdict"].get<std::string>()
            << (inv["certified"].get<bool>() ? " (certified)" : " (scan bound only)") << "\n";
      }
    } else if (betti_cmd->parsed()) {
      const auto table = betti_table(g, *max_deg, betti);
      Json j;
      j["input_hash"] = input_hash(source);
      j["graph"] = graph_summary_json(g);
      j["table"] = betti_table_json(g, table, betti.field);
      j["invariants"] = invariants_json(invariants(g, table));
      emit(out, j);
      if (common.verbose) {
        err << table.entries.size() << " nonzero multigraded Betti numbers up to degree " << *max_deg << "\n";
      }
    } else if (complex_cmd->parsed()) {
      const MultiDegree s = parse_multidegree(g, json_argument(degree_arg));
      const auto k = build_delta(g, s, betti.fiber);
      emit(out, complex_json(g, s, k, betti.field));
      if (common.verbose) err << k.facets().size() << " facets\n";
    } else if (fiber_cmd->parsed()) {
      const MultiDegree s = parse_multidegree(g, json_argument(degree_arg));
      const auto fiber = enumerate_fiber(g, s, betti.fiber);
      emit(out, fiber_json(g, s, fiber));
      if (common.verbose) err << fiber.size() << " decompositions\n";
    } else if (certify_cmd->parsed()) {
      std::optional<ForbiddenEmbedding> emb;
      if (!embedding_arg.empty()) {
        emb = parse_embedding(g, json_argument(embedding_arg));
      } else {
        emb = detect_forbidden(g, limits);
      }
      Json j;
      j["input_hash"] = input_hash(source);
      if (!emb) {
        j["found"] = false;
        j["search"] = "none found (bounded by max_cycle " + std::to_string(limits.max_cycle) + ", max_path " +
                      std::to_string(limits.max_path) + ")";
        j["verdict"] = "inconclusive";
      } else {
        j["found"] = true;
        const auto cert = noncm_certificate(g, *emb, betti.field, betti.fiber);
        const Json body = certificate_json(g, cert);
        for (const auto& [key, value] : body.items()) j[key] = value;
      }
      emit(out, j);
      if (common.verbose) err << "verdict: " << j["verdict"].get<std::string>() << "\n";
    } else if (bounds_cmd->parsed()) {
      const auto parts = parse_parts(json_argument(parts_arg));
      const auto lb = lower_bounds(g, parts, betti);
      Json j;
      j["input_hash"] = input_hash(source);
      const Json body = lower_bounds_json(g, lb);
      for (const auto& [key, value] : body.items()) j[key] = value;
      emit(out, j);
      if (common.verbose) err << "reg >= " << lb.reg_lb << ", pd >= " << lb.pd_lb << "\n";
    }
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace toric
