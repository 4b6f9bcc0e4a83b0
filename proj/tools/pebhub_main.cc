// pebhub: exact cover pebbling numbers for hub-type target families.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pebhub/certificate.h"
#include "pebhub/graph_io.h"
#include "pebhub/hub_sets.h"
#include "pebhub/numbers.h"
#include "pebhub/report_io.h"
#include "pebhub/solver.h"
#include "pebhub/verify.h"

namespace {

using namespace pebhub;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkipped = 3;

struct Globals {
  std::string format = "text";
  uint64_t seed = 0x5eed;
  bool strict = false;
  int jobs = 1;
  bool no_symmetry = false;
  bool allow_large = false;
  bool no_timing = false;
  uint64_t node_budget = SolveOptions{}.node_budget;
  int64_t timeout_ms = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ReportFormat Format(const Globals& g) { return *ParseReportFormat(g.format); }

NumberOptions MakeNumberOptions(const Globals& g) {
  NumberOptions o;
  o.jobs = g.jobs;
  o.use_symmetry = !g.no_symmetry;
  o.solve.node_budget = g.node_budget;
  o.solve.timeout = std::chrono::milliseconds(g.timeout_ms);
  return o;
}

HarnessOptions MakeHarnessOptions(const Globals& g, int spot_checks) {
  HarnessOptions h;
  h.number = MakeNumberOptions(g);
  h.allow_large = g.allow_large;
  h.spot_checks = spot_checks;
  h.seed = g.seed;
  return h;
}

Graph LoadGraphArg(const std::string& spec) {
  try {
    return LoadGraph(spec);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
}

// "strong-hub", "hub", "cover", "dominating" or "root:<vertex>".
TargetFamily FamilyArg(const Graph& graph, const std::string& name) {
  if (name.rfind("root:", 0) == 0) {
    try {
      return TargetFamily::SingleVertex(graph.VertexIndex(name.substr(5)));
    } catch (const GraphError& e) {
      throw UsageError(e.what());
    }
  }
  if (auto f = ParseFamilyName(name)) return *f;
  throw UsageError("unknown family '" + name + "'");
}

int ExitCode(bool failed, bool skipped, const Globals& g) {
  if (failed) return kExitFail;
  if (skipped && g.strict) return kExitSkipped;
  return kExitPass;
}

int RunNumber(const Globals& g, const std::string& graph_spec, const std::string& family) {
  const Graph graph = LoadGraphArg(graph_spec);
  const NumberOptions options = MakeNumberOptions(g);
  NumberReport report;
  try {
    report = family == "pebbling"
                 ? PebblingNumber(graph, options)
                 : GeneralizedCoverPebblingNumber(graph, FamilyArg(graph, family), options);
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return g.strict ? kExitSkipped : kExitPass;
  }
  std::cout << FormatNumberReport(graph, report, Format(g), !g.no_timing);
  return ExitCode(false, !report.exact, g);
}

int RunSolve(const Globals& g, const std::string& graph_spec, const std::string& config_text,
             const std::string& family_name, bool certificate, bool flow) {
  const Graph graph = LoadGraphArg(graph_spec);
  const TargetFamily family = FamilyArg(graph, family_name);
  PebbleConfig config;
  try {
    config = ParseConfig(graph, config_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SolveOptions options = MakeNumberOptions(g).solve;
  options.want_certificate = certificate || flow;
  SolveOutcome outcome;
  try {
    outcome = IsSolvable(graph, config, family, options);
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return g.strict ? kExitSkipped : kExitPass;
  }
  if (outcome.certificate) {
    const CheckResult check = CheckMoveCertificate(graph, config, family, *outcome.certificate);
    if (!check) {
      std::cerr << "internal error: certificate rejected: " << check.reason << "\n";
      return kExitFail;
    }
  }
  std::optional<FlowCertificate> flow_cert;
  if (flow && outcome.certificate) flow_cert = FlowFromMoves(graph, *outcome.certificate);

  const std::string verdict(VerdictName(outcome.verdict));
  switch (Format(g)) {
    case ReportFormat::kJson: {
      ordered_json j;
      j["graph"] = graph.Describe();
      j["family"] = family.Name();
      j["config"] = FormatConfig(graph, config);
      j["total"] = config.total();
      j["verdict"] = verdict;
      if (certificate && outcome.certificate) {
        j["certificate"] = ordered_json::parse(MoveCertificateToJson(graph, *outcome.certificate));
      }
      if (flow_cert) j["flow"] = ordered_json::parse(FlowCertificateToJson(graph, *flow_cert));
      j["nodes_expanded"] = outcome.stats.nodes_expanded;
      if (!g.no_timing) {
        j["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(outcome.stats.elapsed).count();
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
    case ReportFormat::kCsv:
      std::cout << "graph,family,total,verdict,nodes_expanded\n"
                << graph.Describe() << "," << family.Name() << "," << config.total() << ","
                << verdict << "," << outcome.stats.nodes_expanded << "\n";
      break;
    case ReportFormat::kText:
      std::cout << verdict << "\n";
      if (certificate && outcome.certificate) {
        for (const Move& m : outcome.certificate->moves) {
          std::cout << "  " << graph.VertexLabel(m.from) << " -> " << graph.VertexLabel(m.to)
                    << "\n";
        }
        std::cout << "  covers " << FormatVertexSet(graph, outcome.certificate->final_target)
                  << "\n";
      }
      if (flow_cert) std::cout << FlowCertificateToJson(graph, *flow_cert) << "\n";
      break;
  }
  return ExitCode(false, outcome.verdict == Verdict::kUnknown, g);
}

int RunHubsets(const Globals& g, const std::string& graph_spec, const std::string& kind_name,
               bool minimal) {
  const Graph graph = LoadGraphArg(graph_spec);
  const auto kind = ParseSetKind(kind_name);
  if (!kind) throw UsageError("unknown set kind '" + kind_name + "'");
  std::vector<VertexSet> sets;
  try {
    sets = minimal ? MinimalSets(graph, *kind) : AllSets(graph, *kind);
  } catch (const std::length_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return g.strict ? kExitSkipped : kExitPass;
  }
  switch (Format(g)) {
    case ReportFormat::kJson: {
      ordered_json j;
      j["graph"] = graph.Describe();
      j["kind"] = SetKindName(*kind);
      j["minimal"] = minimal;
      ordered_json arr = ordered_json::array();
      for (VertexSet s : sets) arr.push_back(s.ToVector());
      j["sets"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
      break;
    }
    case ReportFormat::kCsv:
      std::cout << "size,indices,labels\n";
      for (VertexSet s : sets) {
        std::cout << s.size() << ",\"" << VertexSetToJson(s) << "\",\""
                  << FormatVertexSet(graph, s) << "\"\n";
      }
      break;
    case ReportFormat::kText:
      for (VertexSet s : sets) {
        std::cout << "{" << FormatVertexSet(graph, s) << "}  " << VertexSetToJson(s) << "\n";
      }
      std::cout << sets.size() << (minimal ? " minimal " : " ") << SetKindName(*kind)
                << " sets\n";
      break;
  }
  return kExitPass;
}

int RunVerify(const Globals& g, const std::string& what, std::optional<int> max_n,
              int spot_checks) {
  const HarnessOptions h = MakeHarnessOptions(g, spot_checks);
  auto limit = [&](int fallback) { return max_n.value_or(fallback); };
  std::vector<VerificationCase> cases;
  auto append = [&](std::vector<VerificationCase> more) {
    for (auto& c : more) cases.push_back(std::move(c));
  };
  try {
    if (what == "paths" || what == "all") append(VerifyPaths(limit(h.guards.paths), h));
    if (what == "prop2" || what == "all") {
      append(VerifyPathEndpointTargetsUpTo(limit(h.guards.prop2), h));
    }
    if (what == "stars" || what == "all") append(VerifyStars(limit(h.guards.stars), h));
    if (what == "books" || what == "all") append(VerifyBooks(limit(h.guards.books), h));
    if (what == "figures" || what == "all") append(VerifyHubExamples());
    if (what == "pi-paths" || what == "all") {
      append(VerifyPathPebblingNumbers(limit(h.guards.pi_paths), h));
    }
    if (what == "ordering" || what == "all") {
      const int trees = limit(5);
      append(VerifyOrdering(trees, trees + 1, h));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << FormatCases(cases, Format(g), !g.no_timing);
  return ExitCode(AnyFailed(cases), AnySkipped(cases), g);
}

int RunConjecture(const Globals& g, std::optional<int> max_n) {
  const HarnessOptions h = MakeHarnessOptions(g, 0);
  std::vector<ConjectureRow> rows;
  try {
    rows = ConjectureCycles(max_n.value_or(h.guards.cycles), h);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << FormatConjectureRows(rows, Format(g), !g.no_timing);
  return ExitCode(AnyFailed(rows), AnySkipped(rows), g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cover pebbling numbers for hub-type target families"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "Seed for random spot checks");
  app.add_flag("--strict", g.strict, "Exit 3 when a resource limit skipped a result");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-symmetry", g.no_symmetry, "Enumerate every configuration");
  app.add_flag("--allow-large", g.allow_large, "Raise the size guards one step");
  app.add_flag("--no-timing", g.no_timing, "Omit timing fields");
  app.add_option("--node-budget", g.node_budget, "Search nodes per query");
  app.add_option("--timeout-ms", g.timeout_ms, "Wall-clock limit per query")
      ->check(CLI::NonNegativeNumber);

  std::string graph_spec;
  std::string family;
  auto* number = app.add_subcommand("number", "Compute a pebbling number");
  number->add_option("graph", graph_spec, "path:N, star:N, book:N, cycle:N or edge-list file")
      ->required();
  number->add_option("--family", family, "strong-hub|hub|cover|dominating|pebbling|root:<v>")
      ->required();

  std::string config_text;
  bool certificate = false;
  bool flow = false;
  auto* solve = app.add_subcommand("solve", "Decide one configuration");
  solve->add_option("graph", graph_spec)->required();
  solve->add_option("--config", config_text, "e.g. v1:5,v4:1")->required();
  solve->add_option("--family", family, "strong-hub|hub|cover|dominating|root:<v>")
      ->required();
  solve->add_flag("--certificate", certificate, "Print the move sequence");
  solve->add_flag("--flow", flow, "Print the net flow certificate");

  std::string kind;
  bool minimal = false;
  auto* hubsets = app.add_subcommand("hubsets", "List hub, strong hub or dominating sets");
  hubsets->add_option("graph", graph_spec)->required();
  hubsets->add_option("--kind", kind, "hub|strong-hub|dominating")->required();
  hubsets->add_flag("--minimal", minimal, "Only inclusion-minimal sets");

  std::string what;
  std::optional<int> max_n;
  int spot_checks = 0;
  auto* verify = app.add_subcommand("verify", "Check closed forms against computed values");
  verify->add_option("what", what)
      ->required()
      ->check(CLI::IsMember(
          {"paths", "stars", "books", "figures", "prop2", "pi-paths", "ordering", "all"}));
  verify->add_option("--max-n", max_n, "Largest parameter to check");
  verify->add_option("--spot-checks", spot_checks, "Random re-checks per computed value")
      ->check(CLI::NonNegativeNumber);

  std::string conjecture_what;
  auto* conjecture = app.add_subcommand("conjecture", "Compare cycles with the closed form");
  conjecture->add_option("what", conjecture_what)->required()->check(CLI::IsMember({"cycles"}));
  conjecture->add_option("--max-n", max_n, "Largest cycle length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*number) return RunNumber(g, graph_spec, family);
    if (*solve) return RunSolve(g, graph_spec, config_text, family, certificate, flow);
    if (*hubsets) return RunHubsets(g, graph_spec, kind, minimal);
    if (*verify) return RunVerify(g, what, max_n, spot_checks);
    if (*conjecture) return RunConjecture(g, max_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
