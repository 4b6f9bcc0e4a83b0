#include "pebhub/verify.h"

#include <random>
#include <stdexcept>

#include "pebhub/hub_sets.h"

namespace pebhub {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds Since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

int64_t Pow2(int e) { return int64_t{1} << e; }

int Guard(const HarnessOptions& options, int normal, int large) {
  return options.allow_large ? large : normal;
}

std::string GuardReason(int n, int guard, int large, bool allow_large) {
  if (!allow_large && n <= large) {
    return "n=" + std::to_string(n) + " exceeds default guard " + std::to_string(guard) +
           "; rerun with --allow-large";
  }
  return "n=" + std::to_string(n) + " exceeds guard " + std::to_string(guard);
}

// Runs a number computation and turns it into a case against `expected`.
// Resource limits become SKIPPED with the partial lower bound in the detail.
VerificationCase NumberCase(std::string name, const Graph& graph,
                            const TargetFamily& family, int64_t expected,
                            const HarnessOptions& options) {
  const auto start = Clock::now();
  VerificationCase c;
  try {
    const NumberReport report = family.kind() == TargetFamily::Kind::kSingleVertex
                                    ? PebblingNumber(graph, options.number)
                                    : GeneralizedCoverPebblingNumber(graph, family,
                                                                     options.number);
    if (!report.exact) {
      c = SkippedCase(std::move(name), graph.Describe(),
                      report.note + " (lower bound " + std::to_string(report.value) + ")");
    } else {
      std::string detail;
      if (report.witness) detail = "witness " + FormatConfig(graph, *report.witness);
      c = MakeCase(std::move(name), graph.Describe(), expected,
                   static_cast<int64_t>(report.value), std::move(detail));
    }
  } catch (const std::length_error& e) {
    c = SkippedCase(std::move(name), graph.Describe(), e.what());
  }
  c.elapsed = Since(start);
  return c;
}

// `expected_unsolvable` configurations: computed is true when the solver
// proves unsolvability, false when it finds a solution.
VerificationCase UnsolvableCase(std::string name, const Graph& graph,
                                const TargetFamily& family, const PebbleConfig& config,
                                const HarnessOptions& options) {
  const auto start = Clock::now();
  SolveOptions solve = options.number.solve;
  solve.want_certificate = true;
  Solver solver(graph, family, solve);
  const SolveOutcome outcome = solver.Solve(config);
  VerificationCase c;
  std::string text = FormatConfig(graph, config);
  if (outcome.verdict == Verdict::kUnknown) {
    c = SkippedCase(std::move(name), graph.Describe(), "search budget exhausted on " + text);
  } else {
    if (outcome.certificate) {
      text += "; solved by";
      for (const Move& m : outcome.certificate->moves) {
        text += " " + graph.VertexLabel(m.from) + "->" + graph.VertexLabel(m.to);
      }
      text += " covering {" + FormatVertexSet(graph, outcome.certificate->final_target) + "}";
    }
    c = MakeCase(std::move(name), graph.Describe(), true,
                 outcome.verdict == Verdict::kUnsolvable, std::move(text));
  }
  c.elapsed = Since(start);
  return c;
}

// Samples random configurations of `total` pebbles and checks each one is
// solvable. Used to re-verify computed numbers independently of the level
// scan's orbit pruning.
VerificationCase SpotCheck(std::string name, const Graph& graph, const TargetFamily& family,
                           uint64_t total, const HarnessOptions& options, uint64_t salt) {
  const auto start = Clock::now();
  std::mt19937_64 rng(options.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  SolveOptions solve = options.number.solve;
  solve.want_certificate = false;
  Solver solver(graph, family, solve);
  int unknown = 0;
  for (int i = 0; i < options.spot_checks; ++i) {
    PebbleConfig config(
        RandomComposition(rng, graph.num_vertices(), static_cast<uint32_t>(total)));
    const Verdict v = solver.Solve(config).verdict;
    if (v == Verdict::kUnsolvable) {
      VerificationCase c = MakeCase(std::move(name), graph.Describe(), true, false,
                                    "unsolvable sample " + FormatConfig(graph, config));
      c.elapsed = Since(start);
      return c;
    }
    if (v == Verdict::kUnknown) ++unknown;
  }
  VerificationCase c =
      MakeCase(std::move(name), graph.Describe(), true, true,
               std::to_string(options.spot_checks) + " samples at total " +
                   std::to_string(total) +
                   (unknown ? ", " + std::to_string(unknown) + " undecided" : ""));
  c.elapsed = Since(start);
  return c;
}

void MaybeSpotCheck(std::vector<VerificationCase>& out, const std::string& prefix,
                    const Graph& graph, const TargetFamily& family,
                    const HarnessOptions& options, uint64_t salt) {
  const VerificationCase& last = out.back();
  if (options.spot_checks <= 0 || last.status == CaseStatus::kSkipped) return;
  const int64_t value = std::get<int64_t>(*last.computed);
  out.push_back(SpotCheck(prefix + "/spot-check", graph, family,
                          static_cast<uint64_t>(value), options, salt));
}

std::string Label(std::string_view prefix, int n) {
  return std::string(prefix) + "/n=" + std::to_string(n);
}

}  // namespace

std::string_view CaseStatusName(CaseStatus status) {
  switch (status) {
    case CaseStatus::kPass:
      return "PASS";
    case CaseStatus::kFail:
      return "FAIL";
    case CaseStatus::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

VerificationCase MakeCase(std::string name, std::string graph,
                          std::optional<CaseValue> expected,
                          std::optional<CaseValue> computed, std::string detail) {
  VerificationCase c;
  c.name = std::move(name);
  c.graph = std::move(graph);
  c.expected = expected;
  c.computed = computed;
  c.detail = std::move(detail);
  if (expected && computed) {
    c.status = *expected == *computed ? CaseStatus::kPass : CaseStatus::kFail;
  } else {
    c.status = CaseStatus::kSkipped;
  }
  return c;
}

VerificationCase SkippedCase(std::string name, std::string graph, std::string reason) {
  VerificationCase c;
  c.name = std::move(name);
  c.graph = std::move(graph);
  c.status = CaseStatus::kSkipped;
  c.detail = std::move(reason);
  return c;
}

uint64_t ConjecturedCycleValue(int n) {
  if (n < 3 || n > 62) throw std::invalid_argument("cycle length out of range");
  const int k = n / 2;
  if (n % 2 == 0) return (uint64_t{1} << k) + (uint64_t{1} << (k - 1)) - 3;
  return (uint64_t{1} << (k + 1)) - 3;
}

std::vector<VerificationCase> VerifyPaths(int max_n, const HarnessOptions& options) {
  if (max_n < 3) throw std::invalid_argument("verify paths needs max_n >= 3");
  const TargetFamily strong = TargetFamily::StrongHubSets();
  std::vector<VerificationCase> out;
  for (int n = 1; n <= 2; ++n) {
    out.push_back(NumberCase(Label("paths/value", n), MakePath(n), strong, 0, options));
  }
  const int guard = Guard(options, options.guards.paths, options.guards.paths_large);
  for (int n = 3; n <= max_n; ++n) {
    const std::string graph = "path:" + std::to_string(n);
    if (n > guard) {
      const std::string why = GuardReason(n, guard, options.guards.paths_large,
                                          options.allow_large);
      out.push_back(SkippedCase(Label("paths/value", n), graph, why));
      out.push_back(SkippedCase(Label("paths/witness", n), graph, why));
      continue;
    }
    const Graph g = MakePath(n);
    out.push_back(NumberCase(Label("paths/value", n), g, strong, Pow2(n - 1) - 1, options));
    MaybeSpotCheck(out, Label("paths/value", n), g, strong, options, 100 + n);
    out.push_back(UnsolvableCase(Label("paths/witness", n), g, strong,
                                 NamedWitnesses(g, strong).front(), options));
  }
  return out;
}

VerificationCase VerifyPathEndpointTargets(int n, const HarnessOptions& options) {
  const std::string name = Label("prop2", n);
  const std::string graph = "path:" + std::to_string(n);
  if (n < 3) throw std::invalid_argument("the path proposition needs n >= 3");
  const int guard = Guard(options, options.guards.prop2, options.guards.prop2_large);
  if (n > guard) {
    return SkippedCase(name, graph,
                       GuardReason(n, guard, options.guards.prop2_large, options.allow_large));
  }
  const auto start = Clock::now();
  const Graph g = MakePath(n);
  VertexSet middle;
  for (int v = 1; v <= n - 2; ++v) middle.insert(v);
  const TargetFamily family = TargetFamily::ExplicitSets(
      {middle | VertexSet::Singleton(0), middle | VertexSet::Singleton(n - 1)});
  const uint32_t total = static_cast<uint32_t>(Pow2(n - 1) - 1);
  NumberOptions number = options.number;
  number.use_symmetry = false;
  VerificationCase c;
  try {
    const LevelResult level = CheckLevel(g, family, total, number);
    const std::string counted = std::to_string(level.configs_examined) +
                                " configurations of " + std::to_string(total) + " pebbles";
    switch (level.status) {
      case LevelStatus::kAllSolvable:
        c = MakeCase(name, graph, true, true, counted);
        break;
      case LevelStatus::kHasUnsolvable:
        c = MakeCase(name, graph, true, false,
                     "unsolvable " + FormatConfig(g, *level.first_unsolvable));
        break;
      case LevelStatus::kIncomplete:
        c = SkippedCase(name, graph, "search budget exhausted after " + counted);
        break;
    }
  } catch (const std::length_error& e) {
    c = SkippedCase(name, graph, e.what());
  }
  c.elapsed = Since(start);
  return c;
}

std::vector<VerificationCase> VerifyPathEndpointTargetsUpTo(int max_n,
                                                            const HarnessOptions& options) {
  if (max_n < 3) throw std::invalid_argument("verify prop2 needs max_n >= 3");
  std::vector<VerificationCase> out;
  for (int n = 3; n <= max_n; ++n) out.push_back(VerifyPathEndpointTargets(n, options));
  return out;
}

std::vector<VerificationCase> VerifyStars(int max_n, const HarnessOptions& options) {
  if (max_n < 2) throw std::invalid_argument("verify stars needs max_n >= 2");
  const TargetFamily strong = TargetFamily::StrongHubSets();
  const int guard = Guard(options, options.guards.stars, options.guards.stars_large);
  std::vector<VerificationCase> out;
  for (int n = 2; n <= max_n; ++n) {
    const std::string graph = "star:" + std::to_string(n);
    if (n > guard) {
      const std::string why = GuardReason(n, guard, options.guards.stars_large,
                                          options.allow_large);
      out.push_back(SkippedCase(Label("stars/value", n), graph, why));
      out.push_back(SkippedCase(Label("stars/witness", n), graph, why));
      continue;
    }
    const Graph g = MakeStar(n);
    out.push_back(NumberCase(Label("stars/value", n), g, strong, n + 1, options));
    MaybeSpotCheck(out, Label("stars/value", n), g, strong, options, 200 + n);
    out.push_back(UnsolvableCase(Label("stars/witness", n), g, strong,
                                 NamedWitnesses(g, strong).front(), options));
  }
  return out;
}

std::vector<VerificationCase> VerifyBooks(int max_n, const HarnessOptions& options) {
  if (max_n < 2) throw std::invalid_argument("verify books needs max_n >= 2");
  const TargetFamily strong = TargetFamily::StrongHubSets();
  const int guard = Guard(options, options.guards.books, options.guards.books_large);
  std::vector<VerificationCase> out;
  for (int n = 2; n <= max_n; ++n) {
    const std::string graph = "book:" + std::to_string(n);
    if (n > guard) {
      const std::string why = GuardReason(n, guard, options.guards.books_large,
                                          options.allow_large);
      out.push_back(SkippedCase(Label("books/value", n), graph, why));
      out.push_back(SkippedCase(Label("books/witness", n), graph, why));
      out.push_back(SkippedCase(Label("books/characterization", n), graph, why));
      continue;
    }
    const Graph g = MakeBook(n);
    out.push_back(NumberCase(Label("books/value", n), g, strong, 2 * n + 3, options));
    MaybeSpotCheck(out, Label("books/value", n), g, strong, options, 300 + n);
    out.push_back(UnsolvableCase(Label("books/witness", n), g, strong,
                                 NamedWitnesses(g, strong).front(), options));

    // Every subset: strong hub iff it contains {a,b}, {a,u1..un} or {b,v1..vn}.
    const auto start = Clock::now();
    VertexSet ab = VertexSet::Of({0, 1});
    VertexSet au = VertexSet::Singleton(0);
    VertexSet bv = VertexSet::Singleton(1);
    for (int i = 1; i <= n; ++i) {
      au.insert(1 + i);
      bv.insert(n + 1 + i);
    }
    const int size = g.num_vertices();
    uint64_t mismatches = 0;
    std::string first;
    for (uint64_t bits = 0; bits < (uint64_t{1} << size); ++bits) {
      VertexSet s;
      for (int v = 0; v < size; ++v) {
        if (bits >> v & 1) s.insert(v);
      }
      const bool predicted = ab.IsSubsetOf(s) || au.IsSubsetOf(s) || bv.IsSubsetOf(s);
      if (predicted != IsStrongHubSet(g, s)) {
        if (mismatches++ == 0) first = FormatVertexSet(g, s);
      }
    }
    VerificationCase c = MakeCase(
        Label("books/characterization", n), graph, int64_t{0},
        static_cast<int64_t>(mismatches),
        mismatches ? "first mismatch " + first
                   : std::to_string(uint64_t{1} << size) + " subsets agree");
    c.elapsed = Since(start);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConjectureRow> ConjectureCycles(int max_n, const HarnessOptions& options) {
  if (max_n < 4) throw std::invalid_argument("conjecture cycles needs max_n >= 4");
  const TargetFamily strong = TargetFamily::StrongHubSets();
  const int guard = Guard(options, options.guards.cycles, options.guards.cycles_large);
  std::vector<ConjectureRow> rows;
  for (int n = 4; n <= max_n; ++n) {
    ConjectureRow row;
    row.n = n;
    row.k = n / 2;
    row.conjectured = ConjecturedCycleValue(n);
    if (n > guard) {
      row.status = CaseStatus::kSkipped;
      row.exact = false;
      row.detail = GuardReason(n, guard, options.guards.cycles_large, options.allow_large);
      rows.push_back(std::move(row));
      continue;
    }
    const auto start = Clock::now();
    const Graph g = MakeCycle(n);
    SolveOptions solve = options.number.solve;
    solve.want_certificate = false;
    Solver solver(g, strong, solve);
    const Verdict witness = solver.Solve(NamedWitnesses(g, strong).front()).verdict;
    row.witness_unsolvable = witness == Verdict::kUnsolvable;
    try {
      const NumberReport report = GeneralizedCoverPebblingNumber(g, strong, options.number);
      row.computed = report.value;
      row.exact = report.exact;
      row.agreement = report.exact && report.value == row.conjectured;
      if (!report.exact) row.detail = report.note;
      else if (report.witness) row.detail = "witness " + FormatConfig(g, *report.witness);
    } catch (const std::length_error& e) {
      row.exact = false;
      row.detail = e.what();
    }
    if (witness == Verdict::kSolvable) {
      row.status = CaseStatus::kFail;
      row.detail = "stacked witness is solvable; " + row.detail;
    } else if (witness == Verdict::kUnknown || !row.exact) {
      row.status = CaseStatus::kSkipped;
    } else {
      row.status = CaseStatus::kPass;
    }
    row.elapsed = Since(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<VerificationCase> VerifyHubExamples() {
  struct Item {
    const char* name;
    Graph graph;
    const char* set;
    bool hub;
    bool strong;
  };
  const Item items[] = {
      {"figures/path-ends", MakePath(4), "v1,v4", true, false},
      {"figures/cycle-alternate", MakeCycle(6), "v2,v4,v6", true, false},
      {"figures/path-middle", MakePath(4), "v2,v3", true, true},
  };
  std::vector<VerificationCase> out;
  for (const Item& item : items) {
    const VertexSet s = ParseVertexSet(item.graph, item.set);
    const std::string detail = std::string("{") + item.set + "}";
    out.push_back(MakeCase(std::string(item.name) + "/hub", item.graph.Describe(), item.hub,
                           IsHubSet(item.graph, s), detail));
    out.push_back(MakeCase(std::string(item.name) + "/strong", item.graph.Describe(),
                           item.strong, IsStrongHubSet(item.graph, s), detail));
  }
  return out;
}

std::vector<VerificationCase> VerifyPathPebblingNumbers(int max_m,
                                                        const HarnessOptions& options) {
  if (max_m < 2) throw std::invalid_argument("verify pi-paths needs max_m >= 2");
  const int guard = Guard(options, options.guards.pi_paths, options.guards.pi_paths_large);
  std::vector<VerificationCase> out;
  for (int m = 2; m <= max_m; ++m) {
    const std::string name = "pi-paths/m=" + std::to_string(m);
    if (m > guard) {
      out.push_back(SkippedCase(name, "path:" + std::to_string(m),
                                GuardReason(m, guard, options.guards.pi_paths_large,
                                            options.allow_large)));
      continue;
    }
    out.push_back(NumberCase(name, MakePath(m), TargetFamily::SingleVertex(0),
                             Pow2(m - 1), options));
  }
  return out;
}

std::vector<VerificationCase> VerifyOrdering(int max_tree, int max_cycle,
                                             const HarnessOptions& options) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= max_tree; ++n) graphs.push_back(MakePath(n));
  for (int n = 2; n <= max_tree; ++n) graphs.push_back(MakeStar(n));
  for (int n = 3; n <= max_cycle; ++n) graphs.push_back(MakeCycle(n));
  std::vector<VerificationCase> out;
  for (const Graph& g : graphs) {
    const auto start = Clock::now();
    const std::string name = "ordering/" + g.Describe();
    try {
      const NumberReport hub =
          GeneralizedCoverPebblingNumber(g, TargetFamily::HubSets(), options.number);
      const NumberReport strong =
          GeneralizedCoverPebblingNumber(g, TargetFamily::StrongHubSets(), options.number);
      const NumberReport cover =
          GeneralizedCoverPebblingNumber(g, TargetFamily::FullCover(), options.number);
      VerificationCase c;
      if (!hub.exact || !strong.exact || !cover.exact) {
        c = SkippedCase(name, g.Describe(), "resource limit");
      } else {
        const bool ordered = hub.value <= strong.value && strong.value <= cover.value;
        c = MakeCase(name, g.Describe(), true, ordered,
                     "hub " + std::to_string(hub.value) + " <= strong " +
                         std::to_string(strong.value) + " <= cover " +
                         std::to_string(cover.value));
      }
      c.elapsed = Since(start);
      out.push_back(std::move(c));
    } catch (const std::length_error& e) {
      out.push_back(SkippedCase(name, g.Describe(), e.what()));
    }
  }
  return out;
}

bool AnyFailed(const std::vector<VerificationCase>& cases) {
  for (const auto& c : cases) {
    if (c.status == CaseStatus::kFail) return true;
  }
  return false;
}

bool AnyFailed(const std::vector<ConjectureRow>& rows) {
  for (const auto& r : rows) {
    if (r.status == CaseStatus::kFail) return true;
  }
  return false;
}

bool AnySkipped(const std::vector<VerificationCase>& cases) {
  for (const auto& c : cases) {
    if (c.status == CaseStatus::kSkipped) return true;
  }
  return false;
}

bool AnySkipped(const std::vector<ConjectureRow>& rows) {
  for (const auto& r : rows) {
    if (r.status == CaseStatus::kSkipped) return true;
  }
  return false;
}

}  // namespace pebhub
