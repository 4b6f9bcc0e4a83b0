#include "pebhub/numbers.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace pebhub {
namespace {

using Clock = std::chrono::steady_clock;

constexpr size_t kNoShard = std::numeric_limits<size_t>::max();

struct ShardResult {
  uint64_t compositions = 0;
  uint64_t canonical = 0;
  bool unknown = false;
  std::optional<PebbleConfig> failing;
};

int ResolveJobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Solver> MakeSolvers(const Graph& graph, const TargetFamily& family,
                                const NumberOptions& options) {
  SolveOptions solve = options.solve;
  solve.want_certificate = false;
  const int jobs = ResolveJobs(options.jobs);
  std::vector<Solver> solvers;
  solvers.reserve(jobs);
  for (int i = 0; i < jobs; ++i) solvers.emplace_back(graph, family, solve);
  return solvers;
}

// Largest s such that s pebbles stacked on `vertex` are proven unsolvable.
// Requires zero pebbles to be unsolvable. Unknown verdicts count as
// solvable so the bound stays a proven one.
uint64_t LargestUnsolvableStack(Solver& solver, int vertex, bool& unknown) {
  const int n = solver.graph().num_vertices();
  auto solvable = [&](uint64_t s) {
    const SolveOutcome o = solver.Solve(PebbleConfig::Stacked(n, vertex, static_cast<uint32_t>(s)));
    if (o.verdict == Verdict::kUnknown) unknown = true;
    return o.verdict != Verdict::kUnsolvable;
  };
  uint64_t lo = 0;  // unsolvable
  uint64_t hi = 1;
  while (!solvable(hi)) {
    lo = hi;
    if (hi >= 128) {
      throw std::length_error("stack on vertex " + std::to_string(vertex) +
                              " still unsolvable at " + std::to_string(hi) + " pebbles");
    }
    hi *= 2;
  }
  while (hi - lo > 1) {
    const uint64_t mid = lo + (hi - lo) / 2;
    if (solvable(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

}  // namespace

LevelResult CheckLevel(const SymmetryGroup& group, uint32_t total,
                       std::span<Solver> solvers, uint64_t enumeration_ceiling) {
  const int n = group.num_vertices();
  CheckEnumerationCeiling(n, total, enumeration_ceiling);
  const std::vector<Shard> shards = MakeShards(n, total);
  std::vector<ShardResult> results(shards.size());
  std::atomic<size_t> next_shard{0};
  std::atomic<size_t> fail_shard{kNoShard};

  auto worker = [&](Solver& solver) {
    const size_t vertices = static_cast<size_t>(n);
    while (true) {
      const size_t s = next_shard.fetch_add(1);
      if (s >= shards.size() || s > fail_shard.load()) return;
      ShardResult& result = results[s];
      ForEachInShard(shards[s], n, total, [&](std::span<const uint32_t> counts) {
        ++result.compositions;
        if (!group.IsCanonical(counts)) return true;
        ++result.canonical;
        const PebbleConfig config(std::vector<uint32_t>(counts.begin(), counts.begin() + vertices));
        const SolveOutcome outcome = solver.Solve(config);
        if (outcome.verdict == Verdict::kUnsolvable) {
          result.failing = config;
          size_t current = fail_shard.load();
          while (s < current && !fail_shard.compare_exchange_weak(current, s)) {
          }
          return false;
        }
        if (outcome.verdict == Verdict::kUnknown) result.unknown = true;
        // A failure in an earlier shard makes the rest of this one moot.
        return fail_shard.load() > s;
      });
    }
  };

  if (solvers.size() == 1) {
    worker(solvers[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(solvers.size());
    for (Solver& solver : solvers) threads.emplace_back(worker, std::ref(solver));
    for (std::thread& t : threads) t.join();
  }

  LevelResult level;
  const size_t failed = fail_shard.load();
  const size_t counted = failed == kNoShard ? shards.size() : failed + 1;
  bool unknown = false;
  for (size_t s = 0; s < counted; ++s) {
    level.configs_examined += results[s].canonical;
    level.compositions_seen += results[s].compositions;
    unknown = unknown || results[s].unknown;
  }
  if (failed != kNoShard) {
    level.status = LevelStatus::kHasUnsolvable;
    level.first_unsolvable = results[failed].failing;
  } else {
    level.status = unknown ? LevelStatus::kIncomplete : LevelStatus::kAllSolvable;
  }
  return level;
}

LevelResult CheckLevel(const Graph& graph, const TargetFamily& family, uint32_t total,
                       const NumberOptions& options) {
  const SymmetryGroup group = options.use_symmetry && family.IsAutomorphismInvariant()
                                  ? SymmetryGroup::Of(graph)
                                  : SymmetryGroup::Trivial(graph.num_vertices());
  std::vector<Solver> solvers = MakeSolvers(graph, family, options);
  return CheckLevel(group, total, solvers, options.enumeration_ceiling);
}

NumberReport GeneralizedCoverPebblingNumber(const Graph& graph,
                                            const TargetFamily& family,
                                            const NumberOptions& options) {
  const SymmetryGroup group = options.use_symmetry && family.IsAutomorphismInvariant()
                                  ? SymmetryGroup::Of(graph)
                                  : SymmetryGroup::Trivial(graph.num_vertices());
  return GeneralizedCoverPebblingNumber(graph, family, group, options);
}

NumberReport GeneralizedCoverPebblingNumber(const Graph& graph,
                                            const TargetFamily& family,
                                            const SymmetryGroup& group,
                                            const NumberOptions& options) {
  const auto start = Clock::now();
  const int n = graph.num_vertices();
  NumberReport report;
  report.graph = graph.Describe();
  report.family = family.Name();
  report.group_order = group.order();
  auto finish = [&]() {
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
  };

  std::vector<Solver> solvers = MakeSolvers(graph, family, options);
  Solver& lead = solvers.front();
  if (lead.AdmitsEmptyTarget()) {
    report.value = 0;
    return finish();
  }

  // Lower bound from single stacks, one vertex per orbit.
  bool unknown = false;
  uint64_t best_stack = 0;
  int best_vertex = 0;
  for (const auto& orbit : group.VertexOrbits()) {
    const uint64_t s = LargestUnsolvableStack(lead, orbit.front(), unknown);
    if (s > best_stack) {
      best_stack = s;
      best_vertex = orbit.front();
    }
  }
  PebbleConfig witness = PebbleConfig::Stacked(n, best_vertex, static_cast<uint32_t>(best_stack));
  uint64_t t = best_stack + 1;
  report.lower_bound = t;
  if (unknown) {
    report.exact = false;
    report.note = "resource limit while bounding single stacks";
  }

  while (true) {
    if (options.witness_climbing && witness.total() + 1 == t) {
      bool climbed = false;
      for (int v = 0; v < n && !climbed; ++v) {
        PebbleConfig next = witness;
        next.Add(v, 1);
        ++report.climb_checks;
        if (lead.Solve(next).verdict == Verdict::kUnsolvable) {
          witness = next;
          climbed = true;
        }
      }
      if (climbed) {
        ++t;
        continue;
      }
    }

    const LevelResult level =
        CheckLevel(group, static_cast<uint32_t>(t), solvers, options.enumeration_ceiling);
    ++report.levels_scanned;
    report.configs_examined += level.configs_examined;
    report.configs_skipped_by_symmetry += level.compositions_seen - level.configs_examined;
    if (level.status == LevelStatus::kHasUnsolvable) {
      witness = *level.first_unsolvable;
      ++t;
      continue;
    }
    report.value = t;
    if (level.status == LevelStatus::kIncomplete) {
      report.exact = false;
      report.note = "resource limit at total " + std::to_string(t) +
                    "; value is a lower bound";
    }
    break;
  }

  report.witness = witness;
  if (options.prefer_named_witness) {
    for (const PebbleConfig& named : NamedWitnesses(graph, family)) {
      if (named.total() + 1 == report.value &&
          lead.Solve(named).verdict == Verdict::kUnsolvable) {
        report.witness = named;
        break;
      }
    }
  }
  return finish();
}

NumberReport PebblingNumber(const Graph& graph, const NumberOptions& options) {
  const auto start = Clock::now();
  const int n = graph.num_vertices();
  const SymmetryGroup whole = options.use_symmetry ? SymmetryGroup::Of(graph)
                                                   : SymmetryGroup::Trivial(n);
  NumberReport best;
  bool first = true;
  uint64_t examined = 0;
  uint64_t skipped = 0;
  uint64_t levels = 0;
  uint64_t climbs = 0;
  bool exact = true;
  for (const auto& orbit : whole.VertexOrbits()) {
    const int root = orbit.front();
    std::vector<int> colors(n, 0);
    colors[root] = 1;
    const SymmetryGroup stabilizer = options.use_symmetry
                                         ? SymmetryGroup::Of(graph, colors)
                                         : SymmetryGroup::Trivial(n);
    NumberReport r = GeneralizedCoverPebblingNumber(
        graph, TargetFamily::SingleVertex(root), stabilizer, options);
    examined += r.configs_examined;
    skipped += r.configs_skipped_by_symmetry;
    levels += r.levels_scanned;
    climbs += r.climb_checks;
    exact = exact && r.exact;
    if (first || r.value > best.value) {
      best = std::move(r);
      first = false;
    }
  }
  best.family = "pebbling";
  best.configs_examined = examined;
  best.configs_skipped_by_symmetry = skipped;
  best.levels_scanned = levels;
  best.climb_checks = climbs;
  best.group_order = whole.order();
  best.exact = exact;
  if (!exact && best.note.empty()) best.note = "resource limit on some root";
  best.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return best;
}

std::vector<PebbleConfig> NamedWitnesses(const Graph& graph, const TargetFamily& family) {
  if (family.kind() != TargetFamily::Kind::kStrongHubSets) return {};
  const int n = graph.num_vertices();
  const int k = graph.tag().parameter;
  PebbleConfig c(n);
  switch (graph.tag().family) {
    case GraphFamily::kPath:
      if (k < 3 || k > 33) return {};
      c.Set(0, (uint32_t{1} << (k - 1)) - 3);
      c.Set(k - 1, 1);
      return {c};
    case GraphFamily::kStar:
      for (int leaf = 1; leaf <= k; ++leaf) c.Set(leaf, 1);
      return {c};
    case GraphFamily::kBook:
      c.Set(graph.VertexIndex("u1"), 5);
      for (int i = 2; i <= k - 1; ++i) c.Set(graph.VertexIndex("u" + std::to_string(i)), 1);
      for (int i = 1; i <= k - 1; ++i) c.Set(graph.VertexIndex("v" + std::to_string(i)), 1);
      return {c};
    case GraphFamily::kCycle: {
      if (k < 4 || k > 60) return {};
      const int half = k / 2;
      const uint64_t stack = k % 2 == 0
                                 ? (uint64_t{1} << half) + (uint64_t{1} << (half - 1)) - 4
                                 : (uint64_t{1} << (half + 1)) - 4;
      c.Set(0, static_cast<uint32_t>(stack));
      return {c};
    }
    case GraphFamily::kCustom:
      break;
  }
  return {};
}

std::optional<PebbleConfig> MaxUnsolvableWitness(const Graph& graph,
                                                  const TargetFamily& family,
                                                  const NumberOptions& options,
                                                  std::span<const PebbleConfig> preferred) {
  NumberOptions plain = options;
  plain.prefer_named_witness = false;
  const NumberReport report = GeneralizedCoverPebblingNumber(graph, family, plain);
  if (report.value == 0) return std::nullopt;
  SolveOptions solve = options.solve;
  solve.want_certificate = false;
  Solver solver(graph, family, solve);
  for (const PebbleConfig& p : preferred) {
    if (p.total() + 1 == report.value && solver.Solve(p).verdict == Verdict::kUnsolvable) {
      return p;
    }
  }
  return report.witness;
}

}  // namespace pebhub
