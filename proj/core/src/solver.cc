#include "pebhub/solver.h"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "absl/container/flat_hash_set.h"
#include "pebhub/tree_solver.h"

namespace pebhub {
namespace {

__extension__ using Weight = unsigned __int128;

using Clock = std::chrono::steady_clock;

// A configuration packed into two words, `bits` bits per vertex.
struct PackedKey {
  uint64_t word[2] = {0, 0};

  friend bool operator==(const PackedKey& a, const PackedKey& b) {
    return a.word[0] == b.word[0] && a.word[1] == b.word[1];
  }
  template <typename H>
  friend H AbslHashValue(H h, const PackedKey& k) {
    return H::combine(std::move(h), k.word[0], k.word[1]);
  }
};

int BitsPerVertex(int n) {
  for (int bits : {8, 6, 5, 4, 3, 2}) {
    if (2 * (64 / bits) >= n) return bits;
  }
  return 1;
}

struct Candidate {
  int from;
  int to;
  int delta;      // change of distance to the uncovered targets
  int to_dist;
  uint32_t from_count;
};

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSolvable: return "solvable";
    case Verdict::kUnsolvable: return "unsolvable";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes_expanded += other.nodes_expanded;
  memo_hits += other.memo_hits;
  dominance_hits += other.dominance_hits;
  bound_prunes += other.bound_prunes;
  elapsed += other.elapsed;
  return *this;
}

struct CoverSearch::Impl {
  Impl(const Graph& g, VertexSet t) : graph(g), target(t), n(g.num_vertices()) {
    if (!target.IsSubsetOf(graph.all_vertices())) {
      throw std::invalid_argument("target " + target.DebugString() +
                                  " is not a vertex subset of " + graph.Describe());
    }
    bits = BitsPerVertex(n);
    per_word = 64 / bits;
    max_field = (uint32_t{1} << bits) - 1;
    for (int v = 0; v < n; ++v) {
      unit[v] = PackedKey{};
      unit[v].word[v / per_word] = uint64_t{1} << ((v % per_word) * bits);
    }
    // Weight 2^(D - d(v, target)) so the bound stays integral.
    int max_dist = 0;
    for (int v = 0; v < n; ++v) {
      int d = n;
      target.ForEach([&](int w) { d = std::min(d, graph.distance(v, w)); });
      dist_to_target[v] = target.empty() ? 0 : d;
      max_dist = std::max(max_dist, dist_to_target[v]);
    }
    for (int v = 0; v < n; ++v) {
      weight[v] = Weight{1} << (max_dist - dist_to_target[v]);
    }
    threshold = static_cast<Weight>(target.size()) << max_dist;
  }

  PackedKey Pack() const {
    PackedKey key;
    for (int v = 0; v < n; ++v) {
      key.word[v / per_word] |= static_cast<uint64_t>(counts[v])
                                << ((v % per_word) * bits);
    }
    return key;
  }

  void Remember(const PackedKey& key) {
    if (failures.size() >= options->max_memo_entries) failures.clear();
    failures.insert(key);
  }

  bool OverBudget() {
    if (stats.nodes_expanded > options->node_budget) return true;
    if (options->timeout.count() > 0 && (stats.nodes_expanded & 1023) == 0 &&
        Clock::now() > deadline) {
      return true;
    }
    return false;
  }

  bool Dfs(int depth) {
    if (target.IsSubsetOf(support)) return true;
    ++stats.nodes_expanded;
    if (OverBudget()) {
      aborted = true;
      return false;
    }
    if (potential < threshold) {
      ++stats.bound_prunes;
      return false;
    }
    const PackedKey key = Pack();
    if (failures.contains(key)) {
      ++stats.memo_hits;
      return false;
    }
    if (options->dominance_pruning) {
      for (int v = 0; v < n; ++v) {
        if (counts[v] >= max_field) continue;
        PackedKey up = key;
        up.word[0] += unit[v].word[0];
        up.word[1] += unit[v].word[1];
        if (failures.contains(up)) {
          ++stats.dominance_hits;
          return false;
        }
      }
    }

    // Distances to the still-uncovered target vertices.
    const VertexSet missing = target - support;
    std::array<int, kMaxVertices> to_missing;
    for (int v = 0; v < n; ++v) {
      int d = n;
      missing.ForEach([&](int w) { d = std::min(d, graph.distance(v, w)); });
      to_missing[v] = d;
    }
    if (static_cast<int>(move_buffers.size()) <= depth) move_buffers.emplace_back();
    std::vector<Candidate>& moves = move_buffers[depth];
    moves.clear();
    for (int u = 0; u < n; ++u) {
      if (counts[u] < 2) continue;
      for (int x : graph.neighbor_list(u)) {
        moves.push_back({u, x, to_missing[x] - to_missing[u], to_missing[x], counts[u]});
      }
    }
    std::sort(moves.begin(), moves.end(), [](const Candidate& a, const Candidate& b) {
      if (a.delta != b.delta) return a.delta < b.delta;
      if (a.to_dist != b.to_dist) return a.to_dist < b.to_dist;
      if (a.from_count != b.from_count) return a.from_count > b.from_count;
      if (a.from != b.from) return a.from < b.from;
      return a.to < b.to;
    });

    for (size_t i = 0; i < moves.size(); ++i) {
      const int u = moves[i].from;
      const int x = moves[i].to;
      const VertexSet saved_support = support;
      counts[u] -= 2;
      counts[x] += 1;
      potential = potential + weight[x] - 2 * weight[u];
      if (counts[u] == 0) support.erase(u);
      support.insert(x);

      const bool found = Dfs(depth + 1);

      counts[u] += 2;
      counts[x] -= 1;
      potential = potential + 2 * weight[u] - weight[x];
      support = saved_support;
      if (found) {
        path.push_back({u, x});
        return true;
      }
      if (aborted) return false;
    }
    Remember(key);
    return false;
  }

  SolveOutcome Run(const PebbleConfig& config, const SolveOptions& opts) {
    if (config.num_vertices() != n) {
      throw std::invalid_argument("configuration size does not match graph");
    }
    if (config.total() > max_field) {
      throw std::length_error("search keys hold at most " + std::to_string(max_field) +
                              " pebbles on " + std::to_string(n) + " vertices; got " +
                              std::to_string(config.total()));
    }
    const auto start = Clock::now();
    options = &opts;
    deadline = start + opts.timeout;
    stats = {};
    aborted = false;
    path.clear();
    potential = 0;
    for (int v = 0; v < n; ++v) {
      counts[v] = config[v];
      potential += weight[v] * config[v];
    }
    support = config.support();

    const bool found = Dfs(0);

    SolveOutcome outcome;
    stats.elapsed = Clock::now() - start;
    outcome.stats = stats;
    if (found) {
      outcome.verdict = Verdict::kSolvable;
      if (opts.want_certificate) {
        std::reverse(path.begin(), path.end());
        outcome.certificate = MoveCertificate{path, target};
      }
    } else {
      outcome.verdict = aborted ? Verdict::kUnknown : Verdict::kUnsolvable;
    }
    return outcome;
  }

  const Graph graph;
  const VertexSet target;
  const int n;
  int bits = 8;
  int per_word = 8;
  uint32_t max_field = 255;
  std::array<PackedKey, kMaxVertices> unit;
  std::array<int, kMaxVertices> dist_to_target{};
  std::array<Weight, kMaxVertices> weight{};
  Weight threshold = 0;
  absl::flat_hash_set<PackedKey> failures;

  // Per-run state.
  const SolveOptions* options = nullptr;
  Clock::time_point deadline;
  std::array<uint32_t, kMaxVertices> counts{};
  Weight potential = 0;
  VertexSet support;
  SearchStats stats;
  bool aborted = false;
  std::vector<Move> path;
  // One buffer per depth; a deque keeps references valid while deeper frames grow it.
  std::deque<std::vector<Candidate>> move_buffers;
};

CoverSearch::CoverSearch(const Graph& graph, VertexSet target)
    : impl_(std::make_unique<Impl>(graph, target)) {}
CoverSearch::~CoverSearch() = default;
CoverSearch::CoverSearch(CoverSearch&&) noexcept = default;
CoverSearch& CoverSearch::operator=(CoverSearch&&) noexcept = default;

SolveOutcome CoverSearch::Run(const PebbleConfig& config, const SolveOptions& options) {
  return impl_->Run(config, options);
}

VertexSet CoverSearch::target() const { return impl_->target; }
size_t CoverSearch::memo_size() const { return impl_->failures.size(); }
void CoverSearch::ClearMemo() { impl_->failures.clear(); }

Solver::Solver(const Graph& graph, TargetFamily family, SolveOptions options)
    : graph_(graph),
      family_(std::move(family)),
      options_(options),
      minimal_(family_.MinimalSets(graph_)),
      searches_(minimal_.size()),
      is_tree_(graph_.IsTree()) {
  for (VertexSet t : minimal_) {
    if (!t.IsSubsetOf(graph_.all_vertices())) {
      throw std::invalid_argument("family member " + t.DebugString() +
                                  " is not a vertex subset of " + graph_.Describe());
    }
  }
}

bool Solver::AdmitsEmptyTarget() const {
  return !minimal_.empty() && minimal_.front().empty();
}

SolveOutcome Solver::SolveTarget(size_t index, const PebbleConfig& config) {
  const VertexSet target = minimal_[index];
  if (config.Covers(target)) {
    SolveOutcome outcome{Verdict::kSolvable, std::nullopt, {}};
    if (options_.want_certificate) outcome.certificate = MoveCertificate{{}, target};
    return outcome;
  }
  if (is_tree_ && options_.use_tree_fast_path) {
    const auto start = Clock::now();
    SolveOutcome outcome;
    if (options_.want_certificate) {
      const auto flow = TreeCoverFlow(graph_, config, target);
      outcome.verdict = flow ? Verdict::kSolvable : Verdict::kUnsolvable;
      if (flow) outcome.certificate = MoveCertificate{ExecuteFlow(graph_, *flow), target};
    } else {
      outcome.verdict = TreeCoverFeasible(graph_, config, target) ? Verdict::kSolvable
                                                                  : Verdict::kUnsolvable;
    }
    outcome.stats.nodes_expanded = 1;
    outcome.stats.elapsed = Clock::now() - start;
    return outcome;
  }
  if (!searches_[index]) searches_[index].emplace(graph_, target);
  return searches_[index]->Run(config, options_);
}

SolveOutcome Solver::Solve(const PebbleConfig& config) {
  if (config.num_vertices() != graph_.num_vertices()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  const VertexSet support = config.support();
  std::vector<size_t> order(minimal_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return (minimal_[a] - support).size() < (minimal_[b] - support).size();
  });

  SearchStats total;
  bool unknown = false;
  for (size_t index : order) {
    SolveOutcome outcome = SolveTarget(index, config);
    total += outcome.stats;
    if (outcome.solvable()) {
      outcome.stats = total;
      return outcome;
    }
    if (outcome.verdict == Verdict::kUnknown) unknown = true;
  }
  return {unknown ? Verdict::kUnknown : Verdict::kUnsolvable, std::nullopt, total};
}

SolveOutcome CanCoverTarget(const Graph& graph, const PebbleConfig& config,
                            VertexSet target, const SolveOptions& options) {
  if (config.Covers(target)) {
    SolveOutcome outcome{Verdict::kSolvable, std::nullopt, {}};
    if (options.want_certificate) outcome.certificate = MoveCertificate{{}, target};
    return outcome;
  }
  CoverSearch search(graph, target);
  return search.Run(config, options);
}

SolveOutcome IsSolvable(const Graph& graph, const PebbleConfig& config,
                        const TargetFamily& family, const SolveOptions& options) {
  Solver solver(graph, family, options);
  return solver.Solve(config);
}

}  // namespace pebhub
