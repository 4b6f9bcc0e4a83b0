#ifndef PEBHUB_SOLVER_H_
#define PEBHUB_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "pebhub/certificate.h"
#include "pebhub/graph.h"
#include "pebhub/pebble_config.h"
#include "pebhub/target_family.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

// kUnknown means a resource limit stopped the search; it is never folded
// into kUnsolvable.
enum class Verdict { kSolvable, kUnsolvable, kUnknown };

std::string_view VerdictName(Verdict verdict);

struct SolveOptions {
  // Search nodes per query before giving up with kUnknown.
  uint64_t node_budget = 200'000'000;
  // Wall-clock limit per query; zero disables it.
  std::chrono::milliseconds timeout{0};
  bool want_certificate = true;
  // Decide trees with TreeCoverFeasible instead of searching.
  bool use_tree_fast_path = true;
  // Reject c when c + one pebble somewhere is a recorded failure.
  bool dominance_pruning = true;
  // Failure stores are cleared when they grow past this many entries.
  size_t max_memo_entries = size_t{1} << 23;
};

struct SearchStats {
  uint64_t nodes_expanded = 0;
  uint64_t memo_hits = 0;
  uint64_t dominance_hits = 0;
  uint64_t bound_prunes = 0;
  std::chrono::nanoseconds elapsed{0};

  SearchStats& operator+=(const SearchStats& other);
};

struct SolveOutcome {
  Verdict verdict = Verdict::kUnknown;
  // Present on kSolvable when certificates were requested.
  std::optional<MoveCertificate> certificate;
  SearchStats stats;

  bool solvable() const { return verdict == Verdict::kSolvable; }
};

// Decides whether moves can cover one fixed target set.
//
// Depth-first search over configurations, with
//   - a failure store keyed by the full configuration; it persists across
//     Run() calls, since failure depends on the configuration alone,
//   - dominance pruning: failures are downward closed, so c fails when
//     c + e_v is a stored failure,
//   - an admissible bound: sum_v c(v) * 2^-d(v, target) never increases
//     under a move and is >= |target| once the target is covered,
//   - move ordering toward the nearest uncovered target vertex.
//
// Not thread-safe; give each worker its own instance.
class CoverSearch {
 public:
  CoverSearch(const Graph& graph, VertexSet target);
  ~CoverSearch();
  CoverSearch(CoverSearch&&) noexcept;
  CoverSearch& operator=(CoverSearch&&) noexcept;

  // Throws std::length_error when a configuration cannot be packed into a
  // search key (total above 255, or more than 16 vertices with large
  // per-vertex counts).
  SolveOutcome Run(const PebbleConfig& config, const SolveOptions& options);

  VertexSet target() const;
  size_t memo_size() const;
  void ClearMemo();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Solvability for a whole target family: tries each minimal member in
// ascending order of uncovered vertices (ties in minimal-set order) and
// stops at the first success. Keeps one CoverSearch per minimal member, so
// reusing a Solver across configurations reuses their failure stores.
class Solver {
 public:
  Solver(const Graph& graph, TargetFamily family, SolveOptions options = {});

  SolveOutcome Solve(const PebbleConfig& config);

  const Graph& graph() const { return graph_; }
  const TargetFamily& family() const { return family_; }
  const std::vector<VertexSet>& minimal_targets() const { return minimal_; }
  const SolveOptions& options() const { return options_; }
  void set_options(const SolveOptions& options) { options_ = options; }
  bool AdmitsEmptyTarget() const;

 private:
  SolveOutcome SolveTarget(size_t index, const PebbleConfig& config);

  Graph graph_;
  TargetFamily family_;
  SolveOptions options_;
  std::vector<VertexSet> minimal_;
  std::vector<std::optional<CoverSearch>> searches_;
  bool is_tree_;
};

// One-shot conveniences with fresh failure stores.
SolveOutcome CanCoverTarget(const Graph& graph, const PebbleConfig& config,
                            VertexSet target, const SolveOptions& options = {});
SolveOutcome IsSolvable(const Graph& graph, const PebbleConfig& config,
                        const TargetFamily& family, const SolveOptions& options = {});

}  // namespace pebhub

#endif  // PEBHUB_SOLVER_H_
