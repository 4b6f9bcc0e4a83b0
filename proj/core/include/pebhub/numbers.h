#ifndef PEBHUB_NUMBERS_H_
#define PEBHUB_NUMBERS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pebhub/automorphism.h"
#include "pebhub/enumerate.h"
#include "pebhub/graph.h"
#include "pebhub/pebble_config.h"
#include "pebhub/solver.h"
#include "pebhub/target_family.h"

namespace pebhub {

struct NumberOptions {
  // Worker threads; 0 means std::thread::hardware_concurrency().
  int jobs = 1;
  bool use_symmetry = true;
  // Before scanning a level, try the previous witness plus one pebble.
  bool witness_climbing = true;
  // Report a named lower-bound construction as the witness when it is
  // unsolvable at total value - 1.
  bool prefer_named_witness = true;
  uint64_t enumeration_ceiling = kDefaultEnumerationCeiling;
  SolveOptions solve = {.want_certificate = false};
};

// Outcome of an exact pebbling-number computation.
//
// When `exact` is false a resource limit interrupted the scan and `value`
// is only a lower bound.
struct NumberReport {
  std::string graph;
  std::string family;
  uint64_t value = 0;
  bool exact = true;
  std::string note;
  // An unsolvable configuration of total value - 1; absent when value == 0.
  std::optional<PebbleConfig> witness;
  // Largest unsolvable single-vertex stack plus one.
  uint64_t lower_bound = 0;
  uint64_t configs_examined = 0;
  uint64_t configs_skipped_by_symmetry = 0;
  uint64_t levels_scanned = 0;
  uint64_t climb_checks = 0;
  uint64_t group_order = 1;
  std::chrono::milliseconds elapsed{0};
};

enum class LevelStatus { kAllSolvable, kHasUnsolvable, kIncomplete };

struct LevelResult {
  LevelStatus status = LevelStatus::kIncomplete;
  // First unsolvable orbit representative in descending-lex order.
  std::optional<PebbleConfig> first_unsolvable;
  // Counted up to and including the first unsolvable configuration, so they
  // do not depend on the number of workers.
  uint64_t configs_examined = 0;
  uint64_t compositions_seen = 0;
};

// Checks every configuration of `total` pebbles (one per orbit of `group`)
// for solvability, in parallel over shards of the descending-lex order.
// `solvers` holds one private Solver per worker; its size sets the worker
// count. Throws EnumerationLimitError when the level has more compositions
// than `enumeration_ceiling`; kIncomplete means a solver hit its budget.
LevelResult CheckLevel(const SymmetryGroup& group, uint32_t total,
                       std::span<Solver> solvers, uint64_t enumeration_ceiling);

// Convenience overload building its own solvers.
LevelResult CheckLevel(const Graph& graph, const TargetFamily& family,
                       uint32_t total, const NumberOptions& options = {});

// Smallest t such that every configuration of t pebbles is solvable for
// `family`. Scans t upward from the stacked lower bound; the first t whose
// level is entirely solvable is the answer, since adding pebbles never hurts.
NumberReport GeneralizedCoverPebblingNumber(const Graph& graph,
                                            const TargetFamily& family,
                                            const NumberOptions& options = {});

// Same computation under an explicit symmetry group. The group must map the
// family onto itself.
NumberReport GeneralizedCoverPebblingNumber(const Graph& graph,
                                            const TargetFamily& family,
                                            const SymmetryGroup& group,
                                            const NumberOptions& options);

// Classical pebbling number: maximum over root orbits of the single-root
// number, each computed under the root's stabilizer.
NumberReport PebblingNumber(const Graph& graph, const NumberOptions& options = {});

// Named lower-bound constructions for the built-in families (strong-hub
// targets only): {v1: 2^(n-1)-3, vn: 1} on paths, one pebble per leaf on
// stars, {u1: 5, u2..u(n-1): 1, v1..v(n-1): 1} on books, and a single stack
// on v1 of 2^k+2^(k-1)-4 (n = 2k) or 2^(k+1)-4 (n = 2k+1) on cycles.
std::vector<PebbleConfig> NamedWitnesses(const Graph& graph, const TargetFamily& family);

// A maximum-total unsolvable configuration. Returns the first entry of
// `preferred` with total value - 1 that is unsolvable; otherwise computes
// the number and returns its witness. Nullopt when the value is 0.
std::optional<PebbleConfig> MaxUnsolvableWitness(
    const Graph& graph, const TargetFamily& family, const NumberOptions& options = {},
    std::span<const PebbleConfig> preferred = {});

}  // namespace pebhub

#endif  // PEBHUB_NUMBERS_H_
