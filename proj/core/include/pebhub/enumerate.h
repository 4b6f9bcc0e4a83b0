#ifndef PEBHUB_ENUMERATE_H_
#define PEBHUB_ENUMERATE_H_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "pebhub/automorphism.h"
#include "pebhub/graph.h"
#include "pebhub/pebble_config.h"

namespace pebhub {

inline constexpr uint64_t kDefaultEnumerationCeiling = 100'000'000;

class EnumerationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// C(n + k - 1, k - 1) for compositions of n into k nonnegative parts, with
// checked 64-bit arithmetic. Throws EnumerationLimitError on overflow.
uint64_t CountCompositions(int parts, uint64_t total);

// Walks every composition of `total` into `parts` nonnegative parts exactly
// once, in descending lexicographic order: (t,0,..,0) first, (0,..,0,t) last.
class CompositionIterator {
 public:
  CompositionIterator(int parts, uint32_t total);

  const std::vector<uint32_t>& current() const { return current_; }
  // False once the last composition has been passed.
  bool Next();

 private:
  std::vector<uint32_t> current_;
};

// Throws EnumerationLimitError when the composition count exceeds `ceiling`.
void CheckEnumerationCeiling(int parts, uint64_t total, uint64_t ceiling);

// All compositions, materialized. Subject to `ceiling`.
std::vector<PebbleConfig> EnumerateConfigs(int num_vertices, uint32_t total,
                                           uint64_t ceiling = kDefaultEnumerationCeiling);

// One canonical representative (lexicographically greatest image) per orbit
// of the symmetry group, in descending lexicographic order.
std::vector<PebbleConfig> EnumerateConfigOrbits(const SymmetryGroup& group,
                                                uint32_t total,
                                                uint64_t ceiling = kDefaultEnumerationCeiling);
std::vector<PebbleConfig> EnumerateConfigOrbits(const Graph& graph, uint32_t total,
                                                uint64_t ceiling = kDefaultEnumerationCeiling);

// A uniformly random composition of `total` into `parts` parts (stars and
// bars: choose parts - 1 bar positions among total + parts - 1 slots).
std::vector<uint32_t> RandomComposition(std::mt19937_64& rng, int parts, uint32_t total);

// A contiguous block of the descending-lex composition order: every
// composition starting with `prefix`. Shards of the same (parts, total) are
// ordered like the compositions they contain.
struct Shard {
  std::vector<uint32_t> prefix;
};

// Prefixes of length min(depth, parts - 1), in descending lexicographic
// order, covering every composition exactly once.
std::vector<Shard> MakeShards(int parts, uint32_t total, int depth = 2);

// Calls f(counts) for every composition in the shard, in order. f returns
// false to stop early.
template <typename F>
void ForEachInShard(const Shard& shard, int parts, uint32_t total, F&& f) {
  uint32_t used = 0;
  for (uint32_t p : shard.prefix) used += p;
  const int rest = parts - static_cast<int>(shard.prefix.size());
  std::vector<uint32_t> counts(shard.prefix.begin(), shard.prefix.end());
  counts.resize(parts, 0);
  if (rest == 0) {
    if (used == total) f(std::span<const uint32_t>(counts));
    return;
  }
  CompositionIterator it(rest, total - used);
  do {
    std::copy(it.current().begin(), it.current().end(),
              counts.begin() + shard.prefix.size());
    if (!f(std::span<const uint32_t>(counts))) return;
  } while (it.Next());
}

}  // namespace pebhub

#endif  // PEBHUB_ENUMERATE_H_
