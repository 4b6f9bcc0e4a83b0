#include "pebhub/enumerate.h"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace pebhub {

uint64_t CountCompositions(int parts, uint64_t total) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1) by the multiplicative formula; each
  // partial product is itself a binomial coefficient, so division is exact.
  const uint64_t k = static_cast<uint64_t>(parts - 1);
  __extension__ unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (total + i) / i;
    if (result > UINT64_MAX) {
      throw EnumerationLimitError("composition count overflows 64 bits");
    }
  }
  return static_cast<uint64_t>(result);
}

CompositionIterator::CompositionIterator(int parts, uint32_t total)
    : current_(parts, 0) {
  if (parts <= 0) throw std::invalid_argument("compositions need at least one part");
  current_[0] = total;
}

bool CompositionIterator::Next() {
  const int n = static_cast<int>(current_.size());
  // Rightmost nonzero entry before the last position.
  int i = n - 2;
  while (i >= 0 && current_[i] == 0) --i;
  if (i < 0) return false;
  uint32_t tail = 0;
  for (int j = i + 1; j < n; ++j) {
    tail += current_[j];
    current_[j] = 0;
  }
  --current_[i];
  current_[i + 1] = tail + 1;
  return true;
}

void CheckEnumerationCeiling(int parts, uint64_t total, uint64_t ceiling) {
  const uint64_t count = CountCompositions(parts, total);
  if (count > ceiling) {
    throw EnumerationLimitError(std::to_string(count) + " configurations of " +
                                std::to_string(total) + " pebbles on " +
                                std::to_string(parts) + " vertices exceed ceiling " +
                                std::to_string(ceiling));
  }
}

std::vector<PebbleConfig> EnumerateConfigs(int num_vertices, uint32_t total,
                                           uint64_t ceiling) {
  CheckEnumerationCeiling(num_vertices, total, ceiling);
  std::vector<PebbleConfig> out;
  CompositionIterator it(num_vertices, total);
  do {
    out.emplace_back(it.current());
  } while (it.Next());
  return out;
}

std::vector<PebbleConfig> EnumerateConfigOrbits(const SymmetryGroup& group,
                                                uint32_t total, uint64_t ceiling) {
  CheckEnumerationCeiling(group.num_vertices(), total, ceiling);
  std::vector<PebbleConfig> out;
  CompositionIterator it(group.num_vertices(), total);
  do {
    if (group.IsCanonical(it.current())) out.emplace_back(it.current());
  } while (it.Next());
  return out;
}

std::vector<PebbleConfig> EnumerateConfigOrbits(const Graph& graph, uint32_t total,
                                                uint64_t ceiling) {
  return EnumerateConfigOrbits(SymmetryGroup::Of(graph), total, ceiling);
}

std::vector<uint32_t> RandomComposition(std::mt19937_64& rng, int parts, uint32_t total) {
  if (parts <= 0) throw std::invalid_argument("compositions need at least one part");
  std::vector<uint32_t> slots(total + static_cast<uint32_t>(parts) - 1);
  std::iota(slots.begin(), slots.end(), 0u);
  std::vector<uint32_t> bars;
  std::sample(slots.begin(), slots.end(), std::back_inserter(bars), parts - 1, rng);
  std::vector<uint32_t> out;
  out.reserve(parts);
  uint32_t previous = 0;
  for (uint32_t bar : bars) {
    out.push_back(bar - previous);
    previous = bar + 1;
  }
  out.push_back(static_cast<uint32_t>(slots.size()) - previous);
  return out;
}

std::vector<Shard> MakeShards(int parts, uint32_t total, int depth) {
  const int length = std::max(0, std::min(depth, parts - 1));
  std::vector<Shard> shards;
  std::vector<uint32_t> prefix;
  // Depth-first over prefixes, larger leading values first.
  auto recurse = [&](auto&& self, uint32_t remaining) -> void {
    if (static_cast<int>(prefix.size()) == length) {
      shards.push_back({prefix});
      return;
    }
    for (int64_t value = remaining; value >= 0; --value) {
      prefix.push_back(static_cast<uint32_t>(value));
      self(self, remaining - static_cast<uint32_t>(value));
      prefix.pop_back();
    }
  };
  recurse(recurse, total);
  return shards;
}

}  // namespace pebhub
