#ifndef PEBHUB_PEBBLE_CONFIG_H_
#define PEBHUB_PEBBLE_CONFIG_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pebhub/graph.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

// Pebble counts per vertex with a cached total.
class PebbleConfig {
 public:
  PebbleConfig() = default;
  explicit PebbleConfig(int num_vertices) : counts_(num_vertices, 0) {}
  explicit PebbleConfig(std::vector<uint32_t> counts);

  // `count` pebbles on `vertex`, none elsewhere.
  static PebbleConfig Stacked(int num_vertices, int vertex, uint32_t count);

  int num_vertices() const { return static_cast<int>(counts_.size()); }
  uint32_t operator[](int v) const { return counts_[v]; }
  uint64_t total() const { return total_; }
  std::span<const uint32_t> counts() const { return counts_; }

  void Set(int v, uint32_t count);
  void Add(int v, uint32_t count) { Set(v, counts_[v] + count); }

  // Vertices holding at least one pebble.
  VertexSet support() const;
  bool Covers(VertexSet target) const { return target.IsSubsetOf(support()); }
  // Pointwise <=.
  bool IsDominatedBy(const PebbleConfig& other) const;

  friend bool operator==(const PebbleConfig&, const PebbleConfig&) = default;
  friend auto operator<=>(const PebbleConfig& a, const PebbleConfig& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<uint32_t> counts_;
  uint64_t total_ = 0;
};

class IllegalMoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Removes two pebbles from `from` and adds one to its neighbor `to`.
// Throws IllegalMoveError if `from` holds fewer than two pebbles or the
// vertices are not adjacent.
PebbleConfig ApplyMove(const Graph& graph, const PebbleConfig& config, int from,
                       int to);

// "v1:5,v4:1" (labels or indices; omitted vertices hold zero). Repeated
// vertices accumulate. Throws std::invalid_argument on malformed text and
// GraphError on unknown labels.
PebbleConfig ParseConfig(const Graph& graph, std::string_view text);
// Inverse of ParseConfig using family labels; empty string for no pebbles.
std::string FormatConfig(const Graph& graph, const PebbleConfig& config);

// "v2,v3" or "1,2".
VertexSet ParseVertexSet(const Graph& graph, std::string_view text);
std::string FormatVertexSet(const Graph& graph, VertexSet set);

}  // namespace pebhub

#endif  // PEBHUB_PEBBLE_CONFIG_H_
