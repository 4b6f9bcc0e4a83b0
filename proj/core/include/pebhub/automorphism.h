#ifndef PEBHUB_AUTOMORPHISM_H_
#define PEBHUB_AUTOMORPHISM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pebhub/graph.h"

namespace pebhub {

// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

// Default cap on the number of group elements materialized at once.
inline constexpr size_t kDefaultAutomorphismLimit = size_t{1} << 20;

// Full automorphism group by backtracking over degree- and color-compatible
// vertex images, in BFS order so every new vertex is constrained to the
// neighborhood of an already-mapped one. `colors` (optional, one entry per
// vertex) restricts the search to color-preserving maps. The identity is
// always first. Throws std::length_error once more than `limit` elements
// have been found.
std::vector<Permutation> Automorphisms(const Graph& graph,
                                       std::span<const int> colors = {},
                                       size_t limit = kDefaultAutomorphismLimit);

// The automorphism group factored as G = R * T, where T permutes twin
// classes (vertices u, v with N(u)\{v} == N(v)\{u}) and R holds the
// automorphisms that are increasing on every twin class, one per coset of
// the normal subgroup T. Stars collapse to |R| = 1 this way, so
// canonicalization of S_10 configurations is a sort instead of a scan over
// 10! permutations.
//
// Canonical form of a pebble vector = its lexicographically greatest image
// under the group.
class SymmetryGroup {
 public:
  static SymmetryGroup Of(const Graph& graph, std::span<const int> colors = {});
  // Identity-only group on n vertices; disables symmetry reduction.
  static SymmetryGroup Trivial(int num_vertices);

  int num_vertices() const { return n_; }
  // Classes of size >= 2, each sorted ascending.
  const std::vector<std::vector<int>>& twin_classes() const { return twin_classes_; }
  // Identity first.
  const std::vector<Permutation>& coset_representatives() const { return cosets_; }
  // Group order, saturating at UINT64_MAX.
  uint64_t order() const;
  bool IsTrivial() const { return cosets_.size() == 1 && twin_classes_.empty(); }

  // Replaces `counts` with its canonical representative.
  void Canonicalize(std::span<uint32_t> counts) const;
  bool IsCanonical(std::span<const uint32_t> counts) const;

  // Every group element; throws std::length_error beyond `limit`.
  std::vector<Permutation> Elements(size_t limit = kDefaultAutomorphismLimit) const;

  // Partition of the vertices into orbits, each sorted, ordered by first
  // element.
  std::vector<std::vector<int>> VertexOrbits() const;

 private:
  // Sorts each twin class descending in place.
  void SortTwinClasses(std::span<uint32_t> counts) const;

  int n_ = 0;
  std::vector<std::vector<int>> twin_classes_;
  std::vector<Permutation> cosets_;
};

// Applies `perm` to a vector indexed by vertex: out[perm[v]] = in[v].
std::vector<uint32_t> PermuteCounts(const Permutation& perm,
                                    std::span<const uint32_t> counts);

}  // namespace pebhub

#endif  // PEBHUB_AUTOMORPHISM_H_
