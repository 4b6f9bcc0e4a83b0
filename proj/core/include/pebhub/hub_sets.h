#ifndef PEBHUB_HUB_SETS_H_
#define PEBHUB_HUB_SETS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pebhub/graph.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

enum class SetKind { kHub, kStrongHub, kDominating };

std::string_view SetKindName(SetKind kind);
std::optional<SetKind> ParseSetKind(std::string_view name);

// Vertices y reachable from x by a path whose internal vertices all lie in
// `interior`. x itself is not included.
VertexSet ReachableThrough(const Graph& graph, int x, VertexSet interior);

// Every two distinct vertices are joined by a path with all internal vertices
// in `set`. The empty set qualifies exactly when the graph is complete.
bool IsStrongHubSet(const Graph& graph, VertexSet set);

// Every two distinct vertices outside `set` are joined by a path with all
// internal vertices in `set`. Same pairwise rule for the empty set.
bool IsHubSet(const Graph& graph, VertexSet set);

// Every vertex outside `set` has a neighbor in it. Never true for the empty
// set.
bool IsDominatingSet(const Graph& graph, VertexSet set);

bool IsSetOfKind(const Graph& graph, VertexSet set, SetKind kind);

inline constexpr int kDefaultEnumerationGuard = 20;

// Inclusion-minimal members of the (upward-closed) family of sets of `kind`,
// by subset enumeration in order of cardinality, skipping supersets of sets
// already found. Sorted by cardinality, then lexicographically. Throws
// std::length_error when the vertex count exceeds `guard`.
std::vector<VertexSet> MinimalSets(const Graph& graph, SetKind kind,
                                   int guard = kDefaultEnumerationGuard);

// Every member of the family, in the same order. Same guard.
std::vector<VertexSet> AllSets(const Graph& graph, SetKind kind,
                               int guard = kDefaultEnumerationGuard);

}  // namespace pebhub

#endif  // PEBHUB_HUB_SETS_H_
