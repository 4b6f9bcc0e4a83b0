#include "pebhub/hub_sets.h"

#include <algorithm>
#include <stdexcept>

namespace pebhub {
namespace {

// Hard ceiling regardless of the caller's guard; 2^40 subsets is already
// far past desk scale.
constexpr int kMaxEnumerationVertices = 40;

void CheckGuard(const Graph& graph, int guard) {
  if (graph.num_vertices() > std::min(guard, kMaxEnumerationVertices)) {
    throw std::length_error("subset enumeration over " +
                            std::to_string(graph.num_vertices()) +
                            " vertices exceeds guard " + std::to_string(guard));
  }
}

// Calls f(mask) for every subset of {0..n-1}, by cardinality and then by
// increasing mask (Gosper's hack). Stops when f returns false.
template <typename F>
void ForEachSubsetByCardinality(int n, F&& f) {
  const uint64_t limit = uint64_t{1} << n;
  if (!f(uint64_t{0})) return;
  for (int k = 1; k <= n; ++k) {
    uint64_t mask = (uint64_t{1} << k) - 1;
    while (mask < limit) {
      if (!f(mask)) return;
      const uint64_t c = mask & -mask;
      const uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
}

}  // namespace

std::string_view SetKindName(SetKind kind) {
  switch (kind) {
    case SetKind::kHub: return "hub";
    case SetKind::kStrongHub: return "strong-hub";
    case SetKind::kDominating: return "dominating";
  }
  return "unknown";
}

std::optional<SetKind> ParseSetKind(std::string_view name) {
  if (name == "hub") return SetKind::kHub;
  if (name == "strong-hub" || name == "strong") return SetKind::kStrongHub;
  if (name == "dominating") return SetKind::kDominating;
  return std::nullopt;
}

VertexSet ReachableThrough(const Graph& graph, int x, VertexSet interior) {
  interior.erase(x);
  VertexSet inner = graph.neighbors(x) & interior;
  VertexSet frontier = inner;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.ForEach([&](int v) { next |= graph.neighbors(v); });
    frontier = (next & interior) - inner;
    inner |= frontier;
  }
  VertexSet reach = graph.neighbors(x) | inner;
  inner.ForEach([&](int v) { reach |= graph.neighbors(v); });
  reach.erase(x);
  return reach;
}

bool IsStrongHubSet(const Graph& graph, VertexSet set) {
  const VertexSet all = graph.all_vertices();
  for (int x = 0; x < graph.num_vertices(); ++x) {
    const VertexSet others = all - VertexSet::Singleton(x);
    if (!others.IsSubsetOf(ReachableThrough(graph, x, set))) return false;
  }
  return true;
}

bool IsHubSet(const Graph& graph, VertexSet set) {
  const VertexSet outside = graph.all_vertices() - set;
  bool ok = true;
  outside.ForEach([&](int x) {
    if (!ok) return;
    const VertexSet others = outside - VertexSet::Singleton(x);
    ok = others.IsSubsetOf(ReachableThrough(graph, x, set));
  });
  return ok;
}

bool IsDominatingSet(const Graph& graph, VertexSet set) {
  VertexSet covered = set;
  set.ForEach([&](int v) { covered |= graph.neighbors(v); });
  return set.size() > 0 && covered == graph.all_vertices();
}

bool IsSetOfKind(const Graph& graph, VertexSet set, SetKind kind) {
  switch (kind) {
    case SetKind::kHub: return IsHubSet(graph, set);
    case SetKind::kStrongHub: return IsStrongHubSet(graph, set);
    case SetKind::kDominating: return IsDominatingSet(graph, set);
  }
  return false;
}

std::vector<VertexSet> MinimalSets(const Graph& graph, SetKind kind, int guard) {
  CheckGuard(graph, guard);
  std::vector<VertexSet> minimal;
  ForEachSubsetByCardinality(graph.num_vertices(), [&](uint64_t mask) {
    const VertexSet candidate(mask);
    for (VertexSet m : minimal) {
      if (m.IsSubsetOf(candidate)) return true;
    }
    if (IsSetOfKind(graph, candidate, kind)) minimal.push_back(candidate);
    return true;
  });
  std::sort(minimal.begin(), minimal.end(), CardinalityThenLexLess);
  return minimal;
}

std::vector<VertexSet> AllSets(const Graph& graph, SetKind kind, int guard) {
  CheckGuard(graph, guard);
  std::vector<VertexSet> out;
  ForEachSubsetByCardinality(graph.num_vertices(), [&](uint64_t mask) {
    if (IsSetOfKind(graph, VertexSet(mask), kind)) out.push_back(VertexSet(mask));
    return true;
  });
  std::sort(out.begin(), out.end(), CardinalityThenLexLess);
  return out;
}

}  // namespace pebhub
