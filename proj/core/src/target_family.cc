#include "pebhub/target_family.h"

#include <algorithm>

namespace pebhub {

TargetFamily TargetFamily::SingleVertex(int root) {
  TargetFamily f(Kind::kSingleVertex);
  f.root_ = root;
  return f;
}

TargetFamily TargetFamily::ExplicitSets(std::vector<VertexSet> sets) {
  TargetFamily f(Kind::kExplicitSets);
  std::sort(sets.begin(), sets.end(), CardinalityThenLexLess);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Keep only inclusion-minimal sets; sorted by size so earlier sets can only
  // be subsets of later ones.
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(f.sets_.begin(), f.sets_.end(),
                                       [&](VertexSet m) { return m.IsSubsetOf(s); });
    if (!dominated) f.sets_.push_back(s);
  }
  return f;
}

bool TargetFamily::Contains(const Graph& graph, VertexSet set) const {
  switch (kind_) {
    case Kind::kFullCover: return set == graph.all_vertices();
    case Kind::kHubSets: return IsHubSet(graph, set);
    case Kind::kStrongHubSets: return IsStrongHubSet(graph, set);
    case Kind::kDominatingSets: return IsDominatingSet(graph, set);
    case Kind::kSingleVertex: return set.contains(root_);
    case Kind::kExplicitSets:
      return std::any_of(sets_.begin(), sets_.end(),
                         [&](VertexSet m) { return m.IsSubsetOf(set); });
  }
  return false;
}

std::vector<VertexSet> TargetFamily::MinimalSets(const Graph& graph, int guard) const {
  switch (kind_) {
    case Kind::kFullCover: return {graph.all_vertices()};
    case Kind::kHubSets: return pebhub::MinimalSets(graph, SetKind::kHub, guard);
    case Kind::kStrongHubSets:
      return pebhub::MinimalSets(graph, SetKind::kStrongHub, guard);
    case Kind::kDominatingSets:
      return pebhub::MinimalSets(graph, SetKind::kDominating, guard);
    case Kind::kSingleVertex: return {VertexSet::Singleton(root_)};
    case Kind::kExplicitSets: return sets_;
  }
  return {};
}

bool TargetFamily::IsAutomorphismInvariant() const {
  return kind_ != Kind::kSingleVertex && kind_ != Kind::kExplicitSets;
}

std::string TargetFamily::Name() const {
  switch (kind_) {
    case Kind::kFullCover: return "cover";
    case Kind::kHubSets: return "hub";
    case Kind::kStrongHubSets: return "strong-hub";
    case Kind::kDominatingSets: return "dominating";
    case Kind::kSingleVertex: return "root:" + std::to_string(root_);
    case Kind::kExplicitSets: return "explicit";
  }
  return "unknown";
}

std::optional<TargetFamily> ParseFamilyName(std::string_view name) {
  if (name == "strong-hub" || name == "strong") return TargetFamily::StrongHubSets();
  if (name == "hub") return TargetFamily::HubSets();
  if (name == "cover") return TargetFamily::FullCover();
  if (name == "dominating") return TargetFamily::DominatingSets();
  return std::nullopt;
}

}  // namespace pebhub
