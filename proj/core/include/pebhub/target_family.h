#ifndef PEBHUB_TARGET_FAMILY_H_
#define PEBHUB_TARGET_FAMILY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pebhub/graph.h"
#include "pebhub/hub_sets.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

// An upward-closed family of admissible target sets. A configuration is
// solvable for the family when moves can put a pebble on every vertex of
// some member.
class TargetFamily {
 public:
  enum class Kind {
    kFullCover,
    kHubSets,
    kStrongHubSets,
    kDominatingSets,
    kSingleVertex,
    kExplicitSets,
  };

  static TargetFamily FullCover() { return TargetFamily(Kind::kFullCover); }
  static TargetFamily HubSets() { return TargetFamily(Kind::kHubSets); }
  static TargetFamily StrongHubSets() { return TargetFamily(Kind::kStrongHubSets); }
  static TargetFamily DominatingSets() { return TargetFamily(Kind::kDominatingSets); }
  static TargetFamily SingleVertex(int root);
  // Upward closure of `sets`.
  static TargetFamily ExplicitSets(std::vector<VertexSet> sets);

  Kind kind() const { return kind_; }
  int root() const { return root_; }
  const std::vector<VertexSet>& explicit_sets() const { return sets_; }

  // Membership: contains a minimal member. For the intrinsic kinds this is
  // the definitional predicate itself.
  bool Contains(const Graph& graph, VertexSet set) const;

  // Inclusion-minimal members, sorted by cardinality then lexicographically.
  std::vector<VertexSet> MinimalSets(const Graph& graph,
                                     int guard = kDefaultEnumerationGuard) const;

  // True for families defined from the graph alone (every automorphism maps
  // the family onto itself).
  bool IsAutomorphismInvariant() const;

  // "strong-hub", "hub", "cover", "dominating", "root:<v>", "explicit".
  std::string Name() const;

  friend bool operator==(const TargetFamily&, const TargetFamily&) = default;

 private:
  explicit TargetFamily(Kind kind) : kind_(kind) {}

  Kind kind_;
  int root_ = -1;
  std::vector<VertexSet> sets_;
};

// Parses the CLI names "strong-hub", "hub", "cover", "dominating".
std::optional<TargetFamily> ParseFamilyName(std::string_view name);

}  // namespace pebhub

#endif  // PEBHUB_TARGET_FAMILY_H_
