#ifndef PEBHUB_TREE_SOLVER_H_
#define PEBHUB_TREE_SOLVER_H_

#include <optional>

#include "pebhub/certificate.h"
#include "pebhub/graph.h"
#include "pebhub/pebble_config.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

// Exact cover feasibility on a tree in O(n). Rooted at vertex 0, every
// subtree is summarized by one signed number: the most pebbles it can hand
// to its parent after meeting its own target demands (>= 0), or minus the
// pebbles it must receive from the parent (< 0). Upward transfers halve,
// downward demands double. Throws std::invalid_argument on a non-tree.
bool TreeCoverFeasible(const Graph& tree, const PebbleConfig& config,
                       VertexSet target);

// Same decision, returning the flow that realizes it: each child with a
// surplus sends all of it up, each child with a demand receives exactly that.
// Tree flows use each edge in one direction only, so the support is acyclic.
std::optional<FlowCertificate> TreeCoverFlow(const Graph& tree,
                                             const PebbleConfig& config,
                                             VertexSet target);

}  // namespace pebhub

#endif  // PEBHUB_TREE_SOLVER_H_
