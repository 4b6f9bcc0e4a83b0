#include "pebhub/tree_solver.h"

#include <stdexcept>
#include <vector>

namespace pebhub {
namespace {

struct TreeBalance {
  std::vector<int> parent;
  std::vector<int> preorder;
  // Per vertex: surplus deliverable to the parent (>= 0) or demand from it.
  std::vector<int64_t> summary;
  int64_t root_net = 0;
};

TreeBalance Propagate(const Graph& tree, const PebbleConfig& config,
                      VertexSet target) {
  if (!tree.IsTree()) throw std::invalid_argument("graph is not a tree");
  if (config.num_vertices() != tree.num_vertices()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  const int n = tree.num_vertices();
  TreeBalance b;
  b.parent.assign(n, -1);
  b.summary.assign(n, 0);

  std::vector<int> stack = {0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    b.preorder.push_back(v);
    for (int w : tree.neighbor_list(v)) {
      if (!seen[w]) {
        seen[w] = true;
        b.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  // Reverse preorder visits children before parents.
  std::vector<int64_t> available(n);
  std::vector<int64_t> required(n);
  for (int v = 0; v < n; ++v) {
    available[v] = config[v];
    required[v] = target.contains(v) ? 1 : 0;
  }
  for (auto it = b.preorder.rbegin(); it != b.preorder.rend(); ++it) {
    const int v = *it;
    const int64_t net = available[v] - required[v];
    if (b.parent[v] < 0) {
      b.root_net = net;
      continue;
    }
    const int64_t s = net >= 0 ? net / 2 : net;
    b.summary[v] = s;
    if (s > 0) {
      available[b.parent[v]] += s;
    } else if (s < 0) {
      required[b.parent[v]] += 2 * -s;
    }
  }
  return b;
}

}  // namespace

bool TreeCoverFeasible(const Graph& tree, const PebbleConfig& config,
                       VertexSet target) {
  return Propagate(tree, config, target).root_net >= 0;
}

std::optional<FlowCertificate> TreeCoverFlow(const Graph& tree,
                                             const PebbleConfig& config,
                                             VertexSet target) {
  const TreeBalance b = Propagate(tree, config, target);
  if (b.root_net < 0) return std::nullopt;
  FlowCertificate flow;
  flow.final_target = target;
  for (int v = 0; v < tree.num_vertices(); ++v) {
    const int64_t s = b.summary[v];
    if (s > 0) {
      flow.edges.push_back({v, b.parent[v], static_cast<uint32_t>(s)});
    } else if (s < 0) {
      flow.edges.push_back({b.parent[v], v, static_cast<uint32_t>(-s)});
    }
  }
  return flow;
}

}  // namespace pebhub
