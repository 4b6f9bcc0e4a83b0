#include "pebhub/certificate.h"

#include <map>

namespace pebhub {
namespace {

// Kahn's algorithm over the positive-multiplicity edges; empty result means
// the support has a directed cycle.
std::optional<std::vector<int>> TopologicalOrder(int n,
                                                 const std::vector<FlowEdge>& edges) {
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const FlowEdge& e : edges) {
    if (e.multiplicity == 0) continue;
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; --v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace

CheckResult CheckMoveCertificate(const Graph& graph, const PebbleConfig& config,
                                 const TargetFamily& family,
                                 const MoveCertificate& certificate) {
  if (config.num_vertices() != graph.num_vertices()) {
    return CheckResult::Fail("configuration size does not match graph");
  }
  PebbleConfig current = config;
  for (size_t i = 0; i < certificate.moves.size(); ++i) {
    const Move& m = certificate.moves[i];
    try {
      current = ApplyMove(graph, current, m.from, m.to);
    } catch (const IllegalMoveError& e) {
      return CheckResult::Fail("move " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (!current.Covers(certificate.final_target)) {
    return CheckResult::Fail("final configuration does not cover " +
                             certificate.final_target.DebugString());
  }
  if (!family.Contains(graph, certificate.final_target)) {
    return CheckResult::Fail(certificate.final_target.DebugString() +
                             " is not in family " + family.Name());
  }
  return CheckResult::Ok();
}

CheckResult CheckFlowCertificate(const Graph& graph, const PebbleConfig& config,
                                 VertexSet target, const FlowCertificate& flow) {
  const int n = graph.num_vertices();
  if (config.num_vertices() != n) {
    return CheckResult::Fail("configuration size does not match graph");
  }
  if (!target.IsSubsetOf(flow.final_target)) {
    return CheckResult::Fail("flow final target does not contain the target");
  }
  std::vector<int64_t> balance(n);
  for (int v = 0; v < n; ++v) balance[v] = config[v];
  for (const FlowEdge& e : flow.edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n ||
        !graph.adjacent(e.from, e.to)) {
      return CheckResult::Fail("flow edge " + std::to_string(e.from) + "->" +
                               std::to_string(e.to) + " is not a graph edge");
    }
    balance[e.to] += e.multiplicity;
    balance[e.from] -= 2 * static_cast<int64_t>(e.multiplicity);
  }
  if (!TopologicalOrder(n, flow.edges)) {
    return CheckResult::Fail("flow support has a directed cycle");
  }
  for (int v = 0; v < n; ++v) {
    const int64_t need = flow.final_target.contains(v) ? 1 : 0;
    if (balance[v] < need) {
      return CheckResult::Fail("vertex " + std::to_string(v) + " ends with " +
                               std::to_string(balance[v]) + ", needs " +
                               std::to_string(need));
    }
  }
  return CheckResult::Ok();
}

std::optional<FlowCertificate> FlowFromMoves(const Graph& graph,
                                             const MoveCertificate& certificate) {
  std::map<std::pair<int, int>, int64_t> net;
  for (const Move& m : certificate.moves) {
    if (m.from < m.to) {
      net[{m.from, m.to}] += 1;
    } else {
      net[{m.to, m.from}] -= 1;
    }
  }
  FlowCertificate flow;
  flow.final_target = certificate.final_target;
  for (const auto& [edge, amount] : net) {
    if (amount > 0) {
      flow.edges.push_back({edge.first, edge.second, static_cast<uint32_t>(amount)});
    } else if (amount < 0) {
      flow.edges.push_back({edge.second, edge.first, static_cast<uint32_t>(-amount)});
    }
  }
  if (!TopologicalOrder(graph.num_vertices(), flow.edges)) return std::nullopt;
  return flow;
}

std::vector<Move> ExecuteFlow(const Graph& graph, const FlowCertificate& flow) {
  const auto order = TopologicalOrder(graph.num_vertices(), flow.edges);
  if (!order) return {};
  std::vector<std::vector<const FlowEdge*>> outgoing(graph.num_vertices());
  for (const FlowEdge& e : flow.edges) outgoing[e.from].push_back(&e);
  std::vector<Move> moves;
  for (int v : *order) {
    for (const FlowEdge* e : outgoing[v]) {
      for (uint32_t k = 0; k < e->multiplicity; ++k) moves.push_back({e->from, e->to});
    }
  }
  return moves;
}

}  // namespace pebhub
