#ifndef PEBHUB_CERTIFICATE_H_
#define PEBHUB_CERTIFICATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pebhub/graph.h"
#include "pebhub/pebble_config.h"
#include "pebhub/target_family.h"
#include "pebhub/vertex_set.h"

namespace pebhub {

struct Move {
  int from = 0;
  int to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

// An explicit move sequence and the target set it ends up covering.
struct MoveCertificate {
  std::vector<Move> moves;
  VertexSet final_target;
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  uint32_t multiplicity = 0;
  friend bool operator==(const FlowEdge&, const FlowEdge&) = default;
};

// Net pebbling flow: how many moves cross each directed edge, without an
// order. Executable whenever its support is acyclic and every vertex keeps a
// nonnegative balance.
struct FlowCertificate {
  std::vector<FlowEdge> edges;
  VertexSet final_target;
};

// Verdict of a certificate check with a human-readable reason on failure.
struct CheckResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
  static CheckResult Ok() { return {true, {}}; }
  static CheckResult Fail(std::string why) { return {false, std::move(why)}; }
};

// Replays the moves from `config`, then requires the final configuration to
// cover final_target and final_target to belong to `family`.
CheckResult CheckMoveCertificate(const Graph& graph, const PebbleConfig& config,
                                 const TargetFamily& family,
                                 const MoveCertificate& certificate);

// Requires graph edges only, an acyclic support, target within
// flow.final_target, and for every vertex
//   config(v) + inflow(v) - 2 * outflow(v) >= [v in final_target], >= 0.
CheckResult CheckFlowCertificate(const Graph& graph, const PebbleConfig& config,
                                 VertexSet target, const FlowCertificate& flow);

// Sums moves per directed edge and cancels opposite directions on the same
// edge. Returns nullopt when the result still contains a directed cycle.
std::optional<FlowCertificate> FlowFromMoves(const Graph& graph,
                                             const MoveCertificate& certificate);

// A legal move order for a flow that passes CheckFlowCertificate: vertices
// in topological order of the support, each sending all its outflow.
std::vector<Move> ExecuteFlow(const Graph& graph, const FlowCertificate& flow);

}  // namespace pebhub

#endif  // PEBHUB_CERTIFICATE_H_
