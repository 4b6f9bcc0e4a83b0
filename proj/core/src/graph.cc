#include "pebhub/graph.h"

#include <algorithm>
#include <charconv>
#include <deque>

namespace pebhub {
namespace {

std::string KindName(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::kBadVertexCount: return "bad vertex count";
    case GraphError::Kind::kMalformedLine: return "malformed line";
    case GraphError::Kind::kIndexOutOfRange: return "vertex index out of range";
    case GraphError::Kind::kSelfLoop: return "self-loop";
    case GraphError::Kind::kDuplicateEdge: return "duplicate edge";
    case GraphError::Kind::kDisconnected: return "disconnected graph";
    case GraphError::Kind::kBadParameter: return "bad family parameter";
    case GraphError::Kind::kUnknownLabel: return "unknown vertex label";
  }
  return "graph error";
}

std::string FormatError(GraphError::Kind kind, int line,
                        const std::string& message) {
  std::string out = KindName(kind);
  if (line > 0) out += " at line " + std::to_string(line);
  if (!message.empty()) out += ": " + message;
  return out;
}

std::optional<int> ParseIndex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// "v12" with prefix "v" -> 12.
std::optional<int> ParsePrefixed(std::string_view label, std::string_view prefix) {
  if (label.size() <= prefix.size() || label.substr(0, prefix.size()) != prefix) {
    return std::nullopt;
  }
  return ParseIndex(label.substr(prefix.size()));
}

}  // namespace

GraphError::GraphError(Kind kind, int line, const std::string& message)
    : std::invalid_argument(FormatError(kind, line, message)),
      kind_(kind),
      line_(line) {}

bool EdgesConnected(int num_vertices, const std::vector<Edge>& edges) {
  if (num_vertices <= 1) return true;
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(num_vertices, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == num_vertices;
}

Graph Graph::FromEdges(int num_vertices, const std::vector<Edge>& edges,
                       FamilyTag tag) {
  using Kind = GraphError::Kind;
  if (num_vertices < 1 || num_vertices > kMaxVertices) {
    throw GraphError(Kind::kBadVertexCount, 0,
                     "need 1.." + std::to_string(kMaxVertices) + " vertices, got " +
                         std::to_string(num_vertices));
  }
  Graph g;
  g.n_ = num_vertices;
  g.tag_ = tag;
  g.adjacency_.assign(num_vertices, VertexSet());
  g.neighbor_lists_.assign(num_vertices, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw GraphError(Kind::kIndexOutOfRange, 0,
                       std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw GraphError(Kind::kSelfLoop, 0, std::to_string(u));
    if (u > v) std::swap(u, v);
    if (g.adjacency_[u].contains(v)) {
      throw GraphError(Kind::kDuplicateEdge, 0,
                       std::to_string(u) + " " + std::to_string(v));
    }
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    g.neighbor_lists_[u].push_back(v);
    g.neighbor_lists_[v].push_back(u);
    g.edges_.emplace_back(u, v);
  }
  if (!EdgesConnected(num_vertices, g.edges_)) {
    throw GraphError(Kind::kDisconnected, 0, "");
  }
  for (auto& list : g.neighbor_lists_) std::sort(list.begin(), list.end());

  // All-pairs BFS.
  const int n = num_vertices;
  g.distances_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> dist(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbor_lists_[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int t = 0; t < n; ++t) g.distances_[s * n + t] = static_cast<uint8_t>(dist[t]);
  }
  return g;
}

int Graph::Diameter() const {
  return n_ == 0 ? 0 : *std::max_element(distances_.begin(), distances_.end());
}

std::string Graph::Describe() const {
  switch (tag_.family) {
    case GraphFamily::kPath: return "path:" + std::to_string(tag_.parameter);
    case GraphFamily::kStar: return "star:" + std::to_string(tag_.parameter);
    case GraphFamily::kBook: return "book:" + std::to_string(tag_.parameter);
    case GraphFamily::kCycle: return "cycle:" + std::to_string(tag_.parameter);
    case GraphFamily::kCustom: break;
  }
  return "custom:n=" + std::to_string(n_) + ",m=" + std::to_string(num_edges());
}

int Graph::VertexIndex(std::string_view label) const {
  auto in_range = [&](std::optional<int> v, int lo, int hi) -> std::optional<int> {
    if (v && *v >= lo && *v <= hi) return v;
    return std::nullopt;
  };
  if (auto index = ParseIndex(label); index && *index >= 0 && *index < n_) {
    return *index;
  }
  const int k = tag_.parameter;
  switch (tag_.family) {
    case GraphFamily::kPath:
    case GraphFamily::kCycle:
      if (auto i = in_range(ParsePrefixed(label, "v"), 1, k)) return *i - 1;
      break;
    case GraphFamily::kStar:
      if (label == "center" || label == "c") return 0;
      if (auto i = in_range(ParsePrefixed(label, "leaf"), 1, k)) return *i;
      if (auto i = in_range(ParsePrefixed(label, "l"), 1, k)) return *i;
      break;
    case GraphFamily::kBook:
      if (label == "a") return 0;
      if (label == "b") return 1;
      if (auto i = in_range(ParsePrefixed(label, "u"), 1, k)) return 1 + *i;
      if (auto i = in_range(ParsePrefixed(label, "v"), 1, k)) return k + 1 + *i;
      break;
    case GraphFamily::kCustom:
      break;
  }
  throw GraphError(GraphError::Kind::kUnknownLabel, 0,
                   std::string(label) + " in " + Describe());
}

std::string Graph::VertexLabel(int v) const {
  const int k = tag_.parameter;
  switch (tag_.family) {
    case GraphFamily::kPath:
    case GraphFamily::kCycle:
      return "v" + std::to_string(v + 1);
    case GraphFamily::kStar:
      return v == 0 ? "center" : "leaf" + std::to_string(v);
    case GraphFamily::kBook:
      if (v == 0) return "a";
      if (v == 1) return "b";
      if (v <= k + 1) return "u" + std::to_string(v - 1);
      return "v" + std::to_string(v - k - 1);
    case GraphFamily::kCustom:
      break;
  }
  return std::to_string(v);
}

Graph MakePath(int n) {
  if (n < 1) {
    throw GraphError(GraphError::Kind::kBadParameter, 0, "path needs n >= 1");
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::FromEdges(n, edges, {GraphFamily::kPath, n});
}

Graph MakeStar(int n) {
  if (n < 2) {
    throw GraphError(GraphError::Kind::kBadParameter, 0, "star needs n >= 2");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(n + 1, edges, {GraphFamily::kStar, n});
}

Graph MakeBook(int n) {
  if (n < 2) {
    throw GraphError(GraphError::Kind::kBadParameter, 0, "book needs n >= 2");
  }
  const int a = 0;
  const int b = 1;
  auto u = [](int i) { return 1 + i; };
  auto v = [n](int i) { return n + 1 + i; };
  std::vector<Edge> edges = {{a, b}};
  for (int i = 1; i <= n; ++i) edges.emplace_back(a, u(i));
  for (int i = 1; i <= n; ++i) edges.emplace_back(b, v(i));
  for (int i = 1; i <= n; ++i) edges.emplace_back(u(i), v(i));
  return Graph::FromEdges(2 * n + 2, edges, {GraphFamily::kBook, n});
}

Graph MakeCycle(int n) {
  if (n < 3) {
    throw GraphError(GraphError::Kind::kBadParameter, 0, "cycle needs n >= 3");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges, {GraphFamily::kCycle, n});
}

}  // namespace pebhub
