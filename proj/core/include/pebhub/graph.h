#ifndef PEBHUB_GRAPH_H_
#define PEBHUB_GRAPH_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pebhub/vertex_set.h"

namespace pebhub {

enum class GraphFamily { kCustom, kPath, kStar, kBook, kCycle };

// Which built-in construction produced a graph, and its parameter (the N in
// path:N). Custom graphs carry parameter 0.
struct FamilyTag {
  GraphFamily family = GraphFamily::kCustom;
  int parameter = 0;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

using Edge = std::pair<int, int>;

// Raised for invalid graph construction or unparseable graph text. `line` is
// 1-based when the error came from ParseGraph and 0 otherwise.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    kBadVertexCount,
    kMalformedLine,
    kIndexOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kDisconnected,
    kBadParameter,
    kUnknownLabel,
  };

  GraphError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// A finite simple connected undirected graph with at most kMaxVertices
// vertices. Immutable after construction, so it can be shared freely across
// threads.
class Graph {
 public:
  // Validates simplicity and connectivity. Edges are normalized to (u, v)
  // with u < v and kept in insertion order.
  static Graph FromEdges(int num_vertices, const std::vector<Edge>& edges,
                         FamilyTag tag = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  const std::vector<int>& neighbor_list(int v) const { return neighbor_lists_[v]; }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  int degree(int v) const { return adjacency_[v].size(); }
  VertexSet all_vertices() const { return VertexSet::Full(n_); }
  const FamilyTag& tag() const { return tag_; }

  // Shortest-path distance; the graph is connected so it is always finite.
  int distance(int u, int v) const { return distances_[u * n_ + v]; }
  int Diameter() const;

  bool IsTree() const { return num_edges() == n_ - 1; }
  bool IsComplete() const { return num_edges() == n_ * (n_ - 1) / 2; }

  // "path:4", "book:3", or "custom:n=5,m=6".
  std::string Describe() const;

  // Family labels ("v3", "u1", "a", "center", "leaf2") or plain indices.
  // Throws GraphError(kUnknownLabel) when nothing matches.
  int VertexIndex(std::string_view label) const;
  std::string VertexLabel(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.tag_ == b.tag_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<int>> neighbor_lists_;
  std::vector<uint8_t> distances_;
  FamilyTag tag_;
};

// Connectivity of an arbitrary edge list, used before a Graph exists.
bool EdgesConnected(int num_vertices, const std::vector<Edge>& edges);

// Built-in families with fixed labelings:
//   path  P_n: v_i -> i-1, edges (i-1, i).
//   star  S_n: center -> 0, leaf_i -> i.
//   book  B_n: a -> 0, b -> 1, u_i -> 1+i, v_i -> n+1+i;
//              edges {a,b}, {a,u_i}, {b,v_i}, {u_i,v_i}.
//   cycle C_n: v_i -> i-1, edges (i, i+1 mod n).
Graph MakePath(int n);
Graph MakeStar(int n);
Graph MakeBook(int n);
Graph MakeCycle(int n);

}  // namespace pebhub

#endif  // PEBHUB_GRAPH_H_
