#ifndef PEBHUB_GRAPH_IO_H_
#define PEBHUB_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "pebhub/graph.h"

namespace pebhub {

// Edge-list text format:
//
//   # comment
//   4          <- first nonblank line: vertex count
//   0 1        <- one "u v" pair per nonblank line, 0 <= u, v < n
//   1 2
//
// '#' starts a comment anywhere on a line. Errors carry the 1-based line
// number. The result is a custom-tagged graph.
Graph ParseGraph(std::string_view text);

// Inverse of ParseGraph; edges are written in the graph's stored order.
std::string RenderGraph(const Graph& graph);

// Resolves a CLI graph argument: "path:N", "star:N", "book:N", "cycle:N", or
// the path of an edge-list file.
Graph LoadGraph(std::string_view spec);

}  // namespace pebhub

#endif  // PEBHUB_GRAPH_IO_H_
