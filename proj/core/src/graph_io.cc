#include "pebhub/graph_io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace pebhub {
namespace {

using Kind = GraphError::Kind;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseInt(std::string_view text, int& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const auto fields = SplitWhitespace(line);
    if (n < 0) {
      if (fields.size() != 1 || !ParseInt(fields[0], n)) {
        throw GraphError(Kind::kMalformedLine, line_number,
                         "expected vertex count, got '" + std::string(line) + "'");
      }
      if (n < 1 || n > kMaxVertices) {
        throw GraphError(Kind::kBadVertexCount, line_number, std::to_string(n));
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (fields.size() != 2 || !ParseInt(fields[0], u) || !ParseInt(fields[1], v)) {
      throw GraphError(Kind::kMalformedLine, line_number,
                       "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(Kind::kIndexOutOfRange, line_number,
                       std::string(line) + " with n=" + std::to_string(n));
    }
    if (u == v) throw GraphError(Kind::kSelfLoop, line_number, std::string(line));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw GraphError(Kind::kDuplicateEdge, line_number, std::string(line));
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw GraphError(Kind::kMalformedLine, line_number, "empty graph text");
  if (!EdgesConnected(n, edges)) {
    throw GraphError(Kind::kDisconnected, line_number, "");
  }
  return Graph::FromEdges(n, edges);
}

std::string RenderGraph(const Graph& graph) {
  std::ostringstream out;
  out << graph.num_vertices() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph LoadGraph(std::string_view spec) {
  if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
    const std::string_view family = spec.substr(0, colon);
    int parameter = 0;
    const bool known = family == "path" || family == "star" ||
                       family == "book" || family == "cycle";
    if (known) {
      if (!ParseInt(spec.substr(colon + 1), parameter)) {
        throw GraphError(Kind::kBadParameter, 0, std::string(spec));
      }
      if (family == "path") return MakePath(parameter);
      if (family == "star") return MakeStar(parameter);
      if (family == "book") return MakeBook(parameter);
      return MakeCycle(parameter);
    }
  }
  std::ifstream in{std::string(spec)};
  if (!in) {
    throw GraphError(Kind::kMalformedLine, 0,
                     "not a family spec or readable file: " + std::string(spec));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

}  // namespace pebhub
