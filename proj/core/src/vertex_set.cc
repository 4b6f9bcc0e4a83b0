#include "pebhub/vertex_set.h"

#include <algorithm>

namespace pebhub {

VertexSet VertexSet::Of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::FromVector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::vector<int> VertexSet::ToVector() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::DebugString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  out += '}';
  return out;
}

bool CardinalityThenLexLess(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::vector<int> va = a.ToVector();
  const std::vector<int> vb = b.ToVector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

}  // namespace pebhub
