#include "pebhub/automorphism.h"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace pebhub {
namespace {

struct Backtracker {
  const Graph& graph;
  std::vector<int> colors;
  std::vector<int> order;
  std::vector<int> bfs_parent;
  // Twin class members per vertex (excluding itself); empty when not used.
  std::vector<VertexSet> twins;
  size_t limit;

  std::vector<int> perm;
  VertexSet assigned;
  VertexSet used_images;
  std::vector<Permutation> found;

  void Extend(int k) {
    const int n = graph.num_vertices();
    if (k == n) {
      if (found.size() >= limit) {
        throw std::length_error("automorphism group exceeds limit of " +
                                std::to_string(limit));
      }
      found.push_back(perm);
      return;
    }
    const int v = order[k];
    VertexSet candidates = k == 0 ? graph.all_vertices()
                                  : graph.neighbors(perm[bfs_parent[v]]);
    candidates = candidates - used_images;
    const VertexSet mapped_neighbors = graph.neighbors(v) & assigned;
    candidates.ForEach([&](int w) {
      if (graph.degree(w) != graph.degree(v) || colors[w] != colors[v]) return;
      VertexSet image;
      mapped_neighbors.ForEach([&](int u) { image.insert(perm[u]); });
      if (image != (graph.neighbors(w) & used_images)) return;
      if (!twins.empty()) {
        bool monotone = true;
        (twins[v] & assigned).ForEach([&](int u) {
          if ((u < v) != (perm[u] < w)) monotone = false;
        });
        if (!monotone) return;
      }
      perm[v] = w;
      assigned.insert(v);
      used_images.insert(w);
      Extend(k + 1);
      assigned.erase(v);
      used_images.erase(w);
      perm[v] = -1;
    });
  }
};

std::vector<int> NormalizedColors(const Graph& graph, std::span<const int> colors) {
  if (colors.empty()) return std::vector<int>(graph.num_vertices(), 0);
  if (static_cast<int>(colors.size()) != graph.num_vertices()) {
    throw std::invalid_argument("color vector size does not match vertex count");
  }
  return {colors.begin(), colors.end()};
}

std::vector<Permutation> RunBacktracking(const Graph& graph,
                                         const std::vector<int>& colors,
                                         std::vector<VertexSet> twins,
                                         size_t limit) {
  const int n = graph.num_vertices();
  Backtracker bt{graph, colors, {}, std::vector<int>(n, -1), std::move(twins),
                 limit, std::vector<int>(n, -1), {}, {}, {}};
  std::vector<bool> seen(n, false);
  std::deque<int> queue = {0};
  seen[0] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    bt.order.push_back(u);
    for (int w : graph.neighbor_list(u)) {
      if (!seen[w]) {
        seen[w] = true;
        bt.bfs_parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  bt.Extend(0);

  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  auto it = std::find(bt.found.begin(), bt.found.end(), identity);
  if (it != bt.found.end()) std::rotate(bt.found.begin(), it, it + 1);
  return std::move(bt.found);
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<Permutation> Automorphisms(const Graph& graph,
                                       std::span<const int> colors,
                                       size_t limit) {
  return RunBacktracking(graph, NormalizedColors(graph, colors), {}, limit);
}

SymmetryGroup SymmetryGroup::Of(const Graph& graph, std::span<const int> colors) {
  const int n = graph.num_vertices();
  const std::vector<int> color = NormalizedColors(graph, colors);

  SymmetryGroup group;
  group.n_ = n;
  std::vector<VertexSet> twins(n);
  std::vector<bool> placed(n, false);
  for (int u = 0; u < n; ++u) {
    if (placed[u]) continue;
    std::vector<int> cls = {u};
    for (int v = u + 1; v < n; ++v) {
      if (placed[v] || color[u] != color[v]) continue;
      const VertexSet nu = graph.neighbors(u) - VertexSet::Singleton(v);
      const VertexSet nv = graph.neighbors(v) - VertexSet::Singleton(u);
      if (nu == nv) cls.push_back(v);
    }
    if (cls.size() < 2) continue;
    const VertexSet members = VertexSet::FromVector(cls);
    for (int v : cls) {
      placed[v] = true;
      twins[v] = members - VertexSet::Singleton(v);
    }
    group.twin_classes_.push_back(std::move(cls));
  }
  // Twin classes depend on the graph only, so the monotone search returns
  // exactly one automorphism per coset of T.
  group.cosets_ = RunBacktracking(graph, color, std::move(twins),
                                  kDefaultAutomorphismLimit);
  return group;
}

SymmetryGroup SymmetryGroup::Trivial(int num_vertices) {
  SymmetryGroup group;
  group.n_ = num_vertices;
  Permutation identity(num_vertices);
  std::iota(identity.begin(), identity.end(), 0);
  group.cosets_.push_back(std::move(identity));
  return group;
}

uint64_t SymmetryGroup::order() const {
  auto saturating_mul = [](uint64_t a, uint64_t b) -> uint64_t {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
  };
  uint64_t result = cosets_.size();
  for (const auto& cls : twin_classes_) {
    for (uint64_t k = 2; k <= cls.size(); ++k) result = saturating_mul(result, k);
  }
  return result;
}

void SymmetryGroup::SortTwinClasses(std::span<uint32_t> counts) const {
  std::array<uint32_t, kMaxVertices> buffer;
  for (const auto& cls : twin_classes_) {
    const size_t k = cls.size();
    for (size_t i = 0; i < k; ++i) buffer[i] = counts[cls[i]];
    std::sort(buffer.begin(), buffer.begin() + k, std::greater<>());
    for (size_t i = 0; i < k; ++i) counts[cls[i]] = buffer[i];
  }
}

void SymmetryGroup::Canonicalize(std::span<uint32_t> counts) const {
  std::array<uint32_t, kMaxVertices> best;
  std::array<uint32_t, kMaxVertices> image;
  const auto best_span = std::span(best.data(), n_);
  const auto image_span = std::span(image.data(), n_);
  std::copy(counts.begin(), counts.end(), best.begin());
  SortTwinClasses(best_span);
  for (size_t r = 1; r < cosets_.size(); ++r) {
    const Permutation& perm = cosets_[r];
    for (int v = 0; v < n_; ++v) image[perm[v]] = counts[v];
    SortTwinClasses(image_span);
    if (std::lexicographical_compare(best.begin(), best.begin() + n_,
                                     image.begin(), image.begin() + n_)) {
      best = image;
    }
  }
  std::copy(best.begin(), best.begin() + n_, counts.begin());
}

bool SymmetryGroup::IsCanonical(std::span<const uint32_t> counts) const {
  for (const auto& cls : twin_classes_) {
    for (size_t i = 1; i < cls.size(); ++i) {
      if (counts[cls[i - 1]] < counts[cls[i]]) return false;
    }
  }
  std::array<uint32_t, kMaxVertices> image;
  const auto image_span = std::span(image.data(), n_);
  for (size_t r = 1; r < cosets_.size(); ++r) {
    const Permutation& perm = cosets_[r];
    for (int v = 0; v < n_; ++v) image[perm[v]] = counts[v];
    SortTwinClasses(image_span);
    if (std::lexicographical_compare(counts.begin(), counts.end(),
                                     image.begin(), image.begin() + n_)) {
      return false;
    }
  }
  return true;
}

std::vector<Permutation> SymmetryGroup::Elements(size_t limit) const {
  if (order() > limit) {
    throw std::length_error("automorphism group order " + std::to_string(order()) +
                            " exceeds limit " + std::to_string(limit));
  }
  // All elements of T, as permutations.
  Permutation identity(n_);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> twin_group = {identity};
  for (const auto& cls : twin_classes_) {
    std::vector<Permutation> next;
    std::vector<int> images = cls;
    do {
      for (const Permutation& base : twin_group) {
        Permutation p = base;
        for (size_t i = 0; i < cls.size(); ++i) p[cls[i]] = images[i];
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    twin_group = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(cosets_.size() * twin_group.size());
  for (const Permutation& r : cosets_) {
    for (const Permutation& t : twin_group) {
      Permutation p(n_);
      for (int v = 0; v < n_; ++v) p[v] = r[t[v]];
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<std::vector<int>> SymmetryGroup::VertexOrbits() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = Find(parent, a);
    b = Find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const Permutation& perm : cosets_) {
    for (int v = 0; v < n_; ++v) unite(v, perm[v]);
  }
  for (const auto& cls : twin_classes_) {
    for (int v : cls) unite(cls.front(), v);
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n_, -1);
  for (int v = 0; v < n_; ++v) {
    const int root = Find(parent, v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(v);
  }
  return orbits;
}

std::vector<uint32_t> PermuteCounts(const Permutation& perm,
                                    std::span<const uint32_t> counts) {
  std::vector<uint32_t> out(counts.size());
  for (size_t v = 0; v < counts.size(); ++v) out[perm[v]] = counts[v];
  return out;
}

}  // namespace pebhub
