#include "pebhub/automorphism.h"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/brute_force.h"

namespace pebhub {
namespace {

std::set<Permutation> AsSet(const std::vector<Permutation>& v) {
  return std::set<Permutation>(v.begin(), v.end());
}

Permutation Compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (size_t v = 0; v < p.size(); ++v) r[v] = p[q[v]];
  return r;
}

Permutation Inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t v = 0; v < p.size(); ++v) r[p[v]] = static_cast<int>(v);
  return r;
}

// Small connected graphs: the families plus a few irregular ones.
std::vector<Graph> SampleGraphs() {
  std::vector<Graph> out = {MakePath(1), MakePath(2), MakePath(4), MakePath(5),
                            MakeStar(3), MakeStar(4), MakeBook(2), MakeBook(3),
                            MakeCycle(3), MakeCycle(5), MakeCycle(6)};
  out.push_back(Graph::FromEdges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}}));
  out.push_back(Graph::FromEdges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}));
  out.push_back(Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  out.push_back(Graph::FromEdges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                     {0, 3}, {1, 4}, {2, 5}}));
  return out;
}

TEST(Automorphisms, GroupOrders) {
  EXPECT_EQ(Automorphisms(MakePath(4)).size(), 2u);
  EXPECT_EQ(Automorphisms(MakeCycle(6)).size(), 12u);
  EXPECT_EQ(Automorphisms(MakeStar(4)).size(), 24u);
  EXPECT_EQ(Automorphisms(MakeBook(3)).size(), 12u);
}

TEST(Automorphisms, PathOnFourIsIdentityAndReversal) {
  const auto group = AsSet(Automorphisms(MakePath(4)));
  EXPECT_EQ(group, (std::set<Permutation>{{0, 1, 2, 3}, {3, 2, 1, 0}}));
}

TEST(Automorphisms, IdentityFirst) {
  for (const Graph& g : SampleGraphs()) {
    const auto group = Automorphisms(g);
    Permutation id(g.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    ASSERT_FALSE(group.empty());
    EXPECT_EQ(group.front(), id) << g.Describe();
  }
}

TEST(Automorphisms, ClosedUnderCompositionAndInverse) {
  for (const Graph& g : SampleGraphs()) {
    const auto list = Automorphisms(g);
    const auto group = AsSet(list);
    EXPECT_EQ(group.size(), list.size()) << "duplicates in " << g.Describe();
    for (const auto& p : list) {
      EXPECT_TRUE(group.count(Inverse(p))) << g.Describe();
      for (const auto& q : list) EXPECT_TRUE(group.count(Compose(p, q))) << g.Describe();
    }
  }
}

TEST(Automorphisms, PreserveEdgesAndNonEdges) {
  for (const Graph& g : SampleGraphs()) {
    for (const auto& p : Automorphisms(g)) {
      for (int u = 0; u < g.num_vertices(); ++u) {
        for (int v = 0; v < g.num_vertices(); ++v) {
          EXPECT_EQ(g.adjacent(u, v), g.adjacent(p[u], p[v])) << g.Describe();
        }
      }
    }
  }
}

TEST(Automorphisms, MatchExhaustivePermutationSearch) {
  for (const Graph& g : SampleGraphs()) {
    const auto expected = AsSet(brute::Automorphisms(brute::Adjacency(g)));
    EXPECT_EQ(AsSet(Automorphisms(g)), expected) << g.Describe();
    const SymmetryGroup group = SymmetryGroup::Of(g);
    EXPECT_EQ(AsSet(group.Elements()), expected) << g.Describe();
    EXPECT_EQ(group.order(), expected.size()) << g.Describe();
  }
}

TEST(Automorphisms, ColorsRestrictTheGroup) {
  const Graph path = MakePath(4);
  const std::vector<int> colors = {1, 0, 0, 0};
  EXPECT_EQ(Automorphisms(path, colors).size(), 1u);
  const Graph star = MakeStar(4);
  const std::vector<int> leaf = {0, 1, 0, 0, 0};
  EXPECT_EQ(Automorphisms(star, leaf).size(), 6u);
  EXPECT_EQ(SymmetryGroup::Of(star, leaf).order(), 6u);
}

TEST(Automorphisms, LimitThrows) {
  EXPECT_THROW(Automorphisms(MakeStar(6), {}, 100), std::length_error);
}

TEST(SymmetryGroup, StarsFactorThroughTwins) {
  const SymmetryGroup group = SymmetryGroup::Of(MakeStar(10));
  EXPECT_EQ(group.order(), 3628800u);
  EXPECT_EQ(group.coset_representatives().size(), 1u);
  ASSERT_EQ(group.twin_classes().size(), 1u);
  EXPECT_EQ(group.twin_classes()[0].size(), 10u);
}

TEST(SymmetryGroup, TrivialGroup) {
  const SymmetryGroup group = SymmetryGroup::Trivial(5);
  EXPECT_TRUE(group.IsTrivial());
  EXPECT_EQ(group.order(), 1u);
  std::vector<uint32_t> c = {0, 3, 1, 0, 2};
  EXPECT_TRUE(group.IsCanonical(c));
}

TEST(SymmetryGroup, CanonicalIsGreatestImage) {
  std::mt19937_64 rng(3);
  for (const Graph& g : SampleGraphs()) {
    const int n = g.num_vertices();
    const auto perms = brute::Automorphisms(brute::Adjacency(g));
    const SymmetryGroup group = SymmetryGroup::Of(g);
    std::uniform_int_distribution<uint32_t> count(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<uint32_t> c(n);
      for (auto& x : c) x = count(rng);
      std::vector<uint32_t> best = c;
      for (const auto& p : perms) best = std::max(best, PermuteCounts(p, c));
      std::vector<uint32_t> canon = c;
      group.Canonicalize(canon);
      EXPECT_EQ(canon, best) << g.Describe();
      EXPECT_EQ(group.IsCanonical(c), c == best) << g.Describe();
      EXPECT_TRUE(group.IsCanonical(canon));
    }
  }
}

TEST(SymmetryGroup, VertexOrbits) {
  EXPECT_EQ(SymmetryGroup::Of(MakePath(4)).VertexOrbits(),
            (std::vector<std::vector<int>>{{0, 3}, {1, 2}}));
  EXPECT_EQ(SymmetryGroup::Of(MakeCycle(5)).VertexOrbits(),
            (std::vector<std::vector<int>>{{0, 1, 2, 3, 4}}));
  EXPECT_EQ(SymmetryGroup::Of(MakeBook(2)).VertexOrbits(),
            (std::vector<std::vector<int>>{{0, 1}, {2, 3, 4, 5}}));
  EXPECT_EQ(SymmetryGroup::Of(MakeStar(3)).VertexOrbits(),
            (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
}

TEST(PermuteCounts, MovesMassAlongThePermutation) {
  const std::vector<uint32_t> c = {5, 0, 0, 1};
  EXPECT_EQ(PermuteCounts({3, 2, 1, 0}, c), (std::vector<uint32_t>{1, 0, 0, 5}));
  EXPECT_EQ(PermuteCounts({1, 2, 3, 0}, c), (std::vector<uint32_t>{1, 5, 0, 0}));
}

}  // namespace
}  // namespace pebhub
