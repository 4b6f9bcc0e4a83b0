#include "pebhub/numbers.h"

#include <random>

#include <gtest/gtest.h>

#include "support/brute_force.h"

namespace pebhub {
namespace {

uint64_t Value(const Graph& g, const TargetFamily& f, const NumberOptions& o = {}) {
  const NumberReport r = GeneralizedCoverPebblingNumber(g, f, o);
  EXPECT_TRUE(r.exact) << r.note;
  return r.value;
}

brute::Goal GoalFor(const brute::Adjacency& a, TargetFamily::Kind kind) {
  switch (kind) {
    case TargetFamily::Kind::kStrongHubSets: return brute::StrongHubGoal(a);
    case TargetFamily::Kind::kHubSets: return brute::HubGoal(a);
    case TargetFamily::Kind::kDominatingSets: return brute::DominatingGoal(a);
    default: return brute::CoverGoal();
  }
}

TEST(GeneralizedCoverPebblingNumber, SmallValues) {
  EXPECT_EQ(Value(MakePath(4), TargetFamily::StrongHubSets()), 7u);
  EXPECT_EQ(Value(MakePath(4), TargetFamily::HubSets()), 3u);
  EXPECT_EQ(Value(MakeStar(4), TargetFamily::StrongHubSets()), 5u);
  EXPECT_EQ(Value(MakeBook(2), TargetFamily::StrongHubSets()), 7u);
  EXPECT_EQ(Value(MakeCycle(6), TargetFamily::StrongHubSets()), 9u);
  EXPECT_EQ(Value(MakePath(2), TargetFamily::StrongHubSets()), 0u);
}

TEST(PebblingNumber, Paths) {
  EXPECT_EQ(PebblingNumber(MakePath(4)).value, 8u);
  EXPECT_EQ(PebblingNumber(MakePath(2)).value, 2u);
  EXPECT_EQ(PebblingNumber(MakePath(1)).value, 1u);
  EXPECT_EQ(PebblingNumber(MakeCycle(5)).value, 5u);
}

TEST(GeneralizedCoverPebblingNumber, MatchesBruteForce) {
  const std::vector<Graph> graphs = {
      MakePath(3), MakePath(4), MakeStar(3), MakeCycle(4), MakeCycle(5), MakeBook(2),
      Graph::FromEdges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
      Graph::FromEdges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}),
  };
  const TargetFamily families[] = {TargetFamily::StrongHubSets(), TargetFamily::HubSets(),
                                   TargetFamily::DominatingSets(), TargetFamily::FullCover()};
  for (const Graph& g : graphs) {
    const brute::Adjacency a(g);
    for (const TargetFamily& f : families) {
      EXPECT_EQ(Value(g, f), brute::Number(a, GoalFor(a, f.kind())))
          << g.Describe() << " " << f.Name();
    }
  }
}

TEST(GeneralizedCoverPebblingNumber, SymmetryAndWorkersDoNotChangeResults) {
  for (const Graph& g : {MakeCycle(6), MakeBook(3), MakePath(5), MakeStar(6)}) {
    NumberOptions plain;
    plain.use_symmetry = false;
    NumberOptions parallel;
    parallel.jobs = 3;
    const NumberReport a = GeneralizedCoverPebblingNumber(g, TargetFamily::StrongHubSets());
    const NumberReport b =
        GeneralizedCoverPebblingNumber(g, TargetFamily::StrongHubSets(), plain);
    const NumberReport c =
        GeneralizedCoverPebblingNumber(g, TargetFamily::StrongHubSets(), parallel);
    EXPECT_EQ(a.value, b.value) << g.Describe();
    EXPECT_EQ(a.value, c.value) << g.Describe();
    EXPECT_EQ(a.witness, c.witness) << g.Describe();
    EXPECT_EQ(a.configs_examined, c.configs_examined) << g.Describe();
    EXPECT_EQ(b.group_order, 1u);
  }
}

TEST(GeneralizedCoverPebblingNumber, WitnessIsUnsolvableOneBelow) {
  for (const Graph& g : {MakePath(5), MakeCycle(7), MakeBook(3), MakeStar(5)}) {
    for (const TargetFamily& f : {TargetFamily::StrongHubSets(), TargetFamily::HubSets()}) {
      const NumberReport r = GeneralizedCoverPebblingNumber(g, f);
      ASSERT_TRUE(r.witness.has_value()) << g.Describe();
      EXPECT_EQ(r.witness->total(), r.value - 1);
      EXPECT_EQ(IsSolvable(g, *r.witness, f).verdict, Verdict::kUnsolvable);
      EXPECT_GE(r.value, r.lower_bound);
    }
  }
}

TEST(CheckLevel, FirstUnsolvableIsDeterministic) {
  const Graph c6 = MakeCycle(6);
  const LevelResult one = CheckLevel(c6, TargetFamily::StrongHubSets(), 8);
  NumberOptions three;
  three.jobs = 3;
  const LevelResult par = CheckLevel(c6, TargetFamily::StrongHubSets(), 8, three);
  ASSERT_EQ(one.status, LevelStatus::kHasUnsolvable);
  EXPECT_EQ(one.first_unsolvable, par.first_unsolvable);
  EXPECT_EQ(one.configs_examined, par.configs_examined);
  // Descending order reaches the single stack first.
  EXPECT_EQ(*one.first_unsolvable, ParseConfig(c6, "v1:8"));
  EXPECT_EQ(CheckLevel(c6, TargetFamily::StrongHubSets(), 9).status, LevelStatus::kAllSolvable);
}

TEST(CheckLevel, CeilingThrows) {
  NumberOptions tight;
  tight.enumeration_ceiling = 10;
  tight.use_symmetry = false;
  EXPECT_THROW(CheckLevel(MakeCycle(6), TargetFamily::StrongHubSets(), 9, tight),
               EnumerationLimitError);
  EXPECT_THROW(GeneralizedCoverPebblingNumber(MakeCycle(6), TargetFamily::StrongHubSets(), tight),
               EnumerationLimitError);
}

TEST(CheckLevel, ExhaustedBudgetMakesLevelIncomplete) {
  NumberOptions starved;
  starved.solve.node_budget = 1;
  starved.witness_climbing = false;
  EXPECT_EQ(CheckLevel(MakeCycle(6), TargetFamily::StrongHubSets(), 9, starved).status,
            LevelStatus::kIncomplete);
  const NumberReport r =
      GeneralizedCoverPebblingNumber(MakeCycle(6), TargetFamily::StrongHubSets(), starved);
  EXPECT_FALSE(r.exact);
  EXPECT_FALSE(r.note.empty());
}

TEST(MaxUnsolvableWitness, NamedConstructions) {
  const Graph p5 = MakePath(5);
  EXPECT_EQ(MaxUnsolvableWitness(p5, TargetFamily::StrongHubSets()),
            ParseConfig(p5, "v1:13,v5:1"));
  const Graph s3 = MakeStar(3);
  EXPECT_EQ(MaxUnsolvableWitness(s3, TargetFamily::StrongHubSets()),
            ParseConfig(s3, "leaf1:1,leaf2:1,leaf3:1"));
  // The named book pattern is solvable, so a computed witness stands in.
  const Graph b3 = MakeBook(3);
  const auto w = MaxUnsolvableWitness(b3, TargetFamily::StrongHubSets());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->total(), 8u);
  EXPECT_FALSE(IsSolvable(b3, *w, TargetFamily::StrongHubSets()).solvable());
  EXPECT_FALSE(MaxUnsolvableWitness(MakePath(2), TargetFamily::StrongHubSets()).has_value());
}

TEST(NamedWitnesses, Shapes) {
  const Graph c6 = MakeCycle(6);
  EXPECT_EQ(NamedWitnesses(c6, TargetFamily::StrongHubSets()),
            std::vector<PebbleConfig>{ParseConfig(c6, "v1:8")});
  const Graph c7 = MakeCycle(7);
  EXPECT_EQ(NamedWitnesses(c7, TargetFamily::StrongHubSets()),
            std::vector<PebbleConfig>{ParseConfig(c7, "v1:12")});
  EXPECT_TRUE(NamedWitnesses(c6, TargetFamily::HubSets()).empty());
}

// Re-check random configurations at total = value against the oracle.
TEST(GeneralizedCoverPebblingNumber, RandomSpotChecks) {
  std::mt19937_64 rng(99);
  const std::vector<Graph> graphs = {MakeCycle(5), MakeBook(2), MakePath(4), MakeStar(4)};
  std::vector<uint32_t> values;
  for (const Graph& g : graphs) values.push_back(Value(g, TargetFamily::StrongHubSets()));
  for (int i = 0; i < 1000; ++i) {
    const Graph& g = graphs[i % graphs.size()];
    const uint32_t value = values[i % graphs.size()];
    const PebbleConfig c(RandomComposition(rng, g.num_vertices(), value));
    const brute::Adjacency a(g);
    const std::vector<uint32_t> counts(c.counts().begin(), c.counts().end());
    ASSERT_TRUE(brute::Solvable(a, counts, brute::StrongHubGoal(a)))
        << g.Describe() << " " << FormatConfig(g, c);
  }
}

TEST(GeneralizedCoverPebblingNumber, FamilyOrdering) {
  for (const Graph& g : {MakePath(5), MakeCycle(6), MakeStar(4), MakeBook(3)}) {
    const uint64_t hub = Value(g, TargetFamily::HubSets());
    const uint64_t strong = Value(g, TargetFamily::StrongHubSets());
    const uint64_t cover = Value(g, TargetFamily::FullCover());
    EXPECT_LE(hub, strong) << g.Describe();
    EXPECT_LE(strong, cover) << g.Describe();
  }
}

}  // namespace
}  // namespace pebhub
