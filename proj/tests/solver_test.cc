#include "pebhub/solver.h"

#include <random>

#include <gtest/gtest.h>

#include "pebhub/automorphism.h"
#include "pebhub/enumerate.h"
#include "support/brute_force.h"

namespace pebhub {
namespace {

const TargetFamily kIntrinsic[] = {TargetFamily::StrongHubSets(), TargetFamily::HubSets(),
                                   TargetFamily::FullCover(), TargetFamily::DominatingSets()};

brute::Goal GoalFor(const brute::Adjacency& a, const TargetFamily& f) {
  switch (f.kind()) {
    case TargetFamily::Kind::kStrongHubSets: return brute::StrongHubGoal(a);
    case TargetFamily::Kind::kHubSets: return brute::HubGoal(a);
    case TargetFamily::Kind::kDominatingSets: return brute::DominatingGoal(a);
    case TargetFamily::Kind::kFullCover: return brute::CoverGoal();
    case TargetFamily::Kind::kSingleVertex: {
      std::vector<bool> t(a.n);
      t[f.root()] = true;
      return brute::ContainsGoal(t);
    }
    case TargetFamily::Kind::kExplicitSets: break;
  }
  throw std::logic_error("no brute-force goal");
}

std::vector<uint32_t> Counts(const PebbleConfig& c) {
  return {c.counts().begin(), c.counts().end()};
}

std::vector<Graph> SmallGraphs() {
  return {MakePath(1), MakePath(2), MakePath(4), MakeStar(3), MakeCycle(4), MakeCycle(5),
          MakeBook(2),
          Graph::FromEdges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
          Graph::FromEdges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}}),
          Graph::FromEdges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}})};
}

TEST(CanCoverTarget, Examples) {
  const Graph p4 = MakePath(4);
  EXPECT_EQ(CanCoverTarget(p4, ParseConfig(p4, "v1:5,v4:1"), VertexSet::Of({1, 2})).verdict,
            Verdict::kUnsolvable);

  const SolveOutcome covered = CanCoverTarget(p4, ParseConfig(p4, "v2:1,v3:1"),
                                              VertexSet::Of({1, 2}));
  ASSERT_TRUE(covered.solvable());
  ASSERT_TRUE(covered.certificate.has_value());
  EXPECT_TRUE(covered.certificate->moves.empty());

  const Graph p3 = MakePath(3);
  const SolveOutcome one = CanCoverTarget(p3, ParseConfig(p3, "v1:2,v3:1"), VertexSet::Of({1}));
  ASSERT_TRUE(one.solvable());
  EXPECT_EQ(one.certificate->moves, (std::vector<Move>{{0, 1}}));
}

TEST(CanCoverTarget, RejectsForeignTargetsAndOversizedConfigs) {
  const Graph p3 = MakePath(3);
  EXPECT_THROW(CanCoverTarget(p3, PebbleConfig(3), VertexSet::Of({5})), std::invalid_argument);
  EXPECT_THROW(CanCoverTarget(p3, PebbleConfig::Stacked(3, 0, 300), VertexSet::Of({2})),
               std::length_error);
}

TEST(IsSolvable, Examples) {
  const Graph s3 = MakeStar(3);
  EXPECT_EQ(IsSolvable(s3, ParseConfig(s3, "leaf1:1,leaf2:1,leaf3:1"),
                       TargetFamily::StrongHubSets())
                .verdict,
            Verdict::kUnsolvable);

  const Graph c6 = MakeCycle(6);
  EXPECT_EQ(IsSolvable(c6, ParseConfig(c6, "v1:8"), TargetFamily::StrongHubSets()).verdict,
            Verdict::kUnsolvable);
  EXPECT_TRUE(IsSolvable(c6, ParseConfig(c6, "v1:9"), TargetFamily::StrongHubSets()).solvable());
}

// Five pebbles on u1 and one on v1: u1 feeds a and v1, and v1 then feeds b.
TEST(IsSolvable, BookStackNextToMatchedPebbleIsSolvable) {
  for (int n = 2; n <= 5; ++n) {
    const Graph g = MakeBook(n);
    PebbleConfig c(g.num_vertices());
    c.Set(g.VertexIndex("u1"), 5);
    for (int i = 2; i <= n - 1; ++i) c.Set(g.VertexIndex("u" + std::to_string(i)), 1);
    for (int i = 1; i <= n - 1; ++i) c.Set(g.VertexIndex("v" + std::to_string(i)), 1);
    const SolveOutcome out = IsSolvable(g, c, TargetFamily::StrongHubSets());
    ASSERT_TRUE(out.solvable()) << "n=" << n;
    EXPECT_TRUE(CheckMoveCertificate(g, c, TargetFamily::StrongHubSets(), *out.certificate));
    EXPECT_EQ(out.certificate->final_target, VertexSet::Of({0, 1}));
    const brute::Adjacency a(g);
    if (n <= 3) {
      EXPECT_TRUE(brute::Solvable(a, Counts(c), brute::StrongHubGoal(a)));
    }
  }
}

TEST(IsSolvable, ZeroPebblesOnlyForCompleteGraphs) {
  for (const TargetFamily& f : {TargetFamily::StrongHubSets(), TargetFamily::HubSets()}) {
    EXPECT_TRUE(IsSolvable(MakePath(1), PebbleConfig(1), f).solvable());
    EXPECT_TRUE(IsSolvable(MakePath(2), PebbleConfig(2), f).solvable());
    EXPECT_TRUE(IsSolvable(MakeCycle(3), PebbleConfig(3), f).solvable());
    EXPECT_FALSE(IsSolvable(MakePath(3), PebbleConfig(3), f).solvable());
  }
  EXPECT_FALSE(IsSolvable(MakePath(2), PebbleConfig(2), TargetFamily::DominatingSets()).solvable());
}

// Every configuration up to `max_total` against the reachable-state oracle,
// with and without the tree shortcut and dominance pruning.
TEST(IsSolvable, MatchesExhaustiveReachability) {
  for (const Graph& g : SmallGraphs()) {
    const brute::Adjacency a(g);
    const int n = g.num_vertices();
    const uint32_t max_total = n <= 4 ? 8 : 6;
    std::vector<TargetFamily> families(std::begin(kIntrinsic), std::end(kIntrinsic));
    families.push_back(TargetFamily::SingleVertex(n - 1));
    for (const TargetFamily& f : families) {
      const brute::Goal goal = GoalFor(a, f);
      SolveOptions plain;
      plain.use_tree_fast_path = false;
      plain.dominance_pruning = false;
      Solver fast(g, f);
      Solver slow(g, f, plain);
      for (uint32_t t = 0; t <= max_total; ++t) {
        for (const PebbleConfig& c : EnumerateConfigs(n, t)) {
          const bool expected = brute::Solvable(a, Counts(c), goal);
          const SolveOutcome o = fast.Solve(c);
          ASSERT_EQ(o.solvable(), expected)
              << g.Describe() << " " << f.Name() << " " << FormatConfig(g, c);
          ASSERT_EQ(slow.Solve(c).solvable(), expected)
              << g.Describe() << " " << f.Name() << " " << FormatConfig(g, c);
          if (o.solvable()) {
            ASSERT_TRUE(o.certificate.has_value());
            const CheckResult check = CheckMoveCertificate(g, c, f, *o.certificate);
            ASSERT_TRUE(check) << check.reason;
          }
        }
      }
    }
  }
}

TEST(IsSolvable, MonotoneUnderAddingPebbles) {
  for (const Graph& g : {MakePath(4), MakeStar(3), MakeCycle(5)}) {
    const int n = g.num_vertices();
    for (const TargetFamily& f : kIntrinsic) {
      Solver solver(g, f, {.want_certificate = false});
      for (uint32_t t = 0; t < 8; ++t) {
        for (const PebbleConfig& c : EnumerateConfigs(n, t)) {
          if (!solver.Solve(c).solvable()) continue;
          for (int v = 0; v < n; ++v) {
            PebbleConfig more = c;
            more.Add(v, 1);
            ASSERT_TRUE(solver.Solve(more).solvable())
                << g.Describe() << " " << f.Name() << " " << FormatConfig(g, more);
          }
        }
      }
    }
  }
}

TEST(IsSolvable, MonotoneOnRandomSamples) {
  std::mt19937_64 rng(5);
  for (const Graph& g : {MakeBook(3), MakeCycle(7), MakePath(6)}) {
    const int n = g.num_vertices();
    Solver solver(g, TargetFamily::StrongHubSets(), {.want_certificate = false});
    for (int trial = 0; trial < 300; ++trial) {
      const uint32_t t = std::uniform_int_distribution<uint32_t>(0, 14)(rng);
      PebbleConfig c(RandomComposition(rng, n, t));
      if (!solver.Solve(c).solvable()) continue;
      c.Add(std::uniform_int_distribution<int>(0, n - 1)(rng), 1);
      ASSERT_TRUE(solver.Solve(c).solvable()) << g.Describe() << " " << FormatConfig(g, c);
    }
  }
}

TEST(IsSolvable, InvariantUnderAutomorphisms) {
  for (const Graph& g : {MakePath(4), MakeCycle(5), MakeStar(3), MakeBook(2)}) {
    const int n = g.num_vertices();
    const auto group = Automorphisms(g);
    for (const TargetFamily& f : kIntrinsic) {
      Solver solver(g, f, {.want_certificate = false});
      for (uint32_t t = 0; t <= 6; ++t) {
        for (const PebbleConfig& c : EnumerateConfigs(n, t)) {
          const bool base = solver.Solve(c).solvable();
          for (const Permutation& p : group) {
            const PebbleConfig image(PermuteCounts(p, c.counts()));
            ASSERT_EQ(solver.Solve(image).solvable(), base)
                << g.Describe() << " " << f.Name() << " " << FormatConfig(g, c);
          }
        }
      }
    }
  }
}

TEST(IsSolvable, CertificatesYieldCheckableFlows) {
  int flows_checked = 0;
  for (const Graph& g : {MakeCycle(5), MakeBook(2), MakeCycle(6)}) {
    SolveOptions options;
    options.use_tree_fast_path = false;
    for (const TargetFamily& f : kIntrinsic) {
      Solver solver(g, f, options);
      for (uint32_t t = 1; t <= 7; ++t) {
        for (const PebbleConfig& c : EnumerateConfigs(g.num_vertices(), t)) {
          const SolveOutcome o = solver.Solve(c);
          if (!o.solvable()) continue;
          ASSERT_TRUE(CheckMoveCertificate(g, c, f, *o.certificate));
          const auto flow = FlowFromMoves(g, *o.certificate);
          if (!flow) continue;
          const CheckResult check = CheckFlowCertificate(g, c, o.certificate->final_target, *flow);
          ASSERT_TRUE(check) << check.reason;
          ++flows_checked;
        }
      }
    }
  }
  EXPECT_GT(flows_checked, 1000);
}

TEST(Solver, ExhaustedBudgetIsUnknown) {
  const Graph c8 = MakeCycle(8);
  SolveOptions options;
  options.node_budget = 3;
  const SolveOutcome o =
      IsSolvable(c8, ParseConfig(c8, "v1:20"), TargetFamily::StrongHubSets(), options);
  EXPECT_EQ(o.verdict, Verdict::kUnknown);
  EXPECT_FALSE(o.certificate.has_value());
  EXPECT_EQ(VerdictName(o.verdict), "unknown");
}

TEST(Solver, ReuseKeepsAnswersStable) {
  const Graph b3 = MakeBook(3);
  Solver reused(b3, TargetFamily::StrongHubSets(), {.want_certificate = false});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t t = std::uniform_int_distribution<uint32_t>(4, 10)(rng);
    const PebbleConfig c(RandomComposition(rng, b3.num_vertices(), t));
    Solver fresh(b3, TargetFamily::StrongHubSets(), {.want_certificate = false});
    ASSERT_EQ(reused.Solve(c).verdict, fresh.Solve(c).verdict) << FormatConfig(b3, c);
  }
}

TEST(Solver, MinimalTargetsFollowTheFamily) {
  const Graph p5 = MakePath(5);
  EXPECT_EQ(Solver(p5, TargetFamily::StrongHubSets()).minimal_targets(),
            std::vector<VertexSet>{VertexSet::Of({1, 2, 3})});
  EXPECT_EQ(Solver(p5, TargetFamily::FullCover()).minimal_targets(),
            std::vector<VertexSet>{p5.all_vertices()});
  EXPECT_EQ(Solver(p5, TargetFamily::SingleVertex(2)).minimal_targets(),
            std::vector<VertexSet>{VertexSet::Of({2})});
  EXPECT_TRUE(Solver(MakePath(2), TargetFamily::HubSets()).AdmitsEmptyTarget());
  EXPECT_FALSE(Solver(MakePath(3), TargetFamily::HubSets()).AdmitsEmptyTarget());
}

TEST(Solver, ExplicitSets) {
  const Graph p4 = MakePath(4);
  const TargetFamily ends =
      TargetFamily::ExplicitSets({VertexSet::Of({0, 1, 2}), VertexSet::Of({1, 2, 3})});
  EXPECT_TRUE(IsSolvable(p4, ParseConfig(p4, "v1:7"), ends).solvable());
  EXPECT_FALSE(IsSolvable(p4, ParseConfig(p4, "v1:5,v4:1"), ends).solvable());
}

}  // namespace
}  // namespace pebhub
