#include "pebhub/verify.h"

#include <gtest/gtest.h>

namespace pebhub {
namespace {

const VerificationCase* Find(const std::vector<VerificationCase>& cases, std::string_view name) {
  for (const auto& c : cases) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(MakeCase, ComparesValues) {
  EXPECT_EQ(MakeCase("x", "g", int64_t{3}, int64_t{3}).status, CaseStatus::kPass);
  EXPECT_EQ(MakeCase("x", "g", int64_t{3}, int64_t{4}).status, CaseStatus::kFail);
  EXPECT_EQ(MakeCase("x", "g", true, false).status, CaseStatus::kFail);
  EXPECT_EQ(SkippedCase("x", "g", "why").status, CaseStatus::kSkipped);
  EXPECT_EQ(CaseStatusName(CaseStatus::kSkipped), "SKIPPED");
}

TEST(ConjecturedCycleValue, FirstValues) {
  const uint64_t expected[] = {3, 5, 9, 13, 21, 29};
  for (int n = 4; n <= 9; ++n) EXPECT_EQ(ConjecturedCycleValue(n), expected[n - 4]) << n;
  EXPECT_THROW(ConjecturedCycleValue(2), std::invalid_argument);
}

TEST(VerifyPaths, SmallPathsPass) {
  const auto cases = VerifyPaths(5);
  EXPECT_FALSE(AnyFailed(cases));
  EXPECT_FALSE(AnySkipped(cases));
  ASSERT_NE(Find(cases, "paths/value/n=5"), nullptr);
  EXPECT_EQ(std::get<int64_t>(*Find(cases, "paths/value/n=5")->computed), 15);
  EXPECT_EQ(std::get<int64_t>(*Find(cases, "paths/value/n=2")->computed), 0);
  EXPECT_EQ(Find(cases, "paths/witness/n=4")->status, CaseStatus::kPass);
}

TEST(VerifyPaths, GuardSkipsInsteadOfRunning) {
  HarnessOptions options;
  options.guards.paths = 4;
  options.guards.paths_large = 4;
  const auto cases = VerifyPaths(5, options);
  EXPECT_TRUE(AnySkipped(cases));
  EXPECT_FALSE(AnyFailed(cases));
  EXPECT_EQ(Find(cases, "paths/value/n=5")->status, CaseStatus::kSkipped);
  EXPECT_EQ(Find(cases, "paths/value/n=4")->status, CaseStatus::kPass);
}

TEST(VerifyPathEndpointTargets, HoldsForSmallPaths) {
  for (const auto& c : VerifyPathEndpointTargetsUpTo(4)) {
    EXPECT_EQ(c.status, CaseStatus::kPass) << c.name << " " << c.detail;
  }
}

TEST(VerifyStars, ValuesAndWitnesses) {
  const auto cases = VerifyStars(6);
  EXPECT_FALSE(AnyFailed(cases));
  EXPECT_EQ(std::get<int64_t>(*Find(cases, "stars/value/n=6")->computed), 7);
}

TEST(VerifyBooks, ValuesHoldButNamedWitnessIsSolvable) {
  const auto cases = VerifyBooks(3);
  EXPECT_EQ(Find(cases, "books/value/n=2")->status, CaseStatus::kPass);
  EXPECT_EQ(Find(cases, "books/value/n=3")->status, CaseStatus::kPass);
  EXPECT_EQ(Find(cases, "books/characterization/n=3")->status, CaseStatus::kPass);
  const VerificationCase* w = Find(cases, "books/witness/n=2");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->status, CaseStatus::kFail);
  EXPECT_NE(w->detail.find("u1"), std::string::npos) << w->detail;
  EXPECT_TRUE(AnyFailed(cases));
}

TEST(ConjectureCycles, SmallCyclesAgree) {
  const auto rows = ConjectureCycles(6);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, CaseStatus::kPass) << r.n;
    EXPECT_TRUE(r.witness_unsolvable);
    EXPECT_TRUE(r.agreement);
  }
}

TEST(ConjectureCycles, GuardMarksRowsSkipped) {
  HarnessOptions options;
  options.guards.cycles = 5;
  options.guards.cycles_large = 5;
  const auto rows = ConjectureCycles(6, options);
  EXPECT_EQ(rows.back().status, CaseStatus::kSkipped);
  EXPECT_FALSE(rows.back().computed.has_value());
  EXPECT_TRUE(AnySkipped(rows));
  EXPECT_FALSE(AnyFailed(rows));
}

TEST(VerifyHubExamples, AllPass) {
  const auto cases = VerifyHubExamples();
  EXPECT_EQ(cases.size(), 6u);
  EXPECT_FALSE(AnyFailed(cases));
}

TEST(VerifyPathPebblingNumbers, PowersOfTwo) {
  const auto cases = VerifyPathPebblingNumbers(5);
  EXPECT_FALSE(AnyFailed(cases));
  EXPECT_EQ(std::get<int64_t>(*Find(cases, "pi-paths/m=5")->computed), 16);
}

TEST(VerifyOrdering, SmallGraphs) {
  const auto cases = VerifyOrdering(4, 5);
  EXPECT_FALSE(AnyFailed(cases));
  EXPECT_NE(Find(cases, "ordering/path:4"), nullptr);
}

TEST(SpotChecks, AddCasesWithoutFailures) {
  HarnessOptions options;
  options.spot_checks = 20;
  const auto cases = VerifyStars(4, options);
  EXPECT_GT(cases.size(), VerifyStars(4).size());
  EXPECT_FALSE(AnyFailed(cases));
}

}  // namespace
}  // namespace pebhub
