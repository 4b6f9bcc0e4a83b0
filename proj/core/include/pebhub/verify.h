#ifndef PEBHUB_VERIFY_H_
#define PEBHUB_VERIFY_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pebhub/numbers.h"

namespace pebhub {

enum class CaseStatus { kPass, kFail, kSkipped };
std::string_view CaseStatusName(CaseStatus status);

using CaseValue = std::variant<int64_t, bool>;

// One checked claim: an expected value against a computed one.
struct VerificationCase {
  std::string name;
  std::string graph;
  std::optional<CaseValue> expected;
  std::optional<CaseValue> computed;
  CaseStatus status = CaseStatus::kSkipped;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

// PASS when both values are present and equal, FAIL when both are present
// and differ, SKIPPED otherwise.
VerificationCase MakeCase(std::string name, std::string graph,
                          std::optional<CaseValue> expected,
                          std::optional<CaseValue> computed, std::string detail = {});
VerificationCase SkippedCase(std::string name, std::string graph, std::string reason);

// Computed strong-hub cover number of a cycle against the closed form
// 2^k + 2^(k-1) - 3 (n = 2k) or 2^(k+1) - 3 (n = 2k+1). Disagreement is
// reported, not failed; `status` is FAIL only when the stacked witness of
// total (conjectured - 1) turns out solvable.
struct ConjectureRow {
  int n = 0;
  int k = 0;
  uint64_t conjectured = 0;
  std::optional<uint64_t> computed;
  bool agreement = false;
  bool witness_unsolvable = false;
  bool exact = true;
  CaseStatus status = CaseStatus::kSkipped;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
};

uint64_t ConjecturedCycleValue(int n);

// Size guards. Values above the default need `allow_large`; values above
// the large guard are SKIPPED.
struct HarnessGuards {
  int paths = 6, paths_large = 7;
  int prop2 = 5, prop2_large = 6;
  int stars = 10, stars_large = 14;
  int books = 5, books_large = 6;
  int cycles = 8, cycles_large = 9;
  int pi_paths = 6, pi_paths_large = 7;
};

struct HarnessOptions {
  NumberOptions number;
  HarnessGuards guards;
  bool allow_large = false;
  // Random re-verification of configurations at total = value after each
  // computed number; 0 disables it.
  int spot_checks = 0;
  uint64_t seed = 0x5eed;
};

std::vector<VerificationCase> VerifyPaths(int max_n, const HarnessOptions& options = {});
VerificationCase VerifyPathEndpointTargets(int n, const HarnessOptions& options = {});
std::vector<VerificationCase> VerifyPathEndpointTargetsUpTo(
    int max_n, const HarnessOptions& options = {});
std::vector<VerificationCase> VerifyStars(int max_n, const HarnessOptions& options = {});
std::vector<VerificationCase> VerifyBooks(int max_n, const HarnessOptions& options = {});
std::vector<ConjectureRow> ConjectureCycles(int max_n, const HarnessOptions& options = {});
std::vector<VerificationCase> VerifyHubExamples();
std::vector<VerificationCase> VerifyPathPebblingNumbers(int max_m,
                                                        const HarnessOptions& options = {});
// h_s*(G) >= h*(G) and cover(G) >= h_s*(G) on paths and stars up to
// `max_tree`, cycles up to `max_cycle`.
std::vector<VerificationCase> VerifyOrdering(int max_tree, int max_cycle,
                                             const HarnessOptions& options = {});

// True when any case (or row) failed / was skipped.
bool AnyFailed(const std::vector<VerificationCase>& cases);
bool AnyFailed(const std::vector<ConjectureRow>& rows);
bool AnySkipped(const std::vector<VerificationCase>& cases);
bool AnySkipped(const std::vector<ConjectureRow>& rows);

}  // namespace pebhub

#endif  // PEBHUB_VERIFY_H_
