#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dofb::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  /// Directory with reference network JSON and region CSV files; the
  /// comparison is skipped when unset.
  std::optional<std::filesystem::path> golden_dir;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..10). Exceptions are reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS  3  name | expected: ... | computed: ..."
std::string format_line(const CriterionResult& result);

}  // namespace dofb::verify
