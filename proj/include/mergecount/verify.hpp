#ifndef MERGECOUNT_VERIFY_HPP
#define MERGECOUNT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mergecount {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;  // first failure, if any

  bool passed() const { return !counterexample.has_value(); }
};

struct SweepLimits {
  std::int64_t max_n = 1024;
  std::int64_t max_m = 64;
};

inline constexpr std::string_view kSuites[] = {"identities", "formulas", "oracle", "takagi",
                                               "tree"};

bool is_known_suite(std::string_view suite);

/// Runs the invariant sweeps of one suite ("all" runs every suite in order).
/// Results are returned in a fixed order.
std::vector<CheckResult> run_suite(std::string_view suite, const SweepLimits& limits);

}  // namespace mergecount

#endif  // MERGECOUNT_VERIFY_HPP
