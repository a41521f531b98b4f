#pragma once

// Named randomized property suites, shared by the CLI and the acceptance
// tests. Sample i draws from sample_rng(seed, i), so reports do not depend on
// the number of worker threads.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diagramma {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t passed = 0;
  /// "sample <i>: <reason>", ordered by sample index.
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const noexcept { return passed == count; }
};

/// confluence, group-laws, theta-roundtrip, combination, realization, pvt-oracle.
const std::vector<std::string>& suite_names();

/// Throws OutOfRange for an unknown name. `threads` = 0 picks the hardware
/// concurrency.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t count,
                      std::size_t threads = 0);

}  // namespace diagramma
