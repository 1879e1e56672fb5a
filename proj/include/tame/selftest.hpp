#pragma once

// The law suites behind `selftest` and the acceptance run. Every suite is
// deterministic in (seed, cases, window).

#include <cstdint>
#include <string>
#include <vector>

#include "tame/inj.hpp"

namespace tame {

struct SelftestOptions {
  std::uint64_t seed = 42;
  int cases = 0;  // 0: each suite's own case count
  Nat window = 8;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // the first few counterexamples
  std::string detail;                 // e.g. observed chain lengths
  double elapsed_ms = 0;

  bool passed() const noexcept { return failure_count == 0; }
};

const std::vector<std::string>& suite_names();
/// Throws UnknownCommand for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SelftestOptions& options);
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace tame
