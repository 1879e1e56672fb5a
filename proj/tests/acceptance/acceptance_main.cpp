// Acceptance run: one line per criterion, exit status 1 if any fails.
// Every check is an exact discrete comparison; the time budgets are part of
// each criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "tame/selftest.hpp"

namespace {

struct Criterion {
  const char* label;
  const char* suite;
  double budget_ms;
};

const std::vector<Criterion> kCriteria = {
    {"decomposition round trip", "decomposition-round-trip", 60e3},
    {"box product oracle", "box-oracle", 60e3},
    {"rho restricts to a bijection", "rho-iso", 10e3},
    {"Day convolution against box product", "day-vs-box", 120e3},
    {"latching and direct flatness agree", "flatness-criteria", 60e3},
    {"flat replacement adjunction", "adjunction", 60e3},
    {"mono-pushout property", "mono-pushout", 60e3},
    {"agreeing-slot certificates", "agreeing-certificates", 120e3},
    {"monoid and algebra round trips", "algebra-round-trips", 60e3},
    {"chi and its section", "chi-iso", 60e3},
    {"sum laws", "sum-laws", 60e3},
    {"X-infinity wedge", "wedge-iso", 10e3},
    {"orbit sets of box products", "orbit-product", 30e3},
};

}  // namespace

int main() {
  const tame::SelftestOptions options;  // seed 42, per-suite case counts
  int failed = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& c = kCriteria[i];
    const tame::SuiteResult r = tame::run_suite(c.suite, options);
    const bool in_time = r.elapsed_ms <= c.budget_ms;
    const bool ok = r.passed() && in_time;
    if (!ok) ++failed;
    std::printf("%s %2zu %-40s cases=%zu failures=%zu time=%.0fms/%.0fms%s%s\n",
                ok ? "PASS" : "FAIL", i + 1, c.label, r.cases, r.failure_count,
                r.elapsed_ms, c.budget_ms, r.detail.empty() ? "" : " ",
                r.detail.c_str());
    for (const std::string& f : r.failures) std::printf("     %s\n", f.c_str());
    if (!in_time) std::printf("     over the time budget\n");
  }
  std::printf("%zu/%zu criteria passed\n", kCriteria.size() - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
