#pragma once

// Property suites behind `dqp verify`. Every check is deterministic for a
// fixed seed; details never contain timings.

#include <cstdint>
#include <string>
#include <vector>

#include "dqp/report.hpp"

namespace dqp::verify {

struct Options {
  int pmax = 6;
  std::uint64_t seed = 42;
  int jobs = 0;
  int chow_cases = 500;
  int closure_cases = 200;
  /// Largest prime^n enumerated by the ffcount suite.
  std::uint64_t count_budget = 2'000'000;
};

std::vector<report::Check> core_suite(const Options& options);
std::vector<report::Check> chow_suite(const Options& options);
std::vector<report::Check> closure_suite(const Options& options);
std::vector<report::Check> ffcount_suite(const Options& options);

/// Scope is one of all, core, chow, closure, ffcount.
std::vector<report::Check> run(const std::string& scope, const Options& options);

}  // namespace dqp::verify
