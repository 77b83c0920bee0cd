#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnc/json_io.hpp"

namespace cnc {

struct SuiteFailure {
  std::string descriptor;
  std::string expected;
  std::string actual;
};

struct VerifySuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  std::size_t inconclusive = 0;
  bool allows_inconclusive = false;
  std::vector<std::string> skipped;  // logged, not counted as cases
  double wall_seconds = 0;

  bool passed() const { return failures.empty() && inconclusive == 0; }
  /// 0 pass, 1 failures, 2 inconclusive only.
  int exit_code() const;
};

/// Known suite ids in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs one suite. `cases` sizes the random part of a suite; 0 picks the
/// suite's default. Deterministic in (id, seed, cases).
VerifySuiteReport run_suite(const std::string& id, std::uint64_t seed, std::size_t cases = 0);

/// Report JSON; the timing field is omitted when with_timing is false.
Json to_json(const VerifySuiteReport& r, bool with_timing = true);

/// Compact text like "{1: Z^3, 2: Z/2}"; "{}" when all groups vanish.
std::string describe(const HomologyResult& h);

}  // namespace cnc
