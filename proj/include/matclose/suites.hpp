#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matclose/report.hpp"

namespace matclose {

struct SuiteConfig {
  std::string suite;
  std::string ring = "GF(2)";
  std::size_t n = 2;
  std::size_t levels = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::size_t depth = 3;
  std::size_t rmax = 2;
  std::size_t smax = 2;
  std::string module;   ///< module DSL; empty means the regular module
  std::string module2;  ///< second summand for the coproduct check; empty means `module`
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<Record> records;  ///< sorted by check id, then level
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;
  std::size_t vacuous = 0;

  /// 0 when nothing failed or stayed undecided, 1 on failure, 2 when only
  /// undecided records remain.
  int exit_code() const;
};

struct SuiteInfo {
  std::string name;
  std::string statement;
};

/// One row per suite.
const std::vector<SuiteInfo>& list_suites();

/// Z/4, Z/6, GF(2), GF(3), GF(2)xZ/3, GF(2)[C2], M2(GF(2)).
const std::vector<std::string>& default_zoo();

/// Runs one suite. Deterministic given the config. Throws ParseError for bad
/// ring or module specs and DomainError for unknown suites or a zero budget;
/// bounds hit while checking become undecided records.
SuiteReport run_suite(const SuiteConfig& config);

/// Line-oriented report. Lines starting with '#' carry timing and are not
/// part of the deterministic body.
std::string render_text(const SuiteReport& report, bool with_timing = true);

/// Body lines of a rendered report (comment lines dropped).
std::string report_body(const std::string& rendered);

/// JSON rendering; elapsed times only with `with_timing`.
std::string render_json(const SuiteReport& report, bool with_timing = false);

}  // namespace matclose
