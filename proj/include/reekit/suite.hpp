#pragma once

// Verification suites: each check is exhaustive over GF(3) and sampled over
// larger fields, and yields one CheckReport.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reekit/field.hpp"
#include "reekit/geometry.hpp"

namespace reekit {

enum class SuiteName { all, hexagon, ovoid, geometry, identities };

/// Throws std::invalid_argument on an unknown name.
SuiteName parse_suite_name(const std::string& s);
const char* suite_name(SuiteName s);

struct CheckReport {
  std::string name;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  bool pass = false;
  std::string witness;  // export syntax; empty on pass
  std::string detail;
  double seconds = 0.0;

  /// "exhaustive" or "sampled(seed=S,trials=T)".
  std::string scope() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  /// 0 = REEKIT_THREADS or the hardware concurrency.
  unsigned threads = 0;
  /// Blocks read from a file; adds a validation check to the geometry suite.
  std::shared_ptr<const std::vector<Block>> imported_blocks;
};

/// Names of the checks a suite runs for this field, in report order.
std::vector<std::string> suite_checks(SuiteName suite, const Field& field,
                                      const SuiteOptions& options = {});

/// Runs the checks concurrently; the result order is the registry order.
std::vector<CheckReport> run_suite(SuiteName suite, const Field& field,
                                   const SuiteOptions& options = {});
/// Runs the named checks only (unknown names throw std::invalid_argument).
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const Field& field,
                                    const SuiteOptions& options = {});

/// REEKIT_THREADS if set to a positive integer, else the hardware concurrency.
unsigned thread_limit();

/// One line per check; times only when `timings` is set so that reports are
/// byte-identical across runs.
std::string format_text(const std::vector<CheckReport>& reports, bool timings = false);
std::string format_json(const std::vector<CheckReport>& reports, const Field& field,
                        bool timings = false);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace reekit
