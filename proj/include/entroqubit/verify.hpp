// Claim-by-claim verification suites behind `entroqubit verify`. Every row
// pins one checkable statement to a measured value and a tolerance; reports
// are deterministic for a fixed seed (no timestamps, ordered serialization).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entroqubit/core.hpp"
#include "entroqubit/json_io.hpp"

namespace entroqubit {

struct ClaimResult {
  std::string id;          // stable machine-readable claim tag
  bool pass = false;
  double measured = 0.0;   // headline number for the row
  double tolerance = 0.0;  // threshold the measurement is held to
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool all_pass() const;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  int grid = 0;  // 0 = per-suite defaults; otherwise scales the sweep sizes
  Tolerances tol;
};

// d2nogo, d3, d4, geometry, oracle
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

// `name` may be a single suite or "all"
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyConfig& cfg);

bool all_pass(const std::vector<SuiteReport>& reports);

Json verify_report_json(const std::vector<SuiteReport>& reports,
                        const VerifyConfig& cfg, const std::string& requested);

// columns: suite,claim,pass,measured,tolerance (header row included)
std::string verify_report_csv(const std::vector<SuiteReport>& reports);

}  // namespace entroqubit
