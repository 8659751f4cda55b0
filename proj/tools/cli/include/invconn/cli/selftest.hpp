#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invconn/cli/json_io.hpp"

namespace invconn::cli {

enum class Scale { Quick, Full };

std::optional<Scale> parse_scale(std::string_view name);

/// One invariant suite. A suite passes when it has no failures; `worst` is the
/// largest residual seen and `threshold` the bound it was held to (for
/// counting suites both are failure counts).
struct SuiteResult {
  std::string name;
  int criterion = 0;  // acceptance criterion number, 0 for module-only suites
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::vector<std::string> notes;

  Json to_json() const;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

// Sample count for a suite whose full-scale count is `full`; quick is full/100.
std::size_t scaled(std::size_t full, Scale scale);

// Acceptance criteria 1 through 11, in order.
std::vector<SuiteResult> acceptance_suites(std::uint64_t seed, Scale scale);
SuiteResult acceptance_criterion(int number, std::uint64_t seed, Scale scale);

// Module invariant suites not covered by a numbered criterion.
std::vector<SuiteResult> module_suites(std::uint64_t seed, Scale scale);

// Module suites followed by the acceptance criteria.
SelftestReport run_selftest(std::uint64_t seed, Scale scale);

}  // namespace invconn::cli
