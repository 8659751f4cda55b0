#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "invconn/cli/command.hpp"

namespace invconn::cli {

enum class InputFormat { Json, Csv };

struct BatchOptions {
  Command command = Command::Canonicalize;
  InputFormat format = InputFormat::Json;
  unsigned jobs = 1;  // 0 = hardware concurrency
  ToleranceConfig cfg;
  std::uint64_t seed = 0;
};

struct BatchResult {
  std::vector<std::string> lines;  // one serialized record per input record
  bool any_failed = false;

  int exit_code() const { return any_failed ? 1 : 0; }
};

/// CSV records are comma-separated numbers, row-major:
///   canonicalize, chart, classify, iso-modulus: 9 (a matrix)
///   classify: 10 (A then lambda) is also accepted
///   equiv: 18 (M then N)
///   su2-modulus: 10 (n then the matrix)
///   axial-canonical: 3 (a, b, c)
/// Throws ParseError for malformed lines; the batch driver reports those inline.
Json csv_payload(Command command, const std::string& line);

// True if the command accepts CSV records.
bool csv_supported(Command command);

// Blank lines are skipped; every other line yields exactly one output line, in
// input order regardless of the number of jobs.
BatchResult run_batch(const std::vector<std::string>& input, const BatchOptions& opts);
int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opts);

}  // namespace invconn::cli
