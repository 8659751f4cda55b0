#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invconn/cli/json_io.hpp"
#include "invconn/types.hpp"

namespace invconn::cli {

enum class Command {
  Canonicalize,
  Chart,
  Classify,
  Equiv,
  SolveBasis,
  AxialCanonical,
  Su2Modulus,
  IsoModulus,
  Sample,
  Selftest,
};

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name);
const std::vector<Command>& all_commands();

struct CommandRequest {
  Command command = Command::Canonicalize;
  Json payload = Json::object();
  ToleranceConfig cfg;
  std::uint64_t seed = 0;
};

enum class Failure { None, Domain, Parse };

/// Outcome of one command. On error, data holds {"code", "message"}.
struct ResultRecord {
  Failure failure = Failure::None;
  Json data = Json::object();
  std::vector<std::string> diagnostics;

  bool ok() const { return failure == Failure::None; }
  int exit_code() const { return failure == Failure::None ? 0 : failure == Failure::Domain ? 1 : 2; }

  static ResultRecord success(Json data, std::vector<std::string> diagnostics = {});
  static ResultRecord error(Failure kind, std::string code, std::string message,
                            std::vector<std::string> diagnostics = {});

  Json to_json() const;
  // Inverse of to_json; throws ParseError on a malformed record.
  static ResultRecord from_json(const Json& j);

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Never throws: every failure is reported in the record.
ResultRecord execute(const CommandRequest& req);

// "name=value" with the value written like any other serialized float.
std::string diag(std::string_view name, double value);

}  // namespace invconn::cli
