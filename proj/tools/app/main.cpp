#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "invconn/cli/batch.hpp"
#include "invconn/cli/command.hpp"
#include "invconn/cli/selftest.hpp"

namespace cli = invconn::cli;

namespace {

constexpr int kUsage = 2;

int emit(const cli::ResultRecord& r) {
  std::cout << cli::serialize(r.to_json()) << '\n';
  return r.exit_code();
}

// Reads a whole JSON document from a file, or from stdin for "-".
bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify homogeneous connections on 3-dimensional homogeneous spaces."};
  app.require_subcommand(1);
  app.fallthrough();

  invconn::ToleranceConfig cfg;
  std::uint64_t seed = 0;
  app.add_option("--tol", cfg.eps_eq, "Relative tolerance for equality of canonical forms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for sampling and selftest")->capture_default_str();

  std::string input = "-";
  for (cli::Command c : cli::all_commands()) {
    if (c == cli::Command::Sample || c == cli::Command::Selftest) continue;
    auto* sub = app.add_subcommand(std::string(cli::to_string(c)), "Run " + std::string(cli::to_string(c)) +
                                                                       " on one JSON payload");
    sub->add_option("input", input, "JSON payload file, '-' for stdin")->capture_default_str();
  }

  std::string kind = "rotation";
  int count = 1;
  auto* sample = app.add_subcommand("sample", "Draw seeded samples");
  sample->add_option("--kind", kind, "rotation | unit_quaternion | gaussian_mat3")
      ->capture_default_str()
      ->check(CLI::IsMember({"rotation", "unit_quaternion", "gaussian_mat3"}));
  sample->add_option("--count", count, "Number of samples")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::string scale = "quick";
  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  selftest->add_option("--scale", scale, "quick (counts/100) | full")
      ->capture_default_str()
      ->check(CLI::IsMember({"quick", "full"}));

  std::string batch_command;
  std::string format = "json";
  unsigned jobs = 0;
  auto* batch = app.add_subcommand("batch", "Line-delimited records on stdin, one result line each on stdout");
  batch->add_option("--command", batch_command, "Command applied to every record")->required();
  batch->add_option("--format", format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  batch->add_option("--jobs", jobs, "Worker threads, 0 = all cores")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  if (batch->parsed()) {
    const auto command = cli::parse_command(batch_command);
    if (!command) {
      std::cerr << "unknown command '" << batch_command << "'\n";
      return kUsage;
    }
    cli::BatchOptions opts;
    opts.command = *command;
    opts.format = format == "csv" ? cli::InputFormat::Csv : cli::InputFormat::Json;
    opts.jobs = jobs;
    opts.cfg = cfg;
    opts.seed = seed;
    if (opts.format == cli::InputFormat::Csv && !cli::csv_supported(*command)) {
      std::cerr << "command '" << batch_command << "' has no CSV form\n";
      return kUsage;
    }
    std::ios::sync_with_stdio(false);
    return cli::run_batch(std::cin, std::cout, opts);
  }

  cli::CommandRequest req;
  req.cfg = cfg;
  req.seed = seed;
  if (sample->parsed()) {
    req.command = cli::Command::Sample;
    req.payload = {{"kind", kind}, {"count", count}};
    return emit(cli::execute(req));
  }
  if (selftest->parsed()) {
    req.command = cli::Command::Selftest;
    req.payload = {{"scale", scale}};
    return emit(cli::execute(req));
  }

  for (CLI::App* sub : app.get_subcommands()) {
    req.command = *cli::parse_command(sub->get_name());
  }
  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "cannot read '" << input << "'\n";
    return kUsage;
  }
  try {
    req.payload = cli::parse_json(text);
  } catch (const cli::ParseError& e) {
    return emit(cli::ResultRecord::error(cli::Failure::Parse, "ParseError", e.what()));
  }
  return emit(cli::execute(req));
}
