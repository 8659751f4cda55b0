#include "invconn/cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

namespace invconn::cli {
namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t end = std::min(line.find(',', pos), line.size());
    const std::string field = line.substr(pos, end - pos);
    const char* begin = field.c_str();
    char* stop = nullptr;
    const double x = std::strtod(begin, &stop);
    if (stop == begin || !blank(std::string(stop)) || !std::isfinite(x)) {
      throw ParseError("malformed CSV field '" + field + "'");
    }
    out.push_back(x);
    pos = end + 1;
  }
  return out;
}

Json mat_at(const std::vector<double>& v, std::size_t offset) {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[offset + i];
  return to_json(m);
}

ResultRecord process(const std::string& line, const BatchOptions& opts) {
  CommandRequest req{opts.command, Json::object(), opts.cfg, opts.seed};
  try {
    req.payload = opts.format == InputFormat::Csv ? csv_payload(opts.command, line) : parse_json(line);
  } catch (const ParseError& e) {
    return ResultRecord::error(Failure::Parse, "ParseError", e.what());
  }
  return execute(req);
}

}  // namespace

bool csv_supported(Command command) {
  switch (command) {
    case Command::SolveBasis:
    case Command::Sample:
    case Command::Selftest: return false;
    default: return true;
  }
}

Json csv_payload(Command command, const std::string& line) {
  const std::vector<double> v = split_numbers(line);
  const auto need = [&](std::size_t n) {
    if (v.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " CSV fields, got " + std::to_string(v.size()));
    }
  };
  switch (command) {
    case Command::Canonicalize: need(9); return {{"case", "bianchi"}, {"matrix", mat_at(v, 0)}};
    case Command::Chart:
    case Command::IsoModulus: need(9); return {{"matrix", mat_at(v, 0)}};
    case Command::Classify:
      if (v.size() == 9) return {{"matrix", mat_at(v, 0)}};
      need(10);
      return {{"A", mat_at(v, 0)}, {"lambda", v[9]}};
    case Command::Equiv: need(18); return {{"M", mat_at(v, 0)}, {"N", mat_at(v, 9)}};
    case Command::Su2Modulus:
      need(10);
      if (v[0] != std::floor(v[0]) || std::abs(v[0]) > 1e6) throw ParseError("n must be an integer");
      return {{"n", static_cast<int>(v[0])}, {"matrix", mat_at(v, 1)}};
    case Command::AxialCanonical: need(3); return {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}};
    default: throw ParseError("command '" + std::string(to_string(command)) + "' has no CSV form");
  }
}

BatchResult run_batch(const std::vector<std::string>& input, const BatchOptions& opts) {
  std::vector<const std::string*> records;
  for (const std::string& line : input) {
    if (!blank(line)) records.push_back(&line);
  }
  BatchResult result;
  result.lines.resize(records.size());
  std::vector<char> failed(records.size(), 0);

  unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(records.size(), 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      const ResultRecord r = process(*records[i], opts);
      result.lines[i] = serialize(r.to_json());
      failed[i] = !r.ok();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.any_failed = std::find(failed.begin(), failed.end(), 1) != failed.end();
  return result;
}

int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opts) {
  std::vector<std::string> input;
  for (std::string line; std::getline(in, line);) input.push_back(std::move(line));
  const BatchResult r = run_batch(input, opts);
  for (const std::string& l : r.lines) out << l << '\n';
  out.flush();
  return r.exit_code();
}

}  // namespace invconn::cli
