#include "invconn/cli/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace invconn::cli {
namespace {

void write(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        write(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      break;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string serialize(const Json& value) {
  std::string out;
  write(value, out);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 3; ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json to_json(const SU2Element& q) { return Json::array({q.w(), q.x(), q.y(), q.z()}); }

const Json& require(const Json& obj, const std::string& key) {
  if (!obj.is_object()) throw ParseError("payload must be a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + key + "'");
  return *it;
}

double get_number(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_number()) throw ParseError("field '" + key + "' must be a number");
  return v.get<double>();
}

int get_int(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) throw ParseError("field '" + key + "' must be an integer");
  const auto n = v.get<std::int64_t>();
  if (n < -1000000 || n > 1000000) throw ParseError("field '" + key + "' out of range");
  return static_cast<int>(n);
}

std::string get_string(const Json& obj, const std::string& key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) throw ParseError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

Mat3 mat3_from_json(const Json& value, const std::string& what) {
  const auto bad = [&] { return ParseError("'" + what + "' must be a 3x3 array of finite numbers"); };
  if (!value.is_array() || value.size() != 3) throw bad();
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    const Json& row = value[r];
    if (!row.is_array() || row.size() != 3) throw bad();
    for (std::size_t c = 0; c < 3; ++c) {
      if (!row[c].is_number()) throw bad();
      m(r, c) = row[c].get<double>();
      if (!std::isfinite(m(r, c))) throw bad();
    }
  }
  return m;
}

Mat3 get_mat3(const Json& obj, const std::string& key) { return mat3_from_json(require(obj, key), key); }

}  // namespace invconn::cli
