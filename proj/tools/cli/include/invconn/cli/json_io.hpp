#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "invconn/types.hpp"

namespace invconn::cli {

using Json = nlohmann::json;

// Malformed input or payload schema mismatch (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compact JSON with sorted object keys and every float written with 17
// significant digits; non-finite floats become null.
std::string serialize(const Json& value);

// Throws ParseError on malformed text.
Json parse_json(std::string_view text);

Json to_json(const Vec3& v);
Json to_json(const Mat3& m);  // row-major nested arrays
Json to_json(const SU2Element& q);  // [w, x, y, z]

// Field accessors; throw ParseError naming the field on absence or type mismatch.
const Json& require(const Json& obj, const std::string& key);
double get_number(const Json& obj, const std::string& key);
int get_int(const Json& obj, const std::string& key);
std::string get_string(const Json& obj, const std::string& key);
Mat3 get_mat3(const Json& obj, const std::string& key);

Mat3 mat3_from_json(const Json& value, const std::string& what);

}  // namespace invconn::cli
