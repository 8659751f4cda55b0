#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "invconn/types.hpp"

namespace invconn {

/// Counter-based generator: draw k of stream (seed, stream) is a pure function
/// of (seed, stream, k), so independent streams can be consumed from any
/// thread without coordination.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // Uniform on (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  std::uint64_t counter() const { return counter_; }

  Vec3 normal_vec3();
  Mat3 gaussian_mat3();
  SU2Element unit_quaternion();
  SO3Element rotation();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

enum class SampleKind { Rotation, UnitQuaternion, GaussianMat3 };

std::string_view to_string(SampleKind kind) noexcept;
// Throws InvalidArgument for unknown names.
SampleKind parse_sample_kind(std::string_view name);

using SampleSet = std::variant<std::vector<SO3Element>, std::vector<SU2Element>, std::vector<Mat3>>;

// Deterministic in (kind, seed, count); sample i only depends on (seed, i).
SampleSet sample(SampleKind kind, std::uint64_t seed, std::size_t count);

}  // namespace invconn
