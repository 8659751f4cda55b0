#include "invconn/random.hpp"

#include <cmath>
#include <string>

#include "invconn/lie.hpp"

namespace invconn {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGolden) ^ (stream * 0xD1B54A32D192ED03ULL + kGolden))) {}

std::uint64_t Rng::next_u64() { return mix64(key_ + kGolden * ++counter_); }

double Rng::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Vec3 Rng::normal_vec3() {
  const double x = normal();
  const double y = normal();
  const double z = normal();
  return {x, y, z};
}

Mat3 Rng::gaussian_mat3() {
  std::array<double, 9> a{};
  for (auto& x : a) x = normal();
  return Mat3(a);
}

SU2Element Rng::unit_quaternion() {
  for (;;) {
    const double w = normal();
    const double x = normal();
    const double y = normal();
    const double z = normal();
    if (w * w + x * x + y * y + z * z > 1e-12) return SU2Element::normalized(w, x, y, z);
  }
}

SO3Element Rng::rotation() { return covering_rho(unit_quaternion()); }

std::string_view to_string(SampleKind kind) noexcept {
  switch (kind) {
    case SampleKind::Rotation: return "rotation";
    case SampleKind::UnitQuaternion: return "unit_quaternion";
    case SampleKind::GaussianMat3: return "gaussian_mat3";
  }
  return "unknown";
}

SampleKind parse_sample_kind(std::string_view name) {
  if (name == "rotation") return SampleKind::Rotation;
  if (name == "unit_quaternion") return SampleKind::UnitQuaternion;
  if (name == "gaussian_mat3") return SampleKind::GaussianMat3;
  throw Error(ErrorCode::InvalidArgument, "unknown sample kind '" + std::string(name) + "'");
}

SampleSet sample(SampleKind kind, std::uint64_t seed, std::size_t count) {
  switch (kind) {
    case SampleKind::Rotation: {
      std::vector<SO3Element> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(Rng(seed, i).rotation());
      return out;
    }
    case SampleKind::UnitQuaternion: {
      std::vector<SU2Element> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(Rng(seed, i).unit_quaternion());
      return out;
    }
    case SampleKind::GaussianMat3: {
      std::vector<Mat3> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(Rng(seed, i).gaussian_mat3());
      return out;
    }
  }
  return std::vector<Mat3>{};
}

}  // namespace invconn
