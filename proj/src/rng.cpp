#include "driftbound/rng.hpp"

#include <cmath>
#include <numbers>

namespace driftbound {

namespace {
constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += kGolden64;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : gen_(mix64(master_seed + (stream_index + 1) * kGolden64)) {}

double RngStream::uniform() {
  // 53 high bits, offset by half an ulp: strictly inside (0, 1), so log() of
  // the result is always finite.
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace driftbound
