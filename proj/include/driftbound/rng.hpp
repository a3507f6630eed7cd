#pragma once

#include <cstdint>
#include <random>

namespace driftbound {

// SplitMix64 finalizer. Bijective on 64-bit integers, used to decorrelate
// consecutive seed values before they reach the generator.
std::uint64_t mix64(std::uint64_t z) noexcept;

// One reproducible random stream. Stream i is seeded from
// mix64(master_seed + (i + 1) * golden64), so replications can each own a
// stream index and be run in any order and on any number of threads while
// producing identical draws.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  // Uniform on the open interval (0, 1).
  double uniform();

  // Standard normal. Every call consumes exactly two uniforms (no caching of
  // the second Box-Muller value), so the stream position after k calls is the
  // same no matter how the results are used.
  double normal();

 private:
  std::mt19937_64 gen_;
};

}  // namespace driftbound
