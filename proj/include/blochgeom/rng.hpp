#pragma once

#include <cstdint>
#include <random>

namespace blochgeom {

/// Master seed for an experiment or test run.
struct RngSeed {
  std::uint64_t value = 0;
};

/// SplitMix64 finalizer; used to decorrelate derived stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// A seeded sample stream (mt19937_64 engine).
///
/// Streams for independent tasks are derived from (seed, task index) so
/// results never depend on scheduling. Standard normals are produced by
/// the Marsaglia polar method written out here rather than
/// std::normal_distribution, so the sample stream is fixed by this code
/// alone and not by the standard library's choice of algorithm.
class RngStream {
 public:
  explicit RngStream(RngSeed seed);

  /// Independent child stream for task `index`.
  RngStream derive(std::uint64_t index) const;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double standard_normal();
  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace blochgeom
