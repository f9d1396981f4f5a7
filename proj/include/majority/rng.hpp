#pragma once

#include <cstdint>
#include <random>

namespace majority {

/// Per-replica random stream. A (seed, replica) pair always yields the same
/// sequence; the conversions below are written out by hand so that streams are
/// identical across standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t replica = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t replica() const noexcept { return replica_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform_open();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Exponential variate with the given rate; strictly positive.
  double exponential(double rate);

  bool bernoulli(double p) { return uniform_open() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t replica_;
  std::mt19937_64 engine_;
};

}  // namespace majority
