#include "majority/rng.hpp"

#include <cmath>

#include "majority/errors.hpp"

namespace majority {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t replica) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replica), static_cast<std::uint32_t>(replica >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t replica)
    : seed_(seed), replica_(replica), engine_(seeded_engine(seed, replica)) {}

double RngStream::uniform_open() {
  // 52 random mantissa bits, shifted by half an ulp off zero.
  return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("RngStream::below: bound must be positive");
  // Rejection on the top of the range keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) throw InvalidArgument("RngStream::exponential: rate must be positive");
  return -std::log(uniform_open()) / rate;
}

}  // namespace majority
