#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "majority/dynamics.hpp"
#include "majority/estimate.hpp"
#include "majority/lattice.hpp"

namespace majority {

double density(const Configuration& config);

/// Time-weighted fraction of [0, horizon] the vertex spends in state 1.
double occupation_time(const Trajectory& trajectory, Coord vertex);

struct DisagreementSpec {
  Model model = Model::majority;
  int dim = 1;
  int n = 3;
  std::int64_t pair_dist = 1;  // y = x + pair_dist * e_1
  std::vector<double> times;
  std::size_t replicas = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  /// Torus side; 0 selects max(20 * pair_dist, 200).
  std::int64_t side = 0;
};

std::int64_t disagreement_side(const DisagreementSpec& spec);

/// P(eta_t(x) != eta_t(y)) from a Bernoulli(1/2) start on a torus, one
/// estimate per requested time. Each replica contributes the fraction of
/// disagreeing translates of the pair, which has the same mean by
/// translation invariance. pair_dist == 0 gives exactly 0.
std::vector<Estimate> disagreement_probability(const DisagreementSpec& spec);

enum class ExtinctionFlag { ok, boundary, horizon };

const char* to_string(ExtinctionFlag flag);

struct ExtinctionSample {
  double time = 0.0;  // extinction time, or the time the run was stopped
  ExtinctionFlag flag = ExtinctionFlag::ok;
};

struct ExtinctionSpec {
  std::int64_t m = 30;
  std::int64_t margin = -1;  // negative selects 2m
  int n = 3;
  std::size_t replicas = 100;
  std::uint64_t seed = 1;
  double time_cap = 1000.0;
  unsigned threads = 0;
};

struct ExtinctionResult {
  std::int64_t m = 0;
  std::int64_t n0 = 0;
  std::vector<ExtinctionSample> samples;  // by replica index
  Estimate estimate;                      // over replicas flagged ok
  std::size_t boundary_flags = 0;
  std::size_t horizon_flags = 0;
};

/// Extinction of an m x m square of 1s in a zero-padded window of side
/// m + 2 * margin. A replica is flagged when a 1 reaches the outer ring of
/// the window or when time_cap passes first.
ExtinctionResult extinction_time(const ExtinctionSpec& spec);

/// Runs one replica; exposed for tests.
ExtinctionSample extinction_sample(const ExtinctionSpec& spec, std::uint64_t replica);

}  // namespace majority
