#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "majority/contour2d.hpp"
#include "majority/dynamics.hpp"
#include "majority/lattice.hpp"

namespace majority::experiments {

/// CSV body (header line first) plus counters for the caller's exit status.
/// Summary lines, if any, are trailing '#' comments.
struct Output {
  std::string csv;
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::size_t flagged = 0;
};

struct Drift1dParams {
  int n = 2;
  double horizon = 1000.0;
  std::size_t replicas = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// n,T,replica,final_front
Output drift1d(const Drift1dParams& p);

struct Coupling1dParams {
  int n = 3;
  double horizon = 50.0;
  std::size_t replicas = 500;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  /// Replica r uses pair_dists[r % size].
  std::vector<std::int64_t> pair_dists = {1, 2, 3, 4, 5, 6};
  /// Attempts per replica before giving up on a truncation-free draw.
  int max_attempts = 20;
};

/// n,T,replica,S,eta_x,eta_y,violated,truncated. Truncated draws get their
/// own row and are re-drawn from the same stream; flagged counts them.
Output coupling1d(const Coupling1dParams& p);

struct SliceTableParams {
  std::int64_t radius = 6;  // |X+|, |X-| <= radius
};

/// a,b,drift_sigma,drift_gap,catalog_size over canonical interfaces.
/// violations counts ordered (X+, X-) pairs breaking either drift statement.
Output slice_table(const SliceTableParams& p);

struct SliceRunParams {
  double horizon = 1.0e4;
  std::size_t replicas = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// replica,T,X_lower,X_middle,X_upper,sigma,gap,max_gap
Output slice_run(const SliceRunParams& p);

struct SliceGoodTimeParams {
  std::size_t replicas = 10000;
  std::uint64_t seed = 1;
  double time_cap = 1.0e4;
  unsigned threads = 0;
};

/// a,b,e_estimate,std_err,replicas,cap_hits for the five interfaces with a
/// published lower bound. violations counts estimates below bound - 2 SE.
Output slice_goodtime(const SliceGoodTimeParams& p);

struct ExtinctionParams {
  std::vector<std::int64_t> m_list = {12, 20, 30};
  std::int64_t margin = -1;  // negative selects 2m
  int n = 3;
  std::size_t replicas = 100;
  std::uint64_t seed = 1;
  double time_cap = 1000.0;
  unsigned threads = 0;
};

/// m,N0,replica,extinction_time,flag
Output extinction(const ExtinctionParams& p);

struct ClusterStatsParams {
  Model model = Model::majority;
  int dim = 1;
  int n = 3;
  std::int64_t side = 0;  // 0 selects the default torus side
  std::vector<double> times = {10.0, 50.0, 100.0};
  std::vector<std::int64_t> pair_dists = {1};
  std::size_t replicas = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// t,pair_dist,estimate,std_err,replicas
Output cluster_stats(const ClusterStatsParams& p);

struct Theorem4Params {
  /// Grid files; when empty, `count` clusters are generated.
  std::vector<std::string> inputs;
  std::size_t count = 200;
  /// rectangle, staircase, random_orthoconvex, or mixed (cycles the three).
  std::string shape_class = "mixed";
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Cluster i of a generated corpus.
Configuration corpus_cluster(std::uint64_t seed, std::size_t index, const std::string& shape_class);

/// cluster_id,vertices,c_plus,c_minus,phi_sum,identity_holds ("na" when the
/// identity is not claimed). violations counts failures of claimed identities.
Output theorem4(const Theorem4Params& p);

struct SnapshotParams {
  Model model = Model::majority;
  int n = 3;
  std::int64_t side = 400;
  double horizon = 20.0;
  std::uint64_t seed = 1;
};

/// Final configuration of a Bernoulli(1/2) start on the 2D torus.
Configuration snapshot(const SnapshotParams& p);

/// Binary PGM (P5, 8-bit): state 0 is white, state 1 black; top row is the
/// highest y, as in grid text.
std::string pgm_bytes(const Configuration& config);

}  // namespace majority::experiments
