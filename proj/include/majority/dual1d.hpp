#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majority/dynamics.hpp"
#include "majority/lattice.hpp"
#include "majority/rng.hpp"

namespace majority::dual1d {

struct FrontJump {
  std::int64_t size = 0;
  double rate = 1.0;
};

/// Jumps of the rightmost 1 of a left-filled configuration for even n: one
/// per hyperedge containing the front, each at rate 1. Throws DomainError
/// for odd n.
std::vector<FrontJump> front_increments(int n);

/// Effect of updating h_anchor on a left-filled configuration with rightmost
/// 1 at front. Empty when the hyperedge does not contain the front.
std::optional<std::int64_t> front_jump(int n, std::int64_t front, std::int64_t anchor);

struct FrontPoint {
  double time = 0.0;
  std::int64_t position = 0;
};

/// Change points of the front, starting with (0, start).
struct FrontTrajectory {
  double horizon = 0.0;
  std::vector<FrontPoint> points;

  std::int64_t final_position() const { return points.back().position; }
};

/// Abstract jump chain: Exp(n) holding times, uniform choice among the n
/// hyperedges containing the front.
FrontTrajectory simulate_front(int n, double horizon, RngStream& rng, std::int64_t start = 0);

/// The same chain driven by a graphical representation: only the logged
/// events whose hyperedge contains the current front move it.
FrontTrajectory simulate_front(const HyperedgeFamily& family, const EventLog& log, std::int64_t start = 0);

struct PathJump {
  double backward_time = 0.0;  // s = T - t
  std::int64_t position = 0;
};

/// Backward center path c_s(x, T). Positions are piecewise constant between
/// the recorded jumps.
struct CenterPath {
  std::int64_t start = 0;
  double horizon = 0.0;
  std::vector<PathJump> jumps;

  std::int64_t position_at(double backward_time) const;
};

/// Center path of (x, T) through the events of log, T = log.horizon. The
/// family must be a zero-padded segment with odd n; TruncationError if the
/// path comes within reach of the segment ends.
CenterPath center_path(std::int64_t x, const EventLog& log, const HyperedgeFamily& family);

/// S = inf{s > 0 : c_s(x, T) = c_s(y, T)}; 0 when x == y, empty when the
/// paths do not meet within [0, T].
std::optional<double> meeting_time(std::int64_t x, std::int64_t y, const EventLog& log,
                                   const HyperedgeFamily& family);

struct CouplingVerdict {
  std::optional<double> meeting;  // S
  int eta_x = 0;
  int eta_y = 0;
  bool violated = false;
  bool truncated = false;
};

/// True when the backward dependence interval of (x, T) or (y, T) reaches a
/// hyperedge that the segment clips.
bool dependence_truncated(std::int64_t x, std::int64_t y, const EventLog& log, const HyperedgeFamily& family);

/// Forward-replays config0 through log and compares with the center paths of
/// x and y. violated == (S < T and eta_T(x) != eta_T(y)). A truncated check
/// reports only the flag.
CouplingVerdict coupling_check(const Configuration& config0, std::int64_t x, std::int64_t y, const EventLog& log,
                               const HyperedgeFamily& family);

/// Same verdict from an already replayed final configuration.
CouplingVerdict coupling_verdict(const Configuration& final_config, std::int64_t x, std::int64_t y,
                                 const EventLog& log, const HyperedgeFamily& family);

/// Half-width of the segment used around a pair at distance |x - y|.
std::int64_t segment_half_width(std::int64_t distance, int n, double horizon);

}  // namespace majority::dual1d
