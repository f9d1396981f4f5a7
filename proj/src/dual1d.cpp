#include "majority/dual1d.hpp"

#include <algorithm>
#include <cmath>

#include "majority/errors.hpp"

namespace majority::dual1d {

namespace {

void require_segment(const HyperedgeFamily& family) {
  if (family.geometry().dim() != 1 || family.geometry().periodic())
    throw InvalidArgument("one-dimensional analysis needs a zero-padded segment");
}

// Every hyperedge that could contain position p exists in the segment.
bool fully_covered(const HyperedgeFamily& family, std::int64_t p) {
  return family.has_anchor({p - family.n() + 1, 0}) && family.has_anchor({p, 0});
}

}  // namespace

std::vector<FrontJump> front_increments(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("front increments are defined for even n >= 2");
  std::vector<FrontJump> out;
  for (std::int64_t k = 1; k <= n; ++k) out.push_back({*front_jump(n, 0, 1 - k), 1.0});
  std::sort(out.begin(), out.end(), [](const FrontJump& a, const FrontJump& b) { return a.size < b.size; });
  return out;
}

std::optional<std::int64_t> front_jump(int n, std::int64_t front, std::int64_t anchor) {
  // k = number of 1s in h_anchor = x + {0..n-1} when everything left of the front is 1.
  const std::int64_t k = front - anchor + 1;
  if (k < 1 || k > n) return std::nullopt;
  if (2 * k >= n) return n - k;  // block becomes all 1: front moves to anchor + n - 1
  return -k;                     // block becomes all 0: front moves to anchor - 1
}

FrontTrajectory simulate_front(int n, double horizon, RngStream& rng, std::int64_t start) {
  if (n < 2 || n % 2 != 0) throw DomainError("the front process is defined for even n >= 2");
  if (!(horizon >= 0.0)) throw InvalidArgument("horizon must be non-negative");
  FrontTrajectory traj{horizon, {{0.0, start}}};
  std::int64_t x = start;
  double t = 0.0;
  for (;;) {
    t += rng.exponential(static_cast<double>(n));
    if (t > horizon) break;
    const auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    const std::int64_t j = *front_jump(n, x, x - k + 1);
    if (j != 0) {
      x += j;
      traj.points.push_back({t, x});
    }
  }
  return traj;
}

FrontTrajectory simulate_front(const HyperedgeFamily& family, const EventLog& log, std::int64_t start) {
  require_segment(family);
  if (log.site_count != family.anchor_count()) throw InvalidArgument("event log does not match the segment");
  FrontTrajectory traj{log.horizon, {{0.0, start}}};
  std::int64_t x = start;
  if (!fully_covered(family, x)) throw TruncationError("front starts at the segment boundary");
  for (const Event& e : log.events) {
    const auto j = front_jump(family.n(), x, family.anchor(e.site).x);
    if (!j || *j == 0) continue;
    x += *j;
    if (!fully_covered(family, x)) throw TruncationError("front reached the segment boundary");
    traj.points.push_back({e.time, x});
  }
  return traj;
}

std::int64_t CenterPath::position_at(double backward_time) const {
  std::int64_t p = start;
  for (const PathJump& j : jumps) {
    if (j.backward_time > backward_time) break;
    p = j.position;
  }
  return p;
}

CenterPath center_path(std::int64_t x, const EventLog& log, const HyperedgeFamily& family) {
  require_segment(family);
  const int n = family.n();
  if (n % 2 == 0) throw DomainError("center paths need odd n");
  if (!fully_covered(family, x)) throw TruncationError("center path starts at the segment boundary");
  const std::int64_t half = (n - 1) / 2;
  CenterPath path{x, log.horizon, {}};
  std::int64_t p = x;
  for (auto it = log.events.rbegin(); it != log.events.rend(); ++it) {
    const std::int64_t u = family.anchor(it->site).x;
    if (p < u || p > u + n - 1) continue;
    p = u + half;
    if (!fully_covered(family, p)) throw TruncationError("center path reached the segment boundary");
    path.jumps.push_back({log.horizon - it->time, p});
  }
  return path;
}

std::optional<double> meeting_time(std::int64_t x, std::int64_t y, const EventLog& log,
                                   const HyperedgeFamily& family) {
  require_segment(family);
  const int n = family.n();
  if (n % 2 == 0) throw DomainError("center paths need odd n");
  if (!fully_covered(family, x) || !fully_covered(family, y))
    throw TruncationError("center path starts at the segment boundary");
  if (x == y) return 0.0;
  const std::int64_t half = (n - 1) / 2;
  std::int64_t px = x, py = y;
  for (auto it = log.events.rbegin(); it != log.events.rend(); ++it) {
    const std::int64_t u = family.anchor(it->site).x;
    const bool hit_x = px >= u && px <= u + n - 1;
    const bool hit_y = py >= u && py <= u + n - 1;
    if (!hit_x && !hit_y) continue;
    if (hit_x) px = u + half;
    if (hit_y) py = u + half;
    if (!fully_covered(family, px) || !fully_covered(family, py))
      throw TruncationError("center path reached the segment boundary");
    if (px == py) return log.horizon - it->time;
  }
  return std::nullopt;
}

bool dependence_truncated(std::int64_t x, std::int64_t y, const EventLog& log, const HyperedgeFamily& family) {
  require_segment(family);
  const int n = family.n();
  std::int64_t lo[2] = {x, y}, hi[2] = {x, y};
  for (int i = 0; i < 2; ++i)
    if (!fully_covered(family, lo[i])) return true;
  for (auto it = log.events.rbegin(); it != log.events.rend(); ++it) {
    const std::int64_t u = family.anchor(it->site).x;
    for (int i = 0; i < 2; ++i) {
      if (u + n - 1 < lo[i] || u > hi[i]) continue;
      lo[i] = std::min(lo[i], u);
      hi[i] = std::max(hi[i], u + n - 1);
      if (!fully_covered(family, lo[i]) || !fully_covered(family, hi[i])) return true;
    }
  }
  return false;
}

CouplingVerdict coupling_verdict(const Configuration& final_config, std::int64_t x, std::int64_t y,
                                 const EventLog& log, const HyperedgeFamily& family) {
  CouplingVerdict v;
  if (dependence_truncated(x, y, log, family)) {
    v.truncated = true;
    return v;
  }
  v.meeting = meeting_time(x, y, log, family);
  v.eta_x = final_config.get({x, 0});
  v.eta_y = final_config.get({y, 0});
  v.violated = v.meeting && *v.meeting < log.horizon && v.eta_x != v.eta_y;
  return v;
}

CouplingVerdict coupling_check(const Configuration& config0, std::int64_t x, std::int64_t y, const EventLog& log,
                               const HyperedgeFamily& family) {
  require_segment(family);
  if (family.n() % 2 == 0) throw DomainError("the coupling check needs odd n");
  const MajorityRule rule(family);
  Configuration current = config0;
  RngStream unused(0);
  for (const Event& e : log.events) rule.apply(current, e.site, unused);
  return coupling_verdict(current, x, y, log, family);
}

std::int64_t segment_half_width(std::int64_t distance, int n, double horizon) {
  return (std::abs(distance) + 1) / 2 + 8 * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(std::ceil(horizon));
}

}  // namespace majority::dual1d
