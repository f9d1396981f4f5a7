#include "majority/dynamics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "majority/errors.hpp"

namespace majority {

MajorityRule::MajorityRule(HyperedgeFamily family)
    : family_(std::move(family)), threshold_((family_.block_size() + 1) / 2) {}

std::int64_t MajorityRule::apply(Configuration& config, std::size_t k, RngStream&) const {
  const Coord a = family_.anchor(k);
  return apply_indices(config, a.x, a.y);
}

std::int64_t MajorityRule::apply_at(Configuration& config, Coord anchor) const {
  if (!family_.has_anchor(anchor)) throw RangeError("no hyperedge anchored at " + to_string(anchor));
  const Coord a = family_.geometry().wrap(anchor);
  return apply_indices(config, a.x, a.y);
}

std::int64_t MajorityRule::apply_indices(Configuration& config, std::int64_t ax, std::int64_t ay) const {
  const Geometry& g = family_.geometry();
  const int n = family_.n();
  const int ny = g.dim() == 2 ? n : 1;
  const std::int64_t w = g.width();
  const std::int64_t h = g.height();
  auto& bits = config.bits();

  // Cell indices of the block; anchors of a window family never need wrapping.
  std::size_t cells[64];
  std::size_t* cell_buf = cells;
  std::vector<std::size_t> big;
  if (family_.block_size() > 64) {
    big.resize(static_cast<std::size_t>(family_.block_size()));
    cell_buf = big.data();
  }
  const std::int64_t x0 = ax - g.origin().x;
  const std::int64_t y0 = ay - g.origin().y;
  int count = 0;
  int k = 0;
  for (int dy = 0; dy < ny; ++dy) {
    std::int64_t y = y0 + dy;
    if (y >= h) y -= h;
    for (int dx = 0; dx < n; ++dx) {
      std::int64_t x = x0 + dx;
      if (x >= w) x -= w;
      const auto idx = static_cast<std::size_t>(y * w + x);
      cell_buf[k++] = idx;
      count += bits[idx];
    }
  }
  if (count >= threshold_) {
    for (int i = 0; i < k; ++i) bits[cell_buf[i]] = 1;
    return k - count;
  }
  for (int i = 0; i < k; ++i) bits[cell_buf[i]] = 0;
  return -count;
}

VoterRule::VoterRule(Geometry torus) : geometry_(torus) {
  if (!torus.periodic()) throw InvalidArgument("the voter baseline runs on a torus");
}

std::int64_t VoterRule::apply(Configuration& config, std::size_t k, RngStream& rng) const {
  const Coord v = geometry_.coord(k);
  const std::uint64_t choice = rng.below(geometry_.dim() == 2 ? 4 : 2);
  static constexpr Coord kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const Coord u = geometry_.wrap(v + kSteps[choice]);
  const int before = config.at_index(k);
  const int after = config.get(u);
  config.set_index(k, after);
  return after - before;
}

Configuration majority_update(Configuration config, Coord anchor, const HyperedgeFamily& family) {
  MajorityRule(family).apply_at(config, anchor);
  return config;
}

Configuration voter_update(Configuration config, Coord vertex, RngStream& rng) {
  const VoterRule rule(config.geometry());
  rule.apply(config, config.geometry().index(vertex), rng);
  return config;
}

Event next_event(double now, std::size_t site_count, RngStream& rng) {
  double t = now + rng.exponential(static_cast<double>(site_count));
  if (t <= now) t = std::nextafter(now, std::numeric_limits<double>::infinity());
  return {t, static_cast<std::size_t>(rng.below(site_count))};
}

EventLog generate_event_log(std::size_t site_count, double horizon, RngStream& rng) {
  if (site_count < 1) throw InvalidArgument("event log needs at least one clock");
  if (!(horizon >= 0.0)) throw InvalidArgument("horizon must be non-negative");
  EventLog log{site_count, horizon, {}};
  log.events.reserve(static_cast<std::size_t>(static_cast<double>(site_count) * horizon * 1.05) + 16);
  double t = 0.0;
  for (;;) {
    const Event e = next_event(t, site_count, rng);
    if (e.time > horizon) break;
    log.events.push_back(e);
    t = e.time;
  }
  return log;
}

std::string event_log_csv(const EventLog& log, const UpdateRule& rule) {
  const bool two_d = rule.geometry().dim() == 2;
  std::string out = two_d ? "time,anchor_x,anchor_y\n" : "time,anchor_x\n";
  char buf[64];
  for (const Event& e : log.events) {
    auto res = std::to_chars(buf, buf + sizeof buf, e.time);
    out.append(buf, res.ptr);
    const Coord a = rule.site(e.site);
    out += ',' + std::to_string(a.x);
    if (two_d) out += ',' + std::to_string(a.y);
    out += '\n';
  }
  return out;
}

const Configuration& Trajectory::at(double t) const {
  if (points.empty()) throw PreconditionError("empty trajectory");
  auto it = std::upper_bound(points.begin(), points.end(), t,
                             [](double value, const ChangePoint& p) { return value < p.time; });
  if (it == points.begin()) return points.front().config;
  return std::prev(it)->config;
}

Trajectory replay_forward(const Configuration& config0, const EventLog& log, const UpdateRule& rule,
                          RngStream* rng) {
  if (!(config0.geometry() == rule.geometry())) throw InvalidArgument("configuration and rule geometries differ");
  if (log.site_count != rule.site_count()) throw InvalidArgument("event log was drawn for a different site count");
  if (rule.uses_randomness() && rng == nullptr) throw InvalidArgument("this rule needs a random stream to replay");
  RngStream unused(0);
  RngStream& stream = rng ? *rng : unused;

  Trajectory traj{log.horizon, {{0.0, config0}}};
  Configuration current = config0;
  for (const Event& e : log.events) {
    if (rule.apply(current, e.site, stream) != 0) traj.points.push_back({e.time, current});
  }
  return traj;
}

Simulation::Simulation(Configuration config, const UpdateRule& rule, RngStream rng)
    : config_(std::move(config)), rule_(&rule), rng_(std::move(rng)) {
  if (!(config_.geometry() == rule.geometry())) throw InvalidArgument("configuration and rule geometries differ");
  ones_ = static_cast<std::int64_t>(config_.count_ones());
  pending_ = next_event(0.0, rule.site_count(), rng_);
}

void Simulation::advance_to(double horizon) {
  const std::size_t m = rule_->site_count();
  while (pending_.time <= horizon) {
    ones_ += rule_->apply(config_, pending_.site, rng_);
    ++events_;
    time_ = pending_.time;
    pending_ = next_event(time_, m, rng_);
  }
  time_ = std::max(time_, horizon);
}

bool Simulation::advance_until(double horizon, const std::function<bool(const Simulation&)>& stop) {
  const std::size_t m = rule_->site_count();
  while (pending_.time <= horizon) {
    const std::int64_t delta = rule_->apply(config_, pending_.site, rng_);
    ones_ += delta;
    ++events_;
    time_ = pending_.time;
    pending_ = next_event(time_, m, rng_);
    if (delta != 0 && stop(*this)) return true;
  }
  time_ = std::max(time_, horizon);
  return false;
}

Configuration run(const Configuration& config0, const UpdateRule& rule, double horizon, RngStream rng,
                  const std::vector<Observer>& observers) {
  if (!(horizon >= 0.0)) throw InvalidArgument("horizon must be non-negative");
  struct Request {
    double time;
    std::size_t observer;
  };
  std::vector<Request> inside, outside;
  for (std::size_t i = 0; i < observers.size(); ++i)
    for (double t : observers[i].times) (t >= 0.0 && t <= horizon ? inside : outside).push_back({t, i});
  std::stable_sort(inside.begin(), inside.end(), [](const Request& a, const Request& b) { return a.time < b.time; });

  Simulation sim(config0, rule, std::move(rng));
  for (const Request& r : inside) {
    sim.advance_to(r.time);
    if (observers[r.observer].on_sample) observers[r.observer].on_sample({r.time, r.time, false, &sim.config()});
  }
  sim.advance_to(horizon);
  for (const Request& r : outside)
    if (observers[r.observer].on_sample) observers[r.observer].on_sample({r.time, horizon, true, &sim.config()});
  return sim.config();
}

Configuration bernoulli_configuration(const Geometry& geometry, double p, RngStream& rng) {
  Configuration config(geometry);
  for (std::size_t i = 0; i < geometry.size(); ++i) config.set_index(i, rng.bernoulli(p));
  return config;
}

std::unique_ptr<UpdateRule> make_rule(Model model, int n, const Geometry& geometry) {
  if (model == Model::voter) return std::make_unique<VoterRule>(geometry);
  return std::make_unique<MajorityRule>(n, geometry);
}

}  // namespace majority
