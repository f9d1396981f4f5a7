#include "majority/stats.hpp"

#include <algorithm>
#include <cmath>

#include "majority/errors.hpp"
#include "majority/parallel.hpp"

namespace majority {

Estimate Estimate::from_values(std::vector<double> values, bool keep_values) {
  Estimate e;
  e.replicas = values.size();
  if (values.empty()) return e;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    const double n = static_cast<double>(values.size());
    e.std_err = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  if (keep_values) e.values = std::move(values);
  return e;
}

double density(const Configuration& config) {
  const std::size_t size = config.geometry().size();
  if (size == 0) return 0.0;
  return static_cast<double>(config.count_ones()) / static_cast<double>(size);
}

double occupation_time(const Trajectory& trajectory, Coord vertex) {
  if (trajectory.points.empty()) throw PreconditionError("empty trajectory");
  const double horizon = trajectory.horizon;
  if (horizon <= 0.0) return trajectory.points.front().config.get(vertex);
  double ones = 0.0;
  for (std::size_t i = 0; i < trajectory.points.size(); ++i) {
    const double start = std::min(trajectory.points[i].time, horizon);
    const double end = i + 1 < trajectory.points.size() ? std::min(trajectory.points[i + 1].time, horizon) : horizon;
    if (trajectory.points[i].config.get(vertex)) ones += end - start;
  }
  return ones / horizon;
}

std::int64_t disagreement_side(const DisagreementSpec& spec) {
  if (spec.side > 0) return spec.side;
  return std::max<std::int64_t>(20 * std::abs(spec.pair_dist), 200);
}

std::vector<Estimate> disagreement_probability(const DisagreementSpec& spec) {
  if (spec.dim != 1 && spec.dim != 2) throw InvalidArgument("dimension must be 1 or 2");
  if (spec.replicas < 1) throw InvalidArgument("at least one replica is needed");
  for (double t : spec.times)
    if (!(t >= 0.0)) throw InvalidArgument("observation times must be non-negative");
  const std::size_t k = spec.times.size();
  if (spec.pair_dist == 0) {
    std::vector<Estimate> zero(k);
    for (auto& e : zero) e = Estimate::from_values(std::vector<double>(spec.replicas, 0.0), false);
    return zero;
  }
  const std::int64_t side = disagreement_side(spec);
  const Geometry geometry = Geometry::torus(spec.dim, side);
  const auto rule = make_rule(spec.model, spec.n, geometry);
  const double horizon = k ? *std::max_element(spec.times.begin(), spec.times.end()) : 0.0;

  std::vector<std::vector<double>> values(k, std::vector<double>(spec.replicas));
  parallel_for(spec.replicas, spec.threads, [&](std::size_t r) {
    RngStream rng(spec.seed, r);
    const Configuration start = bernoulli_configuration(geometry, 0.5, rng);
    // run() samples in time order; order[i] is the request behind the i-th sample.
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return spec.times[a] < spec.times[b]; });
    Observer obs;
    for (std::size_t i : order) obs.times.push_back(spec.times[i]);
    std::vector<double> sorted_values(k);
    std::size_t next = 0;
    obs.on_sample = [&](const Sample& s) {
      const Configuration& c = *s.config;
      std::size_t differ = 0;
      for (std::size_t i = 0; i < geometry.size(); ++i)
        differ += c.at_index(i) != c.get(geometry.coord(i) + Coord{spec.pair_dist, 0});
      sorted_values[next++] = static_cast<double>(differ) / static_cast<double>(geometry.size());
    };
    run(start, *rule, horizon, std::move(rng), {obs});
    for (std::size_t i = 0; i < k; ++i) values[order[i]][r] = sorted_values[i];
  });
  std::vector<Estimate> out;
  out.reserve(k);
  for (auto& v : values) out.push_back(Estimate::from_values(std::move(v), false));
  return out;
}

const char* to_string(ExtinctionFlag flag) {
  switch (flag) {
    case ExtinctionFlag::ok: return "ok";
    case ExtinctionFlag::boundary: return "boundary";
    case ExtinctionFlag::horizon: return "horizon";
  }
  return "?";
}

namespace {

void check_spec(const ExtinctionSpec& spec) {
  if (spec.m < 1) throw InvalidArgument("square side m must be at least 1");
  if (spec.n < 2) throw InvalidArgument("n must be at least 2");
  if (!(spec.time_cap > 0.0)) throw InvalidArgument("time cap must be positive");
}

std::int64_t margin_of(const ExtinctionSpec& spec) { return spec.margin < 0 ? 2 * spec.m : spec.margin; }

}  // namespace

ExtinctionSample extinction_sample(const ExtinctionSpec& spec, std::uint64_t replica) {
  check_spec(spec);
  const std::int64_t margin = margin_of(spec);
  const std::int64_t side = spec.m + 2 * margin;
  if (side < spec.n) throw InvalidArgument("window smaller than a hyperedge; increase the margin");
  const Geometry geometry = Geometry::window(2, {0, 0}, side, side);
  const MajorityRule rule(spec.n, geometry);
  Configuration config = set_block(Configuration(geometry), {{margin, margin}, spec.m, spec.m}, 1);
  std::int64_t ones = static_cast<std::int64_t>(config.count_ones());
  RngStream rng(spec.seed, replica);
  const std::size_t sites = rule.site_count();
  const std::int64_t last = side - spec.n;  // largest anchor coordinate
  double t = 0.0;
  while (ones > 0) {
    const Event e = next_event(t, sites, rng);
    if (e.time > spec.time_cap) return {spec.time_cap, ExtinctionFlag::horizon};
    t = e.time;
    const std::int64_t delta = rule.apply(config, e.site, rng);
    ones += delta;
    if (delta > 0) {
      // A block turned to 1s; it reaches the outer ring iff it sits against the window edge.
      const Coord a = rule.site(e.site);
      if (a.x == 0 || a.y == 0 || a.x == last || a.y == last) return {t, ExtinctionFlag::boundary};
    }
  }
  return {t, ExtinctionFlag::ok};
}

ExtinctionResult extinction_time(const ExtinctionSpec& spec) {
  check_spec(spec);
  ExtinctionResult out;
  out.m = spec.m;
  out.n0 = spec.m * spec.m;
  out.samples.resize(spec.replicas);
  parallel_for(spec.replicas, spec.threads, [&](std::size_t r) { out.samples[r] = extinction_sample(spec, r); });
  std::vector<double> ok;
  for (const ExtinctionSample& s : out.samples) {
    switch (s.flag) {
      case ExtinctionFlag::ok: ok.push_back(s.time); break;
      case ExtinctionFlag::boundary: ++out.boundary_flags; break;
      case ExtinctionFlag::horizon: ++out.horizon_flags; break;
    }
  }
  out.estimate = Estimate::from_values(std::move(ok), false);
  return out;
}

}  // namespace majority
