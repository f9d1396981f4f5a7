#include "majority/slice2d.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "majority/errors.hpp"
#include "majority/parallel.hpp"

namespace majority::slice2d {

std::int64_t SliceState::front(int row) const {
  switch (row) {
    case -1: return lower;
    case 0: return middle;
    case 1: return upper;
    default: throw RangeError("slice rows are -1, 0 and 1");
  }
}

void SliceState::set_front(int row, std::int64_t value) {
  switch (row) {
    case -1: lower = value; break;
    case 0: middle = value; break;
    case 1: upper = value; break;
    default: throw RangeError("slice rows are -1, 0 and 1");
  }
}

InterfaceState InterfaceState::canonical(std::int64_t x_plus, std::int64_t x_minus) {
  return {std::min(x_plus, x_minus), std::max(x_plus, x_minus)};
}

std::int64_t sigma(const SliceState& s) { return s.lower + s.middle + s.upper; }

std::int64_t gap(const SliceState& s) { return std::abs(s.upper - s.middle) + std::abs(s.lower - s.middle); }

InterfaceState interface(const SliceState& s) { return InterfaceState::canonical(s.upper - s.middle, s.lower - s.middle); }

int straight_count(const SliceState& s) {
  return static_cast<int>(std::abs(s.upper - s.middle) != 1) + static_cast<int>(std::abs(s.lower - s.middle) != 1);
}

std::vector<SliceUpdate> active_updates(const SliceState& state) {
  if (!state.valid()) throw PreconditionError("middle front behind both outer fronts");
  const std::int64_t lo = std::min({state.lower, state.middle, state.upper}) - 1;
  const std::int64_t hi = std::max({state.lower, state.middle, state.upper}) + 1;
  std::vector<SliceUpdate> out;
  for (int row = -2; row <= 1; ++row) {
    for (std::int64_t col = lo; col <= hi; ++col) {
      int ones = 0;
      for (int dy = 0; dy <= 1; ++dy)
        for (int dx = 0; dx <= 1; ++dx) ones += state.state({col + dx, row + dy});
      SliceState next = state;
      if (ones < 2) {
        if (ones == 0) continue;
        // Left-filled rows: the lone 1 is the front of its row, in column col.
        const int filled_row = state.state({col, row}) ? row : row + 1;
        next.set_front(filled_row, col - 1);
      } else {
        const bool inside = row == -1 || row == 0;
        if (!inside) continue;
        if (state.front(row) < col - 1 || state.front(row + 1) < col - 1) continue;
        next.set_front(row, std::max(state.front(row), col + 1));
        next.set_front(row + 1, std::max(state.front(row + 1), col + 1));
        if (next == state) continue;
      }
      out.push_back({{col, row}, next, sigma(next) - sigma(state), gap(next) - gap(state)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SliceUpdate& a, const SliceUpdate& b) { return a.anchor < b.anchor; });
  return out;
}

Rational drift_sigma(const SliceState& state) {
  Rational total(0);
  for (const SliceUpdate& u : active_updates(state)) total += Rational(u.d_sigma);
  return total;
}

Rational drift_gap(const SliceState& state) {
  if (gap(state) < 2) throw PreconditionError("the gap drift bound is stated for G >= 2");
  Rational total(0);
  for (const SliceUpdate& u : active_updates(state)) total += Rational(u.d_gap);
  return total;
}

SliceTrajectory simulate_slice(double horizon, RngStream& rng, SliceState start) {
  if (!(horizon >= 0.0)) throw InvalidArgument("horizon must be non-negative");
  if (!start.valid()) throw PreconditionError("middle front behind both outer fronts");
  SliceTrajectory traj{horizon, {{0.0, start}}};
  SliceState state = start;
  double t = 0.0;
  for (;;) {
    const auto catalog = active_updates(state);
    t += rng.exponential(static_cast<double>(catalog.size()));
    if (t > horizon) break;
    state = catalog[rng.below(catalog.size())].successor;
    traj.points.push_back({t, state});
  }
  return traj;
}

std::vector<std::pair<InterfaceState, Rational>> interface_rates(const SliceState& representative) {
  std::map<InterfaceState, Rational> grouped;
  for (const SliceUpdate& u : active_updates(representative)) grouped[interface(u.successor)] += Rational(1);
  return {grouped.begin(), grouped.end()};
}

std::vector<std::pair<InterfaceState, Rational>> interface_rates(const InterfaceState& iface) {
  return interface_rates(iface.representative());
}

InterfaceKind classify(const InterfaceState& iface) {
  switch (straight_count(iface.representative())) {
    case 0: return InterfaceKind::bad;
    case 2: return InterfaceKind::good;
    default: return InterfaceKind::neutral;
  }
}

GoodTimeSample sample_good_time(const InterfaceState& iface, RngStream& rng, double time_cap) {
  SliceState state = iface.representative();
  if (!state.valid()) throw PreconditionError("interface (" + std::to_string(iface.a) + ", " +
                                              std::to_string(iface.b) + ") has both outer fronts ahead");
  GoodTimeSample sample;
  if (straight_count(state) == 0) return sample;
  double t = 0.0;
  for (;;) {
    const auto catalog = active_updates(state);
    const double hold = rng.exponential(static_cast<double>(catalog.size()));
    const bool good = straight_count(state) == 2;
    if (t + hold >= time_cap) {
      if (good) sample.good_time += time_cap - t;
      sample.capped = true;
      return sample;
    }
    if (good) sample.good_time += hold;
    t += hold;
    state = catalog[rng.below(catalog.size())].successor;
    if (straight_count(state) == 0) return sample;
  }
}

GoodTimeEstimate estimate_good_time(const InterfaceState& iface, std::size_t replicas, std::uint64_t seed,
                                    double time_cap, unsigned threads) {
  std::vector<double> values(replicas);
  std::vector<char> capped(replicas, 0);
  parallel_for(replicas, threads, [&](std::size_t r) {
    RngStream rng(seed, r);
    const GoodTimeSample s = sample_good_time(iface, rng, time_cap);
    values[r] = s.good_time;
    capped[r] = s.capped;
  });
  GoodTimeEstimate out;
  out.iface = iface;
  out.cap_hits = static_cast<std::size_t>(std::count(capped.begin(), capped.end(), 1));
  out.estimate = Estimate::from_values(std::move(values), false);
  return out;
}

}  // namespace majority::slice2d
