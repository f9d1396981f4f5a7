#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "majority/estimate.hpp"
#include "majority/lattice.hpp"
#include "majority/rng.hpp"

namespace majority::slice2d {

using Rational = boost::rational<std::int64_t>;

/// Rightmost 1 of rows -1, 0 and 1 of the left-filled strip |x2| <= 1.
struct SliceState {
  std::int64_t lower = 0;   // X(-1)
  std::int64_t middle = 0;  // X(0)
  std::int64_t upper = 0;   // X(1)

  std::int64_t front(int row) const;
  void set_front(int row, std::int64_t value);
  /// The middle front is never strictly behind both outer fronts.
  bool valid() const noexcept { return !(middle < lower && middle < upper); }
  int state(Coord c) const noexcept { return c.y >= -1 && c.y <= 1 && c.x <= front(static_cast<int>(c.y)); }

  friend bool operator==(const SliceState&, const SliceState&) = default;
};

/// (X(1) - X(0), X(-1) - X(0)) with the two outer rows identified, stored
/// with a <= b.
struct InterfaceState {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static InterfaceState canonical(std::int64_t x_plus, std::int64_t x_minus);
  /// Representative slice state with middle front at `middle`.
  SliceState representative(std::int64_t middle = 0) const { return {middle + b, middle, middle + a}; }

  friend auto operator<=>(const InterfaceState&, const InterfaceState&) = default;
};

struct SliceUpdate {
  Coord anchor;  // lower-left vertex of the 2x2 block
  SliceState successor;
  std::int64_t d_sigma = 0;
  std::int64_t d_gap = 0;
};

/// Every 2x2 block whose update changes the slice configuration, each at
/// rate 1. Ordered by anchor.
std::vector<SliceUpdate> active_updates(const SliceState& state);

std::int64_t sigma(const SliceState& state);
std::int64_t gap(const SliceState& state);
InterfaceState interface(const SliceState& state);

/// N = 1{|X+| != 1} + 1{|X-| != 1}.
int straight_count(const SliceState& state);

Rational drift_sigma(const SliceState& state);
/// PreconditionError when gap(state) < 2.
Rational drift_gap(const SliceState& state);

struct SlicePoint {
  double time = 0.0;
  SliceState state;
};

struct SliceTrajectory {
  double horizon = 0.0;
  std::vector<SlicePoint> points;
};

SliceTrajectory simulate_slice(double horizon, RngStream& rng, SliceState start = {});

/// Outflow of an interface, grouped by successor interface. Computed from
/// the catalog of the given representative.
std::vector<std::pair<InterfaceState, Rational>> interface_rates(const SliceState& representative);
std::vector<std::pair<InterfaceState, Rational>> interface_rates(const InterfaceState& iface);

enum class InterfaceKind { bad = -1, neutral = 0, good = 1 };
InterfaceKind classify(const InterfaceState& iface);

struct GoodTimeSample {
  double good_time = 0.0;
  bool capped = false;
};

/// One replica of the time spent on good interfaces (drift +2) before the
/// first visit to a bad one (drift -2), started from iface. time_cap bounds
/// the simulated time.
GoodTimeSample sample_good_time(const InterfaceState& iface, RngStream& rng, double time_cap);

struct GoodTimeEstimate {
  InterfaceState iface;
  Estimate estimate;
  std::size_t cap_hits = 0;
};

/// Monte Carlo e(a, b): replica r uses RngStream(seed, r).
GoodTimeEstimate estimate_good_time(const InterfaceState& iface, std::size_t replicas, std::uint64_t seed,
                                    double time_cap = 1.0e4, unsigned threads = 0);

}  // namespace majority::slice2d
