#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "majority/lattice.hpp"
#include "majority/rng.hpp"

namespace majority {

/// A family of independent rate-1 clocks ("sites") and what happens to the
/// configuration when one of them rings.
class UpdateRule {
 public:
  virtual ~UpdateRule() = default;

  virtual const Geometry& geometry() const noexcept = 0;
  virtual std::size_t site_count() const noexcept = 0;
  /// Lattice location of a site: the hyperedge anchor or the updated vertex.
  virtual Coord site(std::size_t k) const = 0;
  /// Whether apply() draws from the stream.
  virtual bool uses_randomness() const noexcept = 0;
  /// Applies the update of site k in place and returns the change in the
  /// number of 1s. A zero return means the configuration did not change.
  virtual std::int64_t apply(Configuration& config, std::size_t k, RngStream& rng) const = 0;
};

/// All vertices of the hyperedge adopt its majority opinion; ties go to 1.
class MajorityRule final : public UpdateRule {
 public:
  explicit MajorityRule(HyperedgeFamily family);
  MajorityRule(int n, const Geometry& geometry) : MajorityRule(HyperedgeFamily(n, geometry)) {}

  const HyperedgeFamily& family() const noexcept { return family_; }
  const Geometry& geometry() const noexcept override { return family_.geometry(); }
  std::size_t site_count() const noexcept override { return family_.anchor_count(); }
  Coord site(std::size_t k) const override { return family_.anchor(k); }
  bool uses_randomness() const noexcept override { return false; }
  std::int64_t apply(Configuration& config, std::size_t k, RngStream& rng) const override;

  /// In-place update of h_anchor.
  std::int64_t apply_at(Configuration& config, Coord anchor) const;

 private:
  std::int64_t apply_indices(Configuration& config, std::int64_t ax, std::int64_t ay) const;

  HyperedgeFamily family_;
  int threshold_;  // smallest count of 1s that makes the block all-1
};

/// Voter baseline on a torus: each vertex at rate 1 copies a uniformly chosen
/// nearest neighbour.
class VoterRule final : public UpdateRule {
 public:
  explicit VoterRule(Geometry torus);

  const Geometry& geometry() const noexcept override { return geometry_; }
  std::size_t site_count() const noexcept override { return geometry_.size(); }
  Coord site(std::size_t k) const override { return geometry_.coord(k); }
  bool uses_randomness() const noexcept override { return true; }
  std::int64_t apply(Configuration& config, std::size_t k, RngStream& rng) const override;

 private:
  Geometry geometry_;
};

Configuration majority_update(Configuration config, Coord anchor, const HyperedgeFamily& family);
Configuration voter_update(Configuration config, Coord vertex, RngStream& rng);

struct Event {
  double time = 0.0;
  std::size_t site = 0;
};

/// Time-ordered Poisson events of M independent rate-1 clocks on (0, horizon].
struct EventLog {
  std::size_t site_count = 0;
  double horizon = 0.0;
  std::vector<Event> events;
};

/// Draws the next (gap, site) pair of the superposed clocks. Shared by
/// generate_event_log and Simulation so both consume a stream identically.
Event next_event(double now, std::size_t site_count, RngStream& rng);

EventLog generate_event_log(std::size_t site_count, double horizon, RngStream& rng);

/// CSV dump "time,anchor_x[,anchor_y]" with round-trip precision.
std::string event_log_csv(const EventLog& log, const UpdateRule& rule);

struct ChangePoint {
  double time = 0.0;
  Configuration config;
};

/// Change points only; the first entry is (0, initial configuration).
struct Trajectory {
  double horizon = 0.0;
  std::vector<ChangePoint> points;

  const Configuration& at(double t) const;
};

/// Applies the rule at every logged event in time order. Rules that draw
/// randomness take it from rng, which is then required.
Trajectory replay_forward(const Configuration& config0, const EventLog& log, const UpdateRule& rule,
                          RngStream* rng = nullptr);

/// Streaming simulator. The next event is drawn ahead of time and kept
/// pending across calls, so advancing to t1 and then to t2 is identical to
/// advancing straight to t2.
class Simulation {
 public:
  Simulation(Configuration config, const UpdateRule& rule, RngStream rng);

  double time() const noexcept { return time_; }
  const Configuration& config() const noexcept { return config_; }
  std::int64_t ones() const noexcept { return ones_; }
  std::uint64_t events() const noexcept { return events_; }

  /// Runs every event with time <= horizon; time() becomes horizon.
  void advance_to(double horizon);

  /// Like advance_to, but after each state change calls stop(*this) and
  /// returns early when it yields true; time() is then the event time.
  bool advance_until(double horizon, const std::function<bool(const Simulation&)>& stop);

 private:
  Configuration config_;
  const UpdateRule* rule_;
  RngStream rng_;
  Event pending_;
  double time_ = 0.0;
  std::int64_t ones_ = 0;
  std::uint64_t events_ = 0;
};

struct Sample {
  double requested_time = 0.0;
  double time = 0.0;
  bool out_of_range = false;  // requested time outside [0, T]; the state at T is reported
  const Configuration* config = nullptr;
};

struct Observer {
  std::vector<double> times;
  std::function<void(const Sample&)> on_sample;
};

/// Runs config0 to time T. Observers are called in time order; requests
/// outside [0, T] get the final configuration with out_of_range set.
Configuration run(const Configuration& config0, const UpdateRule& rule, double horizon, RngStream rng,
                  const std::vector<Observer>& observers = {});

/// Bernoulli(p) product configuration.
Configuration bernoulli_configuration(const Geometry& geometry, double p, RngStream& rng);

enum class Model { majority, voter };

std::unique_ptr<UpdateRule> make_rule(Model model, int n, const Geometry& geometry);

}  // namespace majority
