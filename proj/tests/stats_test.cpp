#include <cmath>

#include "doctest.h"
#include "majority/errors.hpp"
#include "majority/stats.hpp"

using namespace majority;

TEST_CASE("Estimate") {
  const Estimate constant = Estimate::from_values({2.0, 2.0, 2.0, 2.0});
  CHECK(constant.mean == 2.0);
  CHECK(constant.std_err == 0.0);
  CHECK(constant.replicas == 4);
  CHECK(constant.values.size() == 4);

  const Estimate e = Estimate::from_values({1.0, 2.0, 3.0, 4.0}, false);
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.std_err == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(e.values.empty());

  CHECK(Estimate::from_values({7.0}).std_err == 0.0);
  CHECK(Estimate::from_values({}).replicas == 0);
}

TEST_CASE("density") {
  const Geometry g = Geometry::torus(2, 6);
  Configuration c(g);
  CHECK(density(c) == 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Coord p = g.coord(i);
    c.set_index(i, (p.x + p.y) % 2);
  }
  CHECK(density(c) == 0.5);
  for (std::size_t i = 0; i < g.size(); ++i) c.set_index(i, 1);
  CHECK(density(c) == 1.0);
}

TEST_CASE("occupation time") {
  const Geometry g = Geometry::window(1, {0, 0}, 3);
  Configuration zero(g);
  Configuration one = set_block(zero, {{0, 0}, 3, 1}, 1);
  CHECK(occupation_time(Trajectory{4.0, {{0.0, one}}}, {1, 0}) == 1.0);
  CHECK(occupation_time(Trajectory{4.0, {{0.0, zero}}}, {1, 0}) == 0.0);
  CHECK(occupation_time(Trajectory{4.0, {{0.0, one}, {2.0, zero}}}, {1, 0}) == 0.5);
  CHECK(occupation_time(Trajectory{4.0, {{0.0, zero}, {1.0, one}, {2.0, zero}, {3.0, one}}}, {0, 0}) == 0.5);
}

TEST_CASE("disagreement probability: trivial cases") {
  DisagreementSpec spec;
  spec.pair_dist = 0;
  spec.times = {0.0, 5.0};
  spec.replicas = 10;
  for (const Estimate& e : disagreement_probability(spec)) {
    CHECK(e.mean == 0.0);
    CHECK(e.std_err == 0.0);
  }

  spec.pair_dist = 3;
  spec.times = {0.0};
  spec.replicas = 200;
  const Estimate start = disagreement_probability(spec).front();
  CHECK(std::abs(start.mean - 0.5) <= 3.0 * start.std_err);
  CHECK(disagreement_side(spec) == 200);
  spec.pair_dist = 15;
  CHECK(disagreement_side(spec) == 300);
}

TEST_CASE("disagreement probability decreases for n = 3 in 1D") {
  DisagreementSpec spec;
  spec.dim = 1;
  spec.n = 3;
  spec.pair_dist = 1;
  spec.times = {100.0, 10.0};  // any order
  spec.replicas = 200;
  spec.seed = 4;
  const auto est = disagreement_probability(spec);
  CHECK(est[0].mean + 2.0 * std::hypot(est[0].std_err, est[1].std_err) < est[1].mean);

  spec.threads = 3;
  const auto again = disagreement_probability(spec);
  CHECK(again[0].mean == est[0].mean);
  CHECK(again[1].mean == est[1].mean);
}

TEST_CASE("voter disagreement runs on the same engine") {
  DisagreementSpec spec;
  spec.model = Model::voter;
  spec.dim = 2;
  spec.pair_dist = 1;
  spec.side = 30;
  spec.times = {0.0, 5.0};
  spec.replicas = 20;
  const auto est = disagreement_probability(spec);
  CHECK(est[1].mean < est[0].mean);
}

TEST_CASE("extinction of a single vertex is an Exp(9) race") {
  ExtinctionSpec spec;
  spec.m = 1;
  spec.replicas = 10000;
  spec.seed = 3;
  const ExtinctionResult res = extinction_time(spec);
  CHECK(res.n0 == 1);
  CHECK(res.boundary_flags == 0);
  CHECK(res.horizon_flags == 0);
  CHECK(std::abs(res.estimate.mean - 1.0 / 9.0) <= 3.0 * res.estimate.std_err);
}

TEST_CASE("extinction flags") {
  ExtinctionSpec spec;
  spec.m = 6;
  spec.margin = 0;  // the square fills the window: any growth touches the ring
  spec.replicas = 1;
  spec.time_cap = 1e-12;
  CHECK(extinction_sample(spec, 0).flag == ExtinctionFlag::horizon);
  CHECK(std::string(to_string(ExtinctionFlag::boundary)) == "boundary");

  spec.m = 3;
  spec.margin = 1;
  spec.time_cap = 1000;
  spec.replicas = 200;
  // A 3 x 3 square with a one-cell margin grows into the ring as soon as a
  // block with 5 or more 1s next to the edge fires.
  const ExtinctionResult res = extinction_time(spec);
  CHECK(res.boundary_flags > 0);
  CHECK(res.boundary_flags + res.horizon_flags + res.estimate.replicas == 200);

  ExtinctionSpec bad;
  bad.m = 0;
  CHECK_THROWS_AS(extinction_time(bad), InvalidArgument);
}

TEST_CASE("extinction is deterministic across thread counts") {
  ExtinctionSpec spec;
  spec.m = 5;
  spec.replicas = 16;
  spec.threads = 1;
  const ExtinctionResult a = extinction_time(spec);
  spec.threads = 4;
  const ExtinctionResult b = extinction_time(spec);
  for (std::size_t r = 0; r < 16; ++r) CHECK(a.samples[r].time == b.samples[r].time);
}
