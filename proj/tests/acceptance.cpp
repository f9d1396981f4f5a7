// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "majority/contour2d.hpp"
#include "majority/dual1d.hpp"
#include "majority/dynamics.hpp"
#include "majority/experiments.hpp"
#include "majority/parallel.hpp"
#include "majority/slice2d.hpp"
#include "majority/stats.hpp"
#include "oracles.hpp"

using namespace majority;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

Verdict corner_identity() {
  const auto start = Clock::now();
  const std::size_t count = 200;
  std::vector<contour2d::Theorem4Report> reports(count);
  parallel_for(count, 0, [&](std::size_t i) {
    reports[i] = contour2d::check_theorem4(experiments::corpus_cluster(1, i, "mixed"));
  });
  std::size_t holds = 0, minus36 = 0, small = 0;
  for (const auto& r : reports) {
    holds += r.asserted && r.identity_holds;
    minus36 += r.phi_sum == -36;
    small += r.vertices < 11;
  }
  const double t = seconds_since(start);
  Verdict v;
  v.pass = holds == count && minus36 == count && small == 0 && t < 10.0;
  v.detail = std::to_string(holds) + "/" + std::to_string(count) + " identity, " + std::to_string(minus36) + "/" +
             std::to_string(count) + " equal -36, " + fmt(t) + " s";
  return v;
}

template <class Check>
Verdict exhaustive_slice(Check check, bool timed) {
  const auto start = Clock::now();
  std::size_t states = 0, violations = 0;
  for (std::int64_t xp = -6; xp <= 6; ++xp) {
    for (std::int64_t xm = -6; xm <= 6; ++xm) {
      const slice2d::SliceState s{xm, 0, xp};
      if (!s.valid()) continue;
      const int r = check(s, xp, xm);
      if (r < 0) continue;
      ++states;
      violations += r;
    }
  }
  const double t = seconds_since(start);
  Verdict v;
  v.pass = violations == 0 && states > 0 && (!timed || t < 1.0);
  v.detail = std::to_string(states) + " states, " + std::to_string(violations) + " violations, " + fmt(t) + " s";
  return v;
}

Verdict front_drift() {
  const auto start = Clock::now();
  Verdict v;
  for (int n : {2, 4, 6}) {
    const std::size_t replicas = 100;
    const double horizon = 2000.0;
    std::vector<double> speeds(replicas);
    std::vector<std::size_t> jumps(replicas);
    parallel_for(replicas, 0, [&](std::size_t r) {
      RngStream rng(40 + n, r);
      const dual1d::FrontTrajectory traj = dual1d::simulate_front(n, horizon, rng);
      speeds[r] = static_cast<double>(traj.final_position()) / horizon;
      jumps[r] = traj.points.size() - 1;
    });
    std::size_t total = 0;
    for (std::size_t j : jumps) total += j;
    const Estimate e = Estimate::from_values(speeds, false);
    const double target = n / 2.0;
    const bool ok = total >= 100000 && std::abs(e.mean - target) <= 3.0 * e.std_err;
    v.pass = v.pass && ok;
    v.detail += "n=" + std::to_string(n) + ": " + fmt(e.mean) + " +- " + fmt(e.std_err) + " over " +
                std::to_string(total) + " jumps; ";
  }
  const double t = seconds_since(start);
  v.pass = v.pass && t < 10.0;
  v.detail += fmt(t) + " s";
  return v;
}

Verdict coupling() {
  experiments::Coupling1dParams p;
  const experiments::Output out = experiments::coupling1d(p);
  // Every replica must end in one untruncated check.
  const std::size_t checked = out.rows - out.flagged;
  Verdict v;
  v.pass = out.violations == 0 && checked == p.replicas;
  v.detail = std::to_string(out.violations) + " violations over " + std::to_string(checked) + " checks, " +
             std::to_string(out.flagged) + " truncated re-draws";
  return v;
}

// Fraction of replicas whose density is >= 0.99 at time T.
double invaded_fraction(int dim, std::int64_t side, double horizon, std::size_t replicas, std::uint64_t seed) {
  const Geometry torus = Geometry::torus(dim, side);
  const MajorityRule rule(2, torus);
  std::vector<int> ok(replicas);
  parallel_for(replicas, 0, [&](std::size_t r) {
    RngStream rng(seed, r);
    Configuration c = bernoulli_configuration(torus, 0.5, rng);
    Simulation sim(std::move(c), rule, std::move(rng));
    const auto full = static_cast<std::int64_t>(torus.size());
    // All 1s is absorbing, so stopping there leaves the density at T unchanged.
    sim.advance_until(horizon, [&](const Simulation& s) { return s.ones() == full; });
    ok[r] = density(sim.config()) >= 0.99;
  });
  double hits = 0;
  for (int x : ok) hits += x;
  return hits / static_cast<double>(replicas);
}

Verdict invasion() {
  const double one = invaded_fraction(1, 200, 400.0, 100, 61);
  const double two = invaded_fraction(2, 100, 200.0, 100, 62);
  Verdict v;
  v.pass = one >= 0.95 && two >= 0.95;
  v.detail = "d=1: " + fmt(100 * one) + "%, d=2: " + fmt(100 * two) + "%";
  return v;
}

Verdict extinction_scaling() {
  const auto start = Clock::now();
  std::vector<Estimate> est;
  std::size_t flags = 0;
  for (std::int64_t m : {12, 20, 30}) {
    ExtinctionSpec spec;
    spec.m = m;
    spec.replicas = 100;
    spec.seed = 7;
    const ExtinctionResult res = extinction_time(spec);
    flags += res.boundary_flags + res.horizon_flags;
    est.push_back(res.estimate);
  }
  const auto apart = [](const Estimate& a, const Estimate& b) {
    return b.mean - a.mean > 2.0 * std::hypot(a.std_err, b.std_err);
  };
  Verdict v;
  v.pass = flags == 0 && est[2].mean >= 15.0 && est[2].mean <= 35.0 && apart(est[0], est[1]) && apart(est[1], est[2]);
  v.detail = "means " + fmt(est[0].mean) + ", " + fmt(est[1].mean) + ", " + fmt(est[2].mean) + " (m = 12, 20, 30), " +
             std::to_string(flags) + " flagged, " + fmt(seconds_since(start)) + " s";
  return v;
}

Verdict good_time() {
  experiments::SliceGoodTimeParams p;
  p.replicas = 10000;
  const experiments::Output out = experiments::slice_goodtime(p);
  Verdict v;
  v.pass = out.violations == 0 && out.rows == 5;
  std::istringstream in(out.csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') v.detail += line.substr(0, line.find(',', line.find(',', line.find(',') + 1) + 1)) + "; ";
  v.detail += std::to_string(out.violations) + " below bound";
  return v;
}

Verdict clustering() {
  DisagreementSpec spec;
  spec.dim = 1;
  spec.n = 3;
  spec.pair_dist = 1;
  spec.times = {10.0, 50.0, 100.0};
  spec.replicas = 1000;
  spec.seed = 9;
  const auto est = disagreement_probability(spec);
  const auto below = [](const Estimate& a, const Estimate& b) {
    return a.mean - b.mean > 2.0 * std::hypot(a.std_err, b.std_err);
  };
  Verdict v;
  v.pass = below(est[0], est[1]) && below(est[1], est[2]);
  v.detail = "P = " + fmt(est[0].mean) + ", " + fmt(est[1].mean) + ", " + fmt(est[2].mean) + " at t = 10, 50, 100";
  return v;
}

Verdict oracles() {
  std::size_t phi_bad = 0, slice_bad = 0, front_bad = 0;

  RngStream rng(23);
  for (int r = 0; r < 10000; ++r) {
    const Geometry g = Geometry::window(2, {0, 0}, 5, 5);
    Configuration c(g);
    const double p = rng.uniform_open();
    for (std::size_t i = 0; i < g.size(); ++i) c.set_index(i, rng.bernoulli(p));
    const Coord center{1 + static_cast<std::int64_t>(rng.below(3)), 1 + static_cast<std::int64_t>(rng.below(3))};
    const Configuration after = majority_update(c, center - Coord{1, 1}, HyperedgeFamily(3, g));
    const auto diff = static_cast<std::int64_t>(after.count_ones()) - static_cast<std::int64_t>(c.count_ones());
    phi_bad += contour2d::phi(c, center) != diff;
  }

  RngStream srng(31);
  for (int r = 0; r < 1000; ++r) {
    const slice2d::SliceState s = test_support::random_state(srng, 7);
    const std::int64_t lo = std::min({s.lower, s.middle, s.upper}) - 4;
    const std::int64_t hi = std::max({s.lower, s.middle, s.upper}) + 4;
    std::map<Coord, slice2d::SliceState> oracle, catalog;
    for (std::int64_t row = -3; row <= 2; ++row) {
      for (std::int64_t c = lo; c <= hi - 1; ++c) {
        test_support::CellSlice cells(s, lo - 2, hi + 2);
        if (cells.update(c, row)) oracle[{c, row}] = cells.fronts();
      }
    }
    for (const auto& u : slice2d::active_updates(s)) catalog[u.anchor] = u.successor;
    slice_bad += !(oracle == catalog);
  }

  for (int run = 0; run < 50; ++run) {
    const int n = 2 * (1 + run % 3);
    const double horizon = 15.0;
    const std::int64_t half = 8 * n * 15;
    const MajorityRule rule(n, Geometry::window(1, {-half, 0}, 2 * half + 1));
    RngStream frng(500, run);
    const EventLog log = generate_event_log(rule.site_count(), horizon, frng);
    const auto engine = test_support::engine_front(rule, log, half);
    const dual1d::FrontTrajectory chain = dual1d::simulate_front(rule.family(), log);
    bool same = !engine.empty() && chain.points.size() == engine.size();
    for (std::size_t i = 0; same && i < engine.size(); ++i)
      same = chain.points[i].time == engine[i].time && chain.points[i].position == engine[i].position;
    front_bad += !same;
  }

  Verdict v;
  v.pass = phi_bad == 0 && slice_bad == 0 && front_bad == 0;
  v.detail = "phi " + std::to_string(phi_bad) + "/10000, slice catalog " + std::to_string(slice_bad) +
             "/1000, front " + std::to_string(front_bad) + "/50 mismatches";
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / ("majority_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"snapshot", "snapshot --side 60 --time 5 --seed 3"},
      {"theorem4", "theorem4 --replicas 30 --seed 3"},
      {"drift1d", "drift1d --time 200 --replicas 20 --seed 3"},
      {"coupling1d", "coupling1d --time 20 --replicas 40 --seed 3"},
      {"slice_table", "slice table"},
      {"slice_run", "slice run --time 500 --replicas 10 --seed 3"},
      {"slice_goodtime", "slice goodtime --replicas 300 --seed 3"},
      {"extinction", "extinction --m-list 4,6 --replicas 10 --seed 3"},
      {"cluster_stats", "cluster-stats --times 5,10 --replicas 30 --seed 3"},
  };
  std::size_t same = 0;
  std::string failed;
  for (const auto& [name, args] : runs) {
    std::string outputs[2];
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
      const fs::path base = dir / (name + "_" + std::to_string(k));
      const bool snap = name == "snapshot";
      const std::string target = snap ? base.string() : base.string() + ".csv";
      const std::string cmd =
          std::string(MAJORITY_CLI_PATH) + " " + args + " --out " + target + " > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      ok = ok && status != -1 && WIFEXITED(status) && WEXITSTATUS(status) != 1;
      outputs[k] = snap ? slurp(base.string() + ".grid") + slurp(base.string() + ".pgm") : slurp(target);
      ok = ok && !outputs[k].empty();
    }
    if (ok && outputs[0] == outputs[1])
      ++same;
    else
      failed += " " + name;
  }
  fs::remove_all(dir);
  Verdict v;
  v.pass = same == runs.size();
  v.detail = std::to_string(same) + "/" + std::to_string(runs.size()) + " byte-identical" +
             (failed.empty() ? "" : ", differing or failing:" + failed);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"corner identity on a generated corpus", corner_identity},
      {"exact drift of the slice sum",
       [] {
         return exhaustive_slice(
             [](const slice2d::SliceState& s, std::int64_t, std::int64_t) {
               return int(slice2d::drift_sigma(s) != slice2d::Rational(2 * (slice2d::straight_count(s) - 1)));
             },
             true);
       }},
      {"slice gap drift bound",
       [] {
         return exhaustive_slice(
             [](const slice2d::SliceState& s, std::int64_t xp, std::int64_t xm) {
               if (slice2d::gap(s) < 2) return -1;
               return int(!(slice2d::drift_gap(s) <= slice2d::Rational(xp * xm != 0 ? -2 : 0)));
             },
             false);
       }},
      {"front drift n/2", front_drift},
      {"center path coupling", coupling},
      {"invasion for n = 2", invasion},
      {"extinction time scaling", extinction_scaling},
      {"good-time lower bounds", good_time},
      {"clustering trend", clustering},
      {"oracle equivalences", oracles},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
