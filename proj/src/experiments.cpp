#include "majority/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "majority/dual1d.hpp"
#include "majority/errors.hpp"
#include "majority/parallel.hpp"
#include "majority/slice2d.hpp"
#include "majority/stats.hpp"

namespace majority::experiments {

namespace {

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string num(const slice2d::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void require_replicas(std::size_t replicas) {
  if (replicas < 1) throw InvalidArgument("--replicas must be at least 1");
}

void require_horizon(double horizon) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw InvalidArgument("--time must be a finite non-negative number");
}

}  // namespace

Output drift1d(const Drift1dParams& p) {
  require_replicas(p.replicas);
  require_horizon(p.horizon);
  if (p.n < 2 || p.n % 2 != 0) throw DomainError("drift1d needs an even --n >= 2");
  std::vector<std::int64_t> fronts(p.replicas);
  parallel_for(p.replicas, p.threads, [&](std::size_t r) {
    RngStream rng(p.seed, r);
    fronts[r] = dual1d::simulate_front(p.n, p.horizon, rng).final_position();
  });
  Output out;
  out.csv = "n,T,replica,final_front\n";
  std::vector<double> rates;
  for (std::size_t r = 0; r < p.replicas; ++r) {
    out.csv += std::to_string(p.n) + ',' + num(p.horizon) + ',' + std::to_string(r) + ',' +
               std::to_string(fronts[r]) + '\n';
    if (p.horizon > 0.0) rates.push_back(static_cast<double>(fronts[r]) / p.horizon);
  }
  out.rows = p.replicas;
  const Estimate e = Estimate::from_values(std::move(rates), false);
  out.csv += "# summary mean_drift=" + num(e.mean) + " std_err=" + num(e.std_err) + " target=" + num(p.n / 2.0) + '\n';
  return out;
}

Output coupling1d(const Coupling1dParams& p) {
  require_replicas(p.replicas);
  require_horizon(p.horizon);
  if (p.n < 3 || p.n % 2 == 0) throw DomainError("coupling1d needs an odd --n >= 3");
  if (p.pair_dists.empty()) throw InvalidArgument("--pair-dist needs at least one distance");
  if (p.max_attempts < 1) throw InvalidArgument("max_attempts must be positive");

  struct Row {
    dual1d::CouplingVerdict verdict;
  };
  std::vector<std::vector<Row>> rows(p.replicas);
  parallel_for(p.replicas, p.threads, [&](std::size_t r) {
    RngStream rng(p.seed, r);
    const std::int64_t dist = std::abs(p.pair_dists[r % p.pair_dists.size()]);
    const std::int64_t half = dual1d::segment_half_width(dist, p.n, p.horizon);
    const Geometry segment = Geometry::window(1, {-half, 0}, 2 * half + 1);
    const HyperedgeFamily family(p.n, segment);
    const std::int64_t x = -(dist / 2);
    const std::int64_t y = x + dist;
    for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
      const Configuration config0 = bernoulli_configuration(segment, 0.5, rng);
      const EventLog log = generate_event_log(family.anchor_count(), p.horizon, rng);
      rows[r].push_back({dual1d::coupling_check(config0, x, y, log, family)});
      if (!rows[r].back().verdict.truncated) break;
    }
  });

  Output out;
  out.csv = "n,T,replica,S,eta_x,eta_y,violated,truncated\n";
  for (std::size_t r = 0; r < p.replicas; ++r) {
    for (const Row& row : rows[r]) {
      const auto& v = row.verdict;
      out.csv += std::to_string(p.n) + ',' + num(p.horizon) + ',' + std::to_string(r) + ',';
      if (v.truncated) {
        out.csv += "na,na,na,0,1\n";
        ++out.flagged;
      } else {
        out.csv += (v.meeting ? num(*v.meeting) : std::string("none")) + ',' + std::to_string(v.eta_x) + ',' +
                   std::to_string(v.eta_y) + ',' + (v.violated ? "1" : "0") + ",0\n";
        out.violations += v.violated;
      }
      ++out.rows;
    }
  }
  out.csv += "# summary replicas=" + std::to_string(p.replicas) + " violations=" + std::to_string(out.violations) +
             " truncated_draws=" + std::to_string(out.flagged) + '\n';
  return out;
}

Output slice_table(const SliceTableParams& p) {
  using namespace slice2d;
  if (p.radius < 0) throw InvalidArgument("radius must be non-negative");
  Output out;
  out.csv = "a,b,drift_sigma,drift_gap,catalog_size\n";
  for (std::int64_t xp = -p.radius; xp <= p.radius; ++xp) {
    for (std::int64_t xm = -p.radius; xm <= p.radius; ++xm) {
      const SliceState s{xm, 0, xp};
      if (!s.valid()) continue;
      const Rational ds = drift_sigma(s);
      bool ok = ds == Rational(2 * (straight_count(s) - 1));
      std::string dg = "na";
      if (gap(s) >= 2) {
        const Rational g = drift_gap(s);
        ok = ok && g <= Rational(xp * xm != 0 ? -2 : 0);
        dg = num(g);
      }
      out.violations += !ok;
      if (xp > xm) continue;  // one row per canonical interface (a, b) = (X+, X-) with a <= b
      out.csv += std::to_string(xp) + ',' + std::to_string(xm) + ',' + num(ds) + ',' + dg + ',' +
                 std::to_string(active_updates(s).size()) + '\n';
      ++out.rows;
    }
  }
  out.csv += "# summary violations=" + std::to_string(out.violations) + '\n';
  return out;
}

Output slice_run(const SliceRunParams& p) {
  using namespace slice2d;
  require_replicas(p.replicas);
  require_horizon(p.horizon);
  struct Result {
    SliceState final_state;
    std::int64_t max_gap = 0;
  };
  std::vector<Result> results(p.replicas);
  parallel_for(p.replicas, p.threads, [&](std::size_t r) {
    RngStream rng(p.seed, r);
    const SliceTrajectory traj = simulate_slice(p.horizon, rng);
    Result res{traj.points.back().state, 0};
    for (const SlicePoint& pt : traj.points) res.max_gap = std::max(res.max_gap, gap(pt.state));
    results[r] = res;
  });
  Output out;
  out.csv = "replica,T,X_lower,X_middle,X_upper,sigma,gap,max_gap\n";
  for (std::size_t r = 0; r < p.replicas; ++r) {
    const SliceState& s = results[r].final_state;
    out.csv += std::to_string(r) + ',' + num(p.horizon) + ',' + std::to_string(s.lower) + ',' +
               std::to_string(s.middle) + ',' + std::to_string(s.upper) + ',' + std::to_string(sigma(s)) + ',' +
               std::to_string(gap(s)) + ',' + std::to_string(results[r].max_gap) + '\n';
    ++out.rows;
  }
  return out;
}

Output slice_goodtime(const SliceGoodTimeParams& p) {
  using namespace slice2d;
  require_replicas(p.replicas);
  struct Target {
    InterfaceState iface;
    double bound;
  };
  const Target targets[] = {
      {{0, 0}, 11.0 / 30.0}, {{0, 1}, 11.0 / 50.0}, {{0, 2}, 52.0 / 225.0}, {{-1, 0}, 7.0 / 50.0}, {{-2, 0}, 17.0 / 60.0},
  };
  Output out;
  out.csv = "a,b,e_estimate,std_err,replicas,cap_hits\n";
  std::uint64_t stream = 0;
  for (const Target& t : targets) {
    // Distinct seeds per interface keep the five estimates independent.
    const GoodTimeEstimate g = estimate_good_time(t.iface, p.replicas, p.seed + stream++ * 0x9E3779B97F4A7C15ULL,
                                                  p.time_cap, p.threads);
    out.csv += std::to_string(t.iface.a) + ',' + std::to_string(t.iface.b) + ',' + num(g.estimate.mean) + ',' +
               num(g.estimate.std_err) + ',' + std::to_string(g.estimate.replicas) + ',' +
               std::to_string(g.cap_hits) + '\n';
    out.violations += g.estimate.mean < t.bound - 2.0 * g.estimate.std_err;
    out.flagged += g.cap_hits;
    ++out.rows;
  }
  return out;
}

Output extinction(const ExtinctionParams& p) {
  require_replicas(p.replicas);
  if (p.m_list.empty()) throw InvalidArgument("--m-list needs at least one side");
  Output out;
  out.csv = "m,N0,replica,extinction_time,flag\n";
  std::string summary;
  for (std::int64_t m : p.m_list) {
    ExtinctionSpec spec;
    spec.m = m;
    spec.margin = p.margin;
    spec.n = p.n;
    spec.replicas = p.replicas;
    spec.seed = p.seed;
    spec.time_cap = p.time_cap;
    spec.threads = p.threads;
    const ExtinctionResult res = extinction_time(spec);
    for (std::size_t r = 0; r < res.samples.size(); ++r) {
      out.csv += std::to_string(m) + ',' + std::to_string(res.n0) + ',' + std::to_string(r) + ',' +
                 num(res.samples[r].time) + ',' + to_string(res.samples[r].flag) + '\n';
      ++out.rows;
    }
    out.flagged += res.boundary_flags + res.horizon_flags;
    summary += "# summary m=" + std::to_string(m) + " mean=" + num(res.estimate.mean) +
               " std_err=" + num(res.estimate.std_err) + " ok=" + std::to_string(res.estimate.replicas) +
               " boundary=" + std::to_string(res.boundary_flags) + " horizon=" + std::to_string(res.horizon_flags) +
               '\n';
  }
  out.csv += summary;
  return out;
}

Output cluster_stats(const ClusterStatsParams& p) {
  require_replicas(p.replicas);
  if (p.times.empty()) throw InvalidArgument("--times needs at least one time");
  if (p.pair_dists.empty()) throw InvalidArgument("--pair-dist needs at least one distance");
  Output out;
  out.csv = "t,pair_dist,estimate,std_err,replicas\n";
  for (std::int64_t dist : p.pair_dists) {
    DisagreementSpec spec;
    spec.model = p.model;
    spec.dim = p.dim;
    spec.n = p.n;
    spec.pair_dist = dist;
    spec.times = p.times;
    spec.replicas = p.replicas;
    spec.seed = p.seed;
    spec.threads = p.threads;
    spec.side = p.side;
    const std::vector<Estimate> est = disagreement_probability(spec);
    for (std::size_t i = 0; i < p.times.size(); ++i) {
      out.csv += num(p.times[i]) + ',' + std::to_string(dist) + ',' + num(est[i].mean) + ',' + num(est[i].std_err) +
                 ',' + std::to_string(est[i].replicas) + '\n';
      ++out.rows;
    }
  }
  return out;
}

Configuration corpus_cluster(std::uint64_t seed, std::size_t index, const std::string& shape_class) {
  using contour2d::ShapeClass;
  ShapeClass shape;
  if (shape_class == "mixed") {
    static constexpr ShapeClass cycle[] = {ShapeClass::rectangle, ShapeClass::staircase,
                                           ShapeClass::random_orthoconvex};
    shape = cycle[index % 3];
  } else if (auto parsed = contour2d::parse_shape_class(shape_class)) {
    shape = *parsed;
  } else {
    throw InvalidArgument("--shape-class must be rectangle, staircase, random_orthoconvex or mixed");
  }
  RngStream rng(seed, index);
  for (int attempt = 0;; ++attempt) {
    const int target = 12 + static_cast<int>(rng.below(389));
    try {
      return contour2d::generate_regular_cluster(rng, target, shape);
    } catch (const GenerationError&) {
      if (attempt >= 9) throw;
    }
  }
}

Output theorem4(const Theorem4Params& p) {
  std::vector<Configuration> corpus;
  if (!p.inputs.empty()) {
    for (const std::string& path : p.inputs) corpus.push_back(read_grid_file(path));
  } else {
    std::vector<std::optional<Configuration>> slots(p.count);
    parallel_for(p.count, p.threads, [&](std::size_t i) { slots[i] = corpus_cluster(p.seed, i, p.shape_class); });
    for (auto& c : slots) corpus.push_back(std::move(*c));
  }
  std::vector<contour2d::Theorem4Report> reports(corpus.size());
  parallel_for(corpus.size(), p.threads, [&](std::size_t i) { reports[i] = contour2d::check_theorem4(corpus[i]); });

  Output out;
  out.csv = "cluster_id,vertices,c_plus,c_minus,phi_sum,identity_holds\n";
  std::size_t asserted = 0, minus36 = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out.csv += std::to_string(i) + ',' + std::to_string(r.vertices) + ',' + std::to_string(r.c_plus) + ',' +
               std::to_string(r.c_minus) + ',' + std::to_string(r.phi_sum) + ',' +
               (r.asserted ? (r.identity_holds ? "true" : "false") : "na") + '\n';
    ++out.rows;
    if (r.asserted) {
      ++asserted;
      out.violations += !r.identity_holds;
      minus36 += r.phi_sum == -36;
    } else {
      ++out.flagged;
    }
  }
  out.csv += "# summary clusters=" + std::to_string(reports.size()) + " asserted=" + std::to_string(asserted) +
             " violations=" + std::to_string(out.violations) + " phi_sum_minus_36=" + std::to_string(minus36) + '\n';
  return out;
}

Configuration snapshot(const SnapshotParams& p) {
  require_horizon(p.horizon);
  if (p.side < 1) throw InvalidArgument("--side must be positive");
  const Geometry torus = Geometry::torus(2, p.side);
  const auto rule = make_rule(p.model, p.n, torus);
  RngStream rng(p.seed, 0);
  const Configuration start = bernoulli_configuration(torus, 0.5, rng);
  return run(start, *rule, p.horizon, std::move(rng));
}

std::string pgm_bytes(const Configuration& config) {
  const Geometry& g = config.geometry();
  std::string out = "P5\n" + std::to_string(g.width()) + ' ' + std::to_string(g.height()) + "\n255\n";
  out.reserve(out.size() + g.size());
  for (std::int64_t row = g.height() - 1; row >= 0; --row)
    for (std::int64_t col = 0; col < g.width(); ++col)
      out += static_cast<char>(config.at_index(static_cast<std::size_t>(row * g.width() + col)) ? 0 : 255);
  return out;
}

}  // namespace majority::experiments
