#include <sstream>

#include "doctest.h"
#include "majority/errors.hpp"
#include "majority/experiments.hpp"

using namespace majority;
using namespace majority::experiments;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t data_rows(const std::string& csv) {
  std::size_t n = 0;
  for (const auto& l : lines(csv)) n += !l.empty() && l[0] != '#';
  return n - 1;  // header
}

}  // namespace

TEST_CASE("drift1d CSV") {
  Drift1dParams p;
  p.replicas = 4;
  p.horizon = 50.0;
  const Output out = drift1d(p);
  CHECK(lines(out.csv).front() == "n,T,replica,final_front");
  CHECK(data_rows(out.csv) == 4);
  CHECK(out.csv.find("# summary mean_drift=") != std::string::npos);
  CHECK(drift1d(p).csv == out.csv);
  p.n = 3;
  CHECK_THROWS_AS(drift1d(p), DomainError);
}

TEST_CASE("coupling1d CSV") {
  Coupling1dParams p;
  p.replicas = 6;
  p.horizon = 10.0;
  const Output out = coupling1d(p);
  CHECK(lines(out.csv).front() == "n,T,replica,S,eta_x,eta_y,violated,truncated");
  CHECK(out.violations == 0);
  CHECK(out.rows == data_rows(out.csv));
  CHECK(out.rows >= 6);
  p.n = 4;
  CHECK_THROWS_AS(coupling1d(p), DomainError);
}

TEST_CASE("slice table") {
  const Output out = slice_table({});
  CHECK(lines(out.csv).front() == "a,b,drift_sigma,drift_gap,catalog_size");
  CHECK(out.violations == 0);
  CHECK(out.csv.find("\n0,0,2,na,4\n") != std::string::npos);
  CHECK(out.csv.find("\n-1,-1,-2,") != std::string::npos);
}

TEST_CASE("slice run and goodtime") {
  SliceRunParams run;
  run.replicas = 3;
  run.horizon = 50.0;
  const Output r = slice_run(run);
  CHECK(lines(r.csv).front() == "replica,T,X_lower,X_middle,X_upper,sigma,gap,max_gap");
  CHECK(r.rows == 3);

  SliceGoodTimeParams good;
  good.replicas = 500;
  const Output g = slice_goodtime(good);
  CHECK(lines(g.csv).front() == "a,b,e_estimate,std_err,replicas,cap_hits");
  CHECK(g.rows == 5);
  CHECK(g.violations == 0);
}

TEST_CASE("extinction CSV") {
  ExtinctionParams p;
  p.m_list = {1, 2};
  p.replicas = 5;
  const Output out = extinction(p);
  CHECK(lines(out.csv).front() == "m,N0,replica,extinction_time,flag");
  CHECK(out.rows == 10);
  CHECK(out.csv.find("\n2,4,0,") != std::string::npos);
}

TEST_CASE("cluster-stats CSV") {
  ClusterStatsParams p;
  p.replicas = 5;
  p.times = {0.0, 2.0};
  p.pair_dists = {1, 2};
  const Output out = cluster_stats(p);
  CHECK(lines(out.csv).front() == "t,pair_dist,estimate,std_err,replicas");
  CHECK(out.rows == 4);
}

TEST_CASE("theorem4 corpus") {
  Theorem4Params p;
  p.count = 9;
  const Output out = theorem4(p);
  CHECK(lines(out.csv).front() == "cluster_id,vertices,c_plus,c_minus,phi_sum,identity_holds");
  CHECK(out.rows == 9);
  CHECK(out.violations == 0);
  CHECK(out.flagged == 0);
  CHECK(out.csv.find("phi_sum_minus_36=9") != std::string::npos);
  p.shape_class = "blob";
  CHECK_THROWS_AS(theorem4(p), InvalidArgument);
}

TEST_CASE("snapshot and PGM") {
  SnapshotParams p;
  p.side = 12;
  p.horizon = 0.0;
  const Configuration c = snapshot(p);
  CHECK(c.geometry().width() == 12);
  const std::string pgm = pgm_bytes(c);
  const std::string header = "P5\n12 12\n255\n";
  REQUIRE(pgm.size() == header.size() + 144);
  CHECK(pgm.compare(0, header.size(), header) == 0);
  // First pixel is the top-left vertex (0, 11).
  CHECK(static_cast<unsigned char>(pgm[header.size()]) == (c.get({0, 11}) ? 0 : 255));
  CHECK(pgm_bytes(snapshot(p)) == pgm);
}
