#include <cstdio>
#include <cstring>
#include <string>

#include "doctest.h"
#include "majority/majority.h"

namespace {

std::string take(mr_text& t) {
  std::string s(t.data, t.size);
  mr_text_free(&t);
  return s;
}

}  // namespace

TEST_CASE("configuration handles") {
  mr_config* c = nullptr;
  REQUIRE(mr_config_window(2, 0, 0, 4, 3, &c) == MR_OK);
  CHECK(mr_config_set(c, 1, 2, 1) == MR_OK);
  int v = -1;
  CHECK(mr_config_get(c, 1, 2, &v) == MR_OK);
  CHECK(v == 1);
  CHECK(mr_config_get(c, -5, 2, &v) == MR_OK);
  CHECK(v == 0);
  CHECK(mr_config_set(c, 9, 9, 1) == MR_E_RANGE);
  CHECK(std::strlen(mr_last_error()) > 0);
  CHECK(mr_config_set(c, 0, 0, 2) == MR_E_INVALID_ARGUMENT);

  uint64_t ones = 0, size = 0;
  CHECK(mr_config_count(c, &ones, &size) == MR_OK);
  CHECK(ones == 1);
  CHECK(size == 12);

  mr_text text{nullptr, 0};
  REQUIRE(mr_config_to_text(c, &text) == MR_OK);
  CHECK(take(text) == ".#..\n....\n....\n");
  mr_config_free(c);
}

TEST_CASE("parse errors keep their code") {
  mr_config* c = nullptr;
  const char* bad = "##\n#\n";
  CHECK(mr_config_parse(bad, std::strlen(bad), &c) == MR_E_PARSE);
  CHECK(std::string(mr_last_error()).find("line 2") != std::string::npos);
  CHECK(mr_config_load("/nonexistent/cluster.grid", &c) == MR_E_IO);
  CHECK(c == nullptr);
  CHECK(mr_config_torus(2, 10, nullptr) == MR_E_INVALID_ARGUMENT);
}

TEST_CASE("evolve, Bernoulli fill and images") {
  mr_config* c = nullptr;
  REQUIRE(mr_config_torus(2, 16, &c) == MR_OK);
  CHECK(mr_config_fill_bernoulli(c, 0.5, 7, 0) == MR_OK);
  mr_config* copy = nullptr;
  REQUIRE(mr_config_clone(c, &copy) == MR_OK);
  CHECK(mr_config_evolve(c, MR_MODEL_MAJORITY, 3, 2.0, 7, 1) == MR_OK);
  CHECK(mr_config_evolve(copy, MR_MODEL_MAJORITY, 3, 2.0, 7, 1) == MR_OK);
  mr_text a{nullptr, 0}, b{nullptr, 0};
  REQUIRE(mr_config_to_pgm(c, &a) == MR_OK);
  REQUIRE(mr_config_to_pgm(copy, &b) == MR_OK);
  CHECK(take(a) == take(b));
  mr_config_free(copy);
  mr_config_free(c);

  mr_config* line = nullptr;
  REQUIRE(mr_config_window(1, 0, 0, 10, 1, &line) == MR_OK);
  CHECK(mr_config_evolve(line, MR_MODEL_VOTER, 0, 1.0, 1, 0) == MR_E_INVALID_ARGUMENT);
  mr_text t{nullptr, 0};
  CHECK(mr_config_to_pgm(line, &t) == MR_E_DOMAIN);
  mr_config_free(line);
}

TEST_CASE("theorem4 through the C API") {
  const char* grid = "######\n######\n######\n######\n######\n######\n";
  mr_config* c = nullptr;
  REQUIRE(mr_config_parse(grid, std::strlen(grid), &c) == MR_OK);
  mr_theorem4_report r{};
  REQUIRE(mr_theorem4(c, &r) == MR_OK);
  CHECK(r.vertices == 36);
  CHECK(r.c_plus == 4);
  CHECK(r.c_minus == 0);
  CHECK(r.phi_sum == -36);
  CHECK(r.asserted == 1);
  CHECK(r.identity_holds == 1);
  mr_config_free(c);
}

TEST_CASE("experiments through the C API") {
  mr_drift1d_params d;
  mr_drift1d_defaults(&d);
  CHECK(d.n == 2);
  d.replicas = 2;
  d.horizon = 10.0;
  mr_text csv{nullptr, 0};
  mr_report report{};
  REQUIRE(mr_run_drift1d(&d, &csv, &report) == MR_OK);
  CHECK(report.rows == 2);
  CHECK(take(csv).rfind("n,T,replica,final_front\n", 0) == 0);

  d.n = 3;
  CHECK(mr_run_drift1d(&d, &csv, &report) == MR_E_DOMAIN);

  mr_slice_params s;
  mr_slice_defaults(&s);
  REQUIRE(mr_run_slice_table(&s, &csv, &report) == MR_OK);
  CHECK(report.violations == 0);
  mr_text_free(&csv);

  int64_t num = 0, den = 0;
  CHECK(mr_slice_drift_sigma(0, 0, 0, &num, &den) == MR_OK);
  CHECK(num == 2);
  CHECK(den == 1);
  CHECK(mr_slice_drift_gap(0, 0, 0, &num, &den) == MR_E_PRECONDITION);
  CHECK(mr_slice_drift_sigma(1, -1, 1, &num, &den) == MR_E_PRECONDITION);

  mr_theorem4_params t;
  mr_theorem4_defaults(&t);
  t.count = 3;
  REQUIRE(mr_run_theorem4(&t, &csv, &report) == MR_OK);
  CHECK(report.rows == 3);
  mr_text_free(&csv);

  mr_snapshot_params snap;
  mr_snapshot_defaults(&snap);
  CHECK(snap.side == 400);
  CHECK(snap.horizon == 20.0);
  snap.side = 8;
  mr_config* c = nullptr;
  REQUIRE(mr_run_snapshot(&snap, &c) == MR_OK);
  mr_config_free(c);
}

TEST_CASE("null arguments are rejected") {
  CHECK(mr_run_drift1d(nullptr, nullptr, nullptr) == MR_E_INVALID_ARGUMENT);
  CHECK(std::string(mr_status_name(MR_E_TRUNCATION)) == "truncation error");
  mr_text_free(nullptr);
  mr_config_free(nullptr);
}
