#include "majority/majority.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "majority/contour2d.hpp"
#include "majority/dynamics.hpp"
#include "majority/errors.hpp"
#include "majority/experiments.hpp"
#include "majority/lattice.hpp"
#include "majority/slice2d.hpp"

struct mr_config {
  majority::Configuration value;
};

namespace {

thread_local std::string last_error;

mr_status fail(mr_status status, const char* message) {
  last_error = message;
  return status;
}

mr_status code_of(majority::ErrorCode code) {
  using majority::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return MR_E_INVALID_ARGUMENT;
    case ErrorCode::range: return MR_E_RANGE;
    case ErrorCode::parse: return MR_E_PARSE;
    case ErrorCode::io: return MR_E_IO;
    case ErrorCode::domain: return MR_E_DOMAIN;
    case ErrorCode::precondition: return MR_E_PRECONDITION;
    case ErrorCode::truncation: return MR_E_TRUNCATION;
    case ErrorCode::generation: return MR_E_GENERATION;
  }
  return MR_E_INTERNAL;
}

template <class Fn>
mr_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MR_OK;
  } catch (const majority::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MR_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MR_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MR_E_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw majority::InvalidArgument(std::string(what) + " must not be null");
}

void put_text(const std::string& s, mr_text* out) {
  require(out, "output text");
  char* data = static_cast<char*>(std::malloc(s.size() + 1));
  if (!data) throw std::bad_alloc();
  std::memcpy(data, s.data(), s.size());
  data[s.size()] = '\0';
  out->data = data;
  out->size = s.size();
}

void put_report(const majority::experiments::Output& o, mr_text* csv, mr_report* report) {
  put_text(o.csv, csv);
  if (report) *report = {o.rows, o.violations, o.flagged};
}

majority::Model model_of(mr_model m) {
  switch (m) {
    case MR_MODEL_MAJORITY: return majority::Model::majority;
    case MR_MODEL_VOTER: return majority::Model::voter;
  }
  throw majority::InvalidArgument("unknown model");
}

template <class T>
std::vector<T> list_or(const T* data, size_t count, std::vector<T> fallback) {
  if (!data) return fallback;
  return std::vector<T>(data, data + count);
}

mr_config* wrap(majority::Configuration c) { return new mr_config{std::move(c)}; }

}  // namespace

extern "C" {

MR_API const char* mr_last_error(void) { return last_error.c_str(); }

MR_API const char* mr_status_name(mr_status status) {
  switch (status) {
    case MR_OK: return "ok";
    case MR_E_INVALID_ARGUMENT: return "invalid argument";
    case MR_E_RANGE: return "range error";
    case MR_E_PARSE: return "parse error";
    case MR_E_IO: return "I/O error";
    case MR_E_DOMAIN: return "domain error";
    case MR_E_PRECONDITION: return "precondition error";
    case MR_E_TRUNCATION: return "truncation error";
    case MR_E_GENERATION: return "generation error";
    case MR_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

MR_API void mr_text_free(mr_text* text) {
  if (!text) return;
  std::free(text->data);
  text->data = nullptr;
  text->size = 0;
}

MR_API mr_status mr_config_torus(int dim, int64_t side, mr_config** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(majority::Configuration(majority::Geometry::torus(dim, side)));
  });
}

MR_API mr_status mr_config_window(int dim, int64_t x0, int64_t y0, int64_t width, int64_t height, mr_config** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(majority::Configuration(majority::Geometry::window(dim, {x0, y0}, width, height)));
  });
}

MR_API mr_status mr_config_parse(const char* text, size_t size, mr_config** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(majority::read_grid_text(std::string_view(text, size)));
  });
}

MR_API mr_status mr_config_load(const char* path, mr_config** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(majority::read_grid_file(path));
  });
}

MR_API mr_status mr_config_clone(const mr_config* config, mr_config** out) {
  return guard([&] {
    require(config, "config");
    require(out, "out");
    *out = wrap(config->value);
  });
}

MR_API void mr_config_free(mr_config* config) { delete config; }

MR_API mr_status mr_config_get(const mr_config* config, int64_t x, int64_t y, int* value) {
  return guard([&] {
    require(config, "config");
    require(value, "value");
    *value = config->value.get({x, y});
  });
}

MR_API mr_status mr_config_set(mr_config* config, int64_t x, int64_t y, int value) {
  return guard([&] {
    require(config, "config");
    if (value != 0 && value != 1) throw majority::InvalidArgument("state must be 0 or 1");
    config->value.set({x, y}, value);
  });
}

MR_API mr_status mr_config_count(const mr_config* config, uint64_t* ones, uint64_t* size) {
  return guard([&] {
    require(config, "config");
    if (ones) *ones = config->value.count_ones();
    if (size) *size = config->value.geometry().size();
  });
}

MR_API mr_status mr_config_fill_bernoulli(mr_config* config, double p, uint64_t seed, uint64_t replica) {
  return guard([&] {
    require(config, "config");
    if (!(p >= 0.0 && p <= 1.0)) throw majority::InvalidArgument("p must lie in [0, 1]");
    majority::RngStream rng(seed, replica);
    config->value = majority::bernoulli_configuration(config->value.geometry(), p, rng);
  });
}

MR_API mr_status mr_config_evolve(mr_config* config, mr_model model, int n, double horizon, uint64_t seed,
                                  uint64_t replica) {
  return guard([&] {
    require(config, "config");
    const auto rule = majority::make_rule(model_of(model), n, config->value.geometry());
    config->value = majority::run(config->value, *rule, horizon, majority::RngStream(seed, replica));
  });
}

MR_API mr_status mr_config_to_text(const mr_config* config, mr_text* out) {
  return guard([&] {
    require(config, "config");
    put_text(majority::write_grid_text(config->value), out);
  });
}

MR_API mr_status mr_config_to_pgm(const mr_config* config, mr_text* out) {
  return guard([&] {
    require(config, "config");
    if (config->value.geometry().dim() != 2) throw majority::DomainError("images need a 2D configuration");
    put_text(majority::experiments::pgm_bytes(config->value), out);
  });
}

MR_API mr_status mr_config_save(const mr_config* config, const char* path) {
  return guard([&] {
    require(config, "config");
    require(path, "path");
    majority::write_grid_file(config->value, path);
  });
}

MR_API mr_status mr_theorem4(const mr_config* config, mr_theorem4_report* out) {
  return guard([&] {
    require(config, "config");
    require(out, "out");
    const auto r = majority::contour2d::check_theorem4(config->value);
    *out = {r.vertices, r.c_plus, r.c_minus, r.phi_sum, r.regular, r.asserted, r.identity_holds};
  });
}

MR_API void mr_drift1d_defaults(mr_drift1d_params* p) {
  if (!p) return;
  const majority::experiments::Drift1dParams d;
  *p = {d.n, d.horizon, d.replicas, d.seed, d.threads};
}

MR_API void mr_coupling1d_defaults(mr_coupling1d_params* p) {
  if (!p) return;
  const majority::experiments::Coupling1dParams d;
  *p = {d.n, d.horizon, d.replicas, d.seed, d.threads, nullptr, 0};
}

MR_API void mr_slice_defaults(mr_slice_params* p) {
  if (!p) return;
  const majority::experiments::SliceRunParams run;
  const majority::experiments::SliceGoodTimeParams good;
  const majority::experiments::SliceTableParams table;
  *p = {run.horizon, good.replicas, good.seed, good.time_cap, table.radius, good.threads};
}

MR_API void mr_extinction_defaults(mr_extinction_params* p) {
  if (!p) return;
  const majority::experiments::ExtinctionParams d;
  *p = {nullptr, 0, d.margin, d.n, d.replicas, d.seed, d.time_cap, d.threads};
}

MR_API void mr_cluster_stats_defaults(mr_cluster_stats_params* p) {
  if (!p) return;
  const majority::experiments::ClusterStatsParams d;
  *p = {MR_MODEL_MAJORITY, d.dim, d.n, d.side, nullptr, 0, nullptr, 0, d.replicas, d.seed, d.threads};
}

MR_API void mr_theorem4_defaults(mr_theorem4_params* p) {
  if (!p) return;
  const majority::experiments::Theorem4Params d;
  *p = {nullptr, 0, d.count, "mixed", d.seed, d.threads};
}

MR_API void mr_snapshot_defaults(mr_snapshot_params* p) {
  if (!p) return;
  const majority::experiments::SnapshotParams d;
  *p = {MR_MODEL_MAJORITY, d.n, d.side, d.horizon, d.seed};
}

MR_API mr_status mr_run_drift1d(const mr_drift1d_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::Drift1dParams q;
    q.n = p->n;
    q.horizon = p->horizon;
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.threads = p->threads;
    put_report(majority::experiments::drift1d(q), csv, report);
  });
}

MR_API mr_status mr_run_coupling1d(const mr_coupling1d_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::Coupling1dParams q;
    q.n = p->n;
    q.horizon = p->horizon;
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.threads = p->threads;
    q.pair_dists = list_or(p->pair_dists, p->pair_dist_count, q.pair_dists);
    put_report(majority::experiments::coupling1d(q), csv, report);
  });
}

MR_API mr_status mr_run_slice_table(const mr_slice_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::SliceTableParams q;
    q.radius = p->radius;
    put_report(majority::experiments::slice_table(q), csv, report);
  });
}

MR_API mr_status mr_run_slice_run(const mr_slice_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::SliceRunParams q;
    q.horizon = p->horizon;
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.threads = p->threads;
    put_report(majority::experiments::slice_run(q), csv, report);
  });
}

MR_API mr_status mr_run_slice_goodtime(const mr_slice_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::SliceGoodTimeParams q;
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.time_cap = p->time_cap;
    q.threads = p->threads;
    put_report(majority::experiments::slice_goodtime(q), csv, report);
  });
}

MR_API mr_status mr_run_extinction(const mr_extinction_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::ExtinctionParams q;
    q.m_list = list_or(p->m_list, p->m_count, q.m_list);
    q.margin = p->margin;
    q.n = p->n;
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.time_cap = p->time_cap;
    q.threads = p->threads;
    put_report(majority::experiments::extinction(q), csv, report);
  });
}

MR_API mr_status mr_run_cluster_stats(const mr_cluster_stats_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::ClusterStatsParams q;
    q.model = model_of(p->model);
    q.dim = p->dim;
    q.n = p->n;
    q.side = p->side;
    q.times = list_or(p->times, p->time_count, q.times);
    q.pair_dists = list_or(p->pair_dists, p->pair_dist_count, q.pair_dists);
    q.replicas = p->replicas;
    q.seed = p->seed;
    q.threads = p->threads;
    put_report(majority::experiments::cluster_stats(q), csv, report);
  });
}

MR_API mr_status mr_run_theorem4(const mr_theorem4_params* p, mr_text* csv, mr_report* report) {
  return guard([&] {
    require(p, "params");
    majority::experiments::Theorem4Params q;
    for (size_t i = 0; i < p->input_count; ++i) {
      require(p->inputs[i], "input path");
      q.inputs.emplace_back(p->inputs[i]);
    }
    q.count = p->count;
    if (p->shape_class) q.shape_class = p->shape_class;
    q.seed = p->seed;
    q.threads = p->threads;
    put_report(majority::experiments::theorem4(q), csv, report);
  });
}

MR_API mr_status mr_run_snapshot(const mr_snapshot_params* p, mr_config** out) {
  return guard([&] {
    require(p, "params");
    require(out, "out");
    majority::experiments::SnapshotParams q;
    q.model = model_of(p->model);
    q.n = p->n;
    q.side = p->side;
    q.horizon = p->horizon;
    q.seed = p->seed;
    *out = wrap(majority::experiments::snapshot(q));
  });
}

MR_API mr_status mr_slice_drift_sigma(int64_t lower, int64_t middle, int64_t upper, int64_t* num, int64_t* den) {
  return guard([&] {
    require(num, "num");
    require(den, "den");
    const auto r = majority::slice2d::drift_sigma({lower, middle, upper});
    *num = r.numerator();
    *den = r.denominator();
  });
}

MR_API mr_status mr_slice_drift_gap(int64_t lower, int64_t middle, int64_t upper, int64_t* num, int64_t* den) {
  return guard([&] {
    require(num, "num");
    require(den, "den");
    const auto r = majority::slice2d::drift_gap({lower, middle, upper});
    *num = r.numerator();
    *den = r.denominator();
  });
}

}  // extern "C"
