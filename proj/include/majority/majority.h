/* C interface to the majority-rule simulator.
 *
 * Every function returns an mr_status. On failure the message of the last
 * error on the calling thread is available from mr_last_error(). Handles are
 * opaque and owned by the caller; text buffers are released with
 * mr_text_free().
 */
#ifndef MAJORITY_MAJORITY_H
#define MAJORITY_MAJORITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(MR_BUILDING_LIBRARY)
#define MR_API __attribute__((visibility("default")))
#else
#define MR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mr_status {
  MR_OK = 0,
  MR_E_INVALID_ARGUMENT = 1,
  MR_E_RANGE = 2,
  MR_E_PARSE = 3,
  MR_E_IO = 4,
  MR_E_DOMAIN = 5,
  MR_E_PRECONDITION = 6,
  MR_E_TRUNCATION = 7,
  MR_E_GENERATION = 8,
  MR_E_INTERNAL = 99
} mr_status;

typedef enum mr_model { MR_MODEL_MAJORITY = 0, MR_MODEL_VOTER = 1 } mr_model;

typedef struct mr_config mr_config;

typedef struct mr_text {
  char* data; /* not NUL-terminated for binary payloads; size is authoritative */
  size_t size;
} mr_text;

/* Counters of an experiment run. violations: identity or coupling failures;
 * flagged: replicas excluded or re-drawn (truncation, boundary, horizon). */
typedef struct mr_report {
  uint64_t rows;
  uint64_t violations;
  uint64_t flagged;
} mr_report;

MR_API const char* mr_last_error(void);
MR_API const char* mr_status_name(mr_status status);
MR_API void mr_text_free(mr_text* text);

/* Configurations */
MR_API mr_status mr_config_torus(int dim, int64_t side, mr_config** out);
MR_API mr_status mr_config_window(int dim, int64_t x0, int64_t y0, int64_t width, int64_t height, mr_config** out);
MR_API mr_status mr_config_parse(const char* text, size_t size, mr_config** out);
MR_API mr_status mr_config_load(const char* path, mr_config** out);
MR_API mr_status mr_config_clone(const mr_config* config, mr_config** out);
MR_API void mr_config_free(mr_config* config);

MR_API mr_status mr_config_get(const mr_config* config, int64_t x, int64_t y, int* value);
MR_API mr_status mr_config_set(mr_config* config, int64_t x, int64_t y, int value);
MR_API mr_status mr_config_count(const mr_config* config, uint64_t* ones, uint64_t* size);
MR_API mr_status mr_config_fill_bernoulli(mr_config* config, double p, uint64_t seed, uint64_t replica);
/* Runs the model to time horizon with stream (seed, replica). n is ignored
 * for the voter model, which needs a torus. */
MR_API mr_status mr_config_evolve(mr_config* config, mr_model model, int n, double horizon, uint64_t seed,
                                  uint64_t replica);
MR_API mr_status mr_config_to_text(const mr_config* config, mr_text* out);
MR_API mr_status mr_config_to_pgm(const mr_config* config, mr_text* out);
MR_API mr_status mr_config_save(const mr_config* config, const char* path);

/* Corner identity on a zero-padded 2D cluster */
typedef struct mr_theorem4_report {
  uint64_t vertices;
  uint64_t c_plus;
  uint64_t c_minus;
  int64_t phi_sum;
  int regular;
  int asserted;
  int identity_holds;
} mr_theorem4_report;

MR_API mr_status mr_theorem4(const mr_config* config, mr_theorem4_report* out);

/* Experiments. Each *_defaults() fills the documented defaults; results are
 * CSV text starting with the header line. */
typedef struct mr_drift1d_params {
  int n;
  double horizon;
  uint64_t replicas;
  uint64_t seed;
  unsigned threads; /* 0: available parallelism */
} mr_drift1d_params;

typedef struct mr_coupling1d_params {
  int n;
  double horizon;
  uint64_t replicas;
  uint64_t seed;
  unsigned threads;
  const int64_t* pair_dists; /* NULL: 1..6 */
  size_t pair_dist_count;
} mr_coupling1d_params;

typedef struct mr_slice_params {
  double horizon;   /* run */
  uint64_t replicas; /* run, goodtime */
  uint64_t seed;
  double time_cap; /* goodtime */
  int64_t radius;  /* table */
  unsigned threads;
} mr_slice_params;

typedef struct mr_extinction_params {
  const int64_t* m_list; /* NULL: 12, 20, 30 */
  size_t m_count;
  int64_t margin; /* negative: 2m */
  int n;
  uint64_t replicas;
  uint64_t seed;
  double time_cap;
  unsigned threads;
} mr_extinction_params;

typedef struct mr_cluster_stats_params {
  mr_model model;
  int dim;
  int n;
  int64_t side; /* 0: max(20 * distance, 200) */
  const double* times; /* NULL: 10, 50, 100 */
  size_t time_count;
  const int64_t* pair_dists; /* NULL: 1 */
  size_t pair_dist_count;
  uint64_t replicas;
  uint64_t seed;
  unsigned threads;
} mr_cluster_stats_params;

typedef struct mr_theorem4_params {
  const char* const* inputs; /* grid files; none: generate count clusters */
  size_t input_count;
  uint64_t count;
  const char* shape_class; /* rectangle, staircase, random_orthoconvex, mixed */
  uint64_t seed;
  unsigned threads;
} mr_theorem4_params;

typedef struct mr_snapshot_params {
  mr_model model;
  int n;
  int64_t side;
  double horizon;
  uint64_t seed;
} mr_snapshot_params;

MR_API void mr_drift1d_defaults(mr_drift1d_params* p);
MR_API void mr_coupling1d_defaults(mr_coupling1d_params* p);
MR_API void mr_slice_defaults(mr_slice_params* p);
MR_API void mr_extinction_defaults(mr_extinction_params* p);
MR_API void mr_cluster_stats_defaults(mr_cluster_stats_params* p);
MR_API void mr_theorem4_defaults(mr_theorem4_params* p);
MR_API void mr_snapshot_defaults(mr_snapshot_params* p);

MR_API mr_status mr_run_drift1d(const mr_drift1d_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_coupling1d(const mr_coupling1d_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_slice_table(const mr_slice_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_slice_run(const mr_slice_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_slice_goodtime(const mr_slice_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_extinction(const mr_extinction_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_cluster_stats(const mr_cluster_stats_params* p, mr_text* csv, mr_report* report);
MR_API mr_status mr_run_theorem4(const mr_theorem4_params* p, mr_text* csv, mr_report* report);
/* Final configuration of a Bernoulli(1/2) start on the 2D torus. */
MR_API mr_status mr_run_snapshot(const mr_snapshot_params* p, mr_config** out);

/* Exact drifts of the slice state (X(-1), X(0), X(1)) as numerator/denominator. */
MR_API mr_status mr_slice_drift_sigma(int64_t lower, int64_t middle, int64_t upper, int64_t* num, int64_t* den);
MR_API mr_status mr_slice_drift_gap(int64_t lower, int64_t middle, int64_t upper, int64_t* num, int64_t* den);

#ifdef __cplusplus
}
#endif

#endif
