/* rqlost: guaranteed bounds and Monte Carlo verification for the (r,q)
 * continuous-review lost-sales inventory system with unit Poisson demand and
 * a constant replenishment lead time.
 *
 * Conventions:
 *   - Every fallible function returns RQLOST_OK on success. On failure it
 *     returns an error code, leaves all out-parameters untouched, and stores
 *     a diagnostic retrievable with rqlost_last_error() on the same thread.
 *   - gamma denotes the long-run fraction of sales lost, which equals the
 *     long-run fraction of time the system is out of stock.
 *   - x denotes the mean lead-time demand, demand_rate * lead_time.
 */
#ifndef RQLOST_H
#define RQLOST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rqlost_status {
  RQLOST_OK = 0,
  RQLOST_ERROR_INVALID_ARGUMENT = 1, /* rejected parameter or null pointer */
  RQLOST_ERROR_DOMAIN = 2,           /* value outside its feasible range */
  RQLOST_ERROR_UNREACHABLE = 3,      /* no reorder point meets the target */
  RQLOST_ERROR_INTERNAL = 4          /* invariant violation: a library bug */
} rqlost_status;

const char *rqlost_status_name(rqlost_status status);

/* Diagnostic for the most recent failed call on the calling thread. Never
 * NULL; empty when the most recent call succeeded. */
const char *rqlost_last_error(void);

/* ---------- system parameters ---------- */

typedef struct rqlost_params rqlost_params;

/* reorder_point >= 0, order_quantity >= 1, demand_rate > 0, lead_time > 0. */
rqlost_status rqlost_params_new(int64_t reorder_point, int64_t order_quantity,
                                double demand_rate, double lead_time,
                                rqlost_params **out);

/* Convenience constructor for closed-form work, where only x matters.
 * Equivalent to rqlost_params_new(r, q, x, 1.0). */
rqlost_status rqlost_params_new_from_x(int64_t reorder_point,
                                       int64_t order_quantity,
                                       double mean_lead_time_demand,
                                       rqlost_params **out);

void rqlost_params_free(rqlost_params *params);

/* Accessors assume a valid handle. */
int64_t rqlost_params_reorder_point(const rqlost_params *params);
int64_t rqlost_params_order_quantity(const rqlost_params *params);
double rqlost_params_demand_rate(const rqlost_params *params);
double rqlost_params_lead_time(const rqlost_params *params);
double rqlost_params_mean_lead_time_demand(const rqlost_params *params);
/* q * floor((r+q)/q): the inventory position held whenever stock runs out. */
int64_t rqlost_params_cycle_stock(const rqlost_params *params);

/* ---------- closed forms ---------- */

/* E[(X - r)^+] for X ~ Poisson(x); r >= 0, x >= 0. */
rqlost_status rqlost_poisson_loss(double x, int64_t r, double *out);

/* Erlang blocking probability B(servers, x); servers >= 1, x >= 0. */
rqlost_status rqlost_erlang_loss(int64_t servers, double x, double *out);

typedef struct rqlost_bounds {
  double poisson_loss; /* E[(X-r)^+] at x */
  double erlang;       /* B(r+1, x) */
  double lower;        /* guaranteed lower bound on gamma; exact when r < q */
  double upper;        /* guaranteed upper bound on gamma; exact when q == 1 */
} rqlost_bounds;

rqlost_status rqlost_compute_bounds(const rqlost_params *params,
                                    rqlost_bounds *out);

/* ---------- linked performance measures ---------- */

typedef struct rqlost_measures {
  double gamma;    /* long-run fraction of sales lost */
  double level;    /* time-average on-hand inventory */
  double position; /* time-average inventory position */
  double on_order; /* time-average units on order */
} rqlost_measures;

/* gamma in [0,1]. The other three measures are linear in gamma. */
rqlost_status rqlost_measures_from_gamma(const rqlost_params *params,
                                         double gamma, rqlost_measures *out);

typedef enum rqlost_measure_kind {
  RQLOST_MEASURE_LEVEL = 0,
  RQLOST_MEASURE_POSITION = 1,
  RQLOST_MEASURE_ON_ORDER = 2
} rqlost_measure_kind;

/* Inverts one measure to gamma. RQLOST_ERROR_DOMAIN when the value lies
 * outside the interval the measure sweeps for gamma in [0,1], or when the
 * measure does not depend on gamma for these parameters. */
rqlost_status rqlost_gamma_from_measure(const rqlost_params *params,
                                        rqlost_measure_kind kind, double value,
                                        double *gamma_out);

/* ---------- discrete-event simulation ---------- */

typedef struct rqlost_sim_config {
  uint64_t demands;        /* measured (post-warm-up) arrivals */
  uint64_t warmup_demands; /* arrivals discarded before measurement */
  uint32_t batches;        /* batch-means batch count, >= 10 */
  uint64_t seed;
} rqlost_sim_config;

/* Fills in the defaults: 10^6 demands, warm-up max(10*(r+q), 10^4),
 * 32 batches, seed 1. */
rqlost_status rqlost_sim_config_init(const rqlost_params *params,
                                     rqlost_sim_config *out);

typedef struct rqlost_sim_estimate {
  double gamma_time; /* fraction of time with zero on-hand stock */
  double gamma_lost; /* lost demands / all demands */
  double level;
  double on_order;
  double position;
  /* 95% batch-means half-widths for the five estimates above. */
  double gamma_time_hw;
  double gamma_lost_hw;
  double level_hw;
  double on_order_hw;
  double position_hw;
  uint64_t demands_observed;
} rqlost_sim_estimate;

/* Event-driven run, deterministic for a given seed. */
rqlost_status rqlost_simulate(const rqlost_params *params,
                              const rqlost_sim_config *config,
                              rqlost_sim_estimate *out);

typedef struct rqlost_identity_check {
  double observed; /* |lhs - rhs| */
  double allowed;  /* k_sigma * combined half-width */
  int pass;
} rqlost_identity_check;

typedef struct rqlost_identity_report {
  rqlost_identity_check on_order; /* U vs (1 - gamma_time) x */
  rqlost_identity_check position; /* P vs its closed form at gamma_time */
  rqlost_identity_check level;    /* L vs its closed form at gamma_time */
  rqlost_identity_check pasta;    /* gamma_time vs gamma_lost */
  int all_pass;
} rqlost_identity_report;

/* Cross-checks the analytic identities linking the simulated averages. */
rqlost_status rqlost_check_identities(const rqlost_params *params,
                                      const rqlost_sim_estimate *estimate,
                                      double k_sigma,
                                      rqlost_identity_report *out);

/* ---------- sweeps ---------- */

/* A sweep result: a rectangular table of doubles with named columns. Flag
 * columns hold 0/1. */
typedef struct rqlost_table rqlost_table;

size_t rqlost_table_rows(const rqlost_table *table);
size_t rqlost_table_cols(const rqlost_table *table);
/* NULL if col is out of range. */
const char *rqlost_table_col_name(const rqlost_table *table, size_t col);
/* 0.0 if either index is out of range. */
double rqlost_table_cell(const rqlost_table *table, size_t row, size_t col);
void rqlost_table_free(rqlost_table *table);

/* Bound-quality aggregates over q = 2..r for r in {2,4,...,1024} and
 * x = K*r with K in {0.5,0.75,1,1.5,2}. Columns: r, k_factor,
 * avg_ub_sl_pct, avg_lb_sl_pct, avg_diff_pct, max_diff_pct, min_diff_pct.
 * threads: worker count, 0 = hardware. */
rqlost_status rqlost_table2(int threads, rqlost_table **out);

/* The reference values the sweep reproduces (quoted to 4 decimals). */
rqlost_status rqlost_table2_reference(rqlost_table **out);

/* Worst bound gap per reorder point over x = K*r, K = k_min..k_max in steps
 * of k_step, q = 2..r. Columns: r, worst_gap. */
rqlost_status rqlost_figure1(int64_t r_max, double k_min, double k_max,
                             double k_step, int threads, rqlost_table **out);

typedef struct rqlost_verify_cell {
  int64_t reorder_point;
  int64_t order_quantity;
  double demand_rate;
  double lead_time;
  rqlost_sim_config sim;
} rqlost_verify_cell;

/* Simulates each cell and grades it against the guaranteed bounds, the exact
 * special cases (q == 1, r < q), and the linked-measure identities, all with
 * k_sigma half-widths of slack. Columns: r, q, x, seed, demands, lower,
 * upper, gamma_lost, gamma_lost_hw, gamma_time, gamma_time_hw, level,
 * level_hw, on_order, on_order_hw, position, position_hw, bracket_pass,
 * equality_case, equality_gap, equality_allowed, equality_pass,
 * identities_pass, all_pass. The seed column is a double and therefore exact
 * only below 2^53; callers needing exact seeds should keep their cell list. */
rqlost_status rqlost_verify_grid(const rqlost_verify_cell *cells, size_t count,
                                 double k_sigma, int threads,
                                 rqlost_table **out);

/* Smallest reorder point whose guaranteed upper bound meets the target lost
 * fraction, for fixed q and x. RQLOST_ERROR_UNREACHABLE past r = 10^6. */
rqlost_status rqlost_search_min_r(int64_t order_quantity,
                                  double mean_lead_time_demand,
                                  double target_lost_fraction,
                                  int64_t *out_reorder_point);

/* Deterministic per-cell seed derivation used by the sweep drivers; parallel
 * and serial sweeps hand every cell the same stream. */
uint64_t rqlost_derive_seed(uint64_t root_seed, uint64_t a, uint64_t b,
                            uint64_t c);

#ifdef __cplusplus
}
#endif

#endif /* RQLOST_H */
