#include "rqlost/rqlost.h"

#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "params.hpp"
#include "poisson.hpp"
#include "rng.hpp"
#include "simulate.hpp"

struct rqlost_params {
  rqlost::SystemParams impl;
};

struct rqlost_table {
  std::vector<std::string> col_names;
  std::size_t rows = 0;
  std::vector<double> cells;  // row-major, rows * col_names.size()
};

namespace {

thread_local std::string g_last_error;

rqlost_status fail(rqlost_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions to status codes and recording the message.
template <typename Fn>
rqlost_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RQLOST_OK;
  } catch (const rqlost::unreachable_target& e) {
    return fail(RQLOST_ERROR_UNREACHABLE, e.what());
  } catch (const std::domain_error& e) {
    return fail(RQLOST_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RQLOST_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RQLOST_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RQLOST_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(RQLOST_ERROR_INTERNAL, "unknown error");
  }
}

rqlost_status require(bool ok, const char* message) {
  return ok ? RQLOST_OK : fail(RQLOST_ERROR_INVALID_ARGUMENT, message);
}

rqlost_sim_estimate to_c(const rqlost::SimEstimate& e) {
  rqlost_sim_estimate c;
  c.gamma_time = e.gamma_time;
  c.gamma_lost = e.gamma_lost;
  c.level = e.level;
  c.on_order = e.on_order;
  c.position = e.position;
  c.gamma_time_hw = e.gamma_time_hw;
  c.gamma_lost_hw = e.gamma_lost_hw;
  c.level_hw = e.level_hw;
  c.on_order_hw = e.on_order_hw;
  c.position_hw = e.position_hw;
  c.demands_observed = e.demands_observed;
  return c;
}

rqlost_identity_check to_c(const rqlost::IdentityCheck& c) {
  return {c.observed, c.allowed, c.pass ? 1 : 0};
}

rqlost_table* make_table(std::vector<std::string> names, std::size_t rows) {
  auto* t = new rqlost_table;
  t->col_names = std::move(names);
  t->rows = rows;
  t->cells.assign(rows * t->col_names.size(), 0.0);
  return t;
}

rqlost_table* aggregate_table(const std::vector<rqlost::AggregateRow>& rows) {
  rqlost_table* t = make_table({"r", "k_factor", "avg_ub_sl_pct",
                                "avg_lb_sl_pct", "avg_diff_pct",
                                "max_diff_pct", "min_diff_pct"},
                               rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double* c = &t->cells[i * 7];
    c[0] = static_cast<double>(rows[i].r);
    c[1] = rows[i].k_factor;
    c[2] = rows[i].avg_ub_sl_pct;
    c[3] = rows[i].avg_lb_sl_pct;
    c[4] = rows[i].avg_diff_pct;
    c[5] = rows[i].max_diff_pct;
    c[6] = rows[i].min_diff_pct;
  }
  return t;
}

}  // namespace

const char* rqlost_status_name(rqlost_status status) {
  switch (status) {
    case RQLOST_OK:
      return "ok";
    case RQLOST_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case RQLOST_ERROR_DOMAIN:
      return "domain error";
    case RQLOST_ERROR_UNREACHABLE:
      return "unreachable target";
    case RQLOST_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* rqlost_last_error(void) { return g_last_error.c_str(); }

rqlost_status rqlost_params_new(int64_t reorder_point, int64_t order_quantity,
                                double demand_rate, double lead_time,
                                rqlost_params** out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] {
    *out = new rqlost_params{
        rqlost::SystemParams(reorder_point, order_quantity, demand_rate, lead_time)};
  });
}

rqlost_status rqlost_params_new_from_x(int64_t reorder_point,
                                       int64_t order_quantity,
                                       double mean_lead_time_demand,
                                       rqlost_params** out) {
  return rqlost_params_new(reorder_point, order_quantity, mean_lead_time_demand,
                           1.0, out);
}

void rqlost_params_free(rqlost_params* params) { delete params; }

int64_t rqlost_params_reorder_point(const rqlost_params* params) {
  return params->impl.r();
}
int64_t rqlost_params_order_quantity(const rqlost_params* params) {
  return params->impl.q();
}
double rqlost_params_demand_rate(const rqlost_params* params) {
  return params->impl.demand_rate();
}
double rqlost_params_lead_time(const rqlost_params* params) {
  return params->impl.lead_time();
}
double rqlost_params_mean_lead_time_demand(const rqlost_params* params) {
  return params->impl.x();
}
int64_t rqlost_params_cycle_stock(const rqlost_params* params) {
  return params->impl.cycle_stock();
}

rqlost_status rqlost_poisson_loss(double x, int64_t r, double* out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] { *out = rqlost::poisson_loss(x, r); });
}

rqlost_status rqlost_erlang_loss(int64_t servers, double x, double* out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] { *out = rqlost::erlang_loss(servers, x); });
}

rqlost_status rqlost_compute_bounds(const rqlost_params* params,
                                    rqlost_bounds* out) {
  if (rqlost_status s = require(params != nullptr && out != nullptr,
                                "params and out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    const rqlost::BoundsResult b = rqlost::compute_bounds(params->impl);
    *out = {b.loss, b.erlang, b.lower, b.upper};
  });
}

rqlost_status rqlost_measures_from_gamma(const rqlost_params* params,
                                         double gamma, rqlost_measures* out) {
  if (rqlost_status s = require(params != nullptr && out != nullptr,
                                "params and out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    const rqlost::Measures m = rqlost::measures_from_gamma(params->impl, gamma);
    *out = {m.gamma, m.level, m.position, m.on_order};
  });
}

rqlost_status rqlost_gamma_from_measure(const rqlost_params* params,
                                        rqlost_measure_kind kind, double value,
                                        double* gamma_out) {
  if (rqlost_status s = require(params != nullptr && gamma_out != nullptr,
                                "params and gamma_out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    rqlost::MeasureKind k;
    switch (kind) {
      case RQLOST_MEASURE_LEVEL:
        k = rqlost::MeasureKind::Level;
        break;
      case RQLOST_MEASURE_POSITION:
        k = rqlost::MeasureKind::Position;
        break;
      case RQLOST_MEASURE_ON_ORDER:
        k = rqlost::MeasureKind::OnOrder;
        break;
      default:
        throw std::invalid_argument("unknown measure kind");
    }
    *gamma_out = rqlost::gamma_from_measure(params->impl, k, value);
  });
}

rqlost_status rqlost_sim_config_init(const rqlost_params* params,
                                     rqlost_sim_config* out) {
  if (rqlost_status s = require(params != nullptr && out != nullptr,
                                "params and out must not be NULL");
      s != RQLOST_OK)
    return s;
  out->demands = 1000000;
  out->warmup_demands = rqlost::default_warmup(params->impl);
  out->batches = 32;
  out->seed = 1;
  g_last_error.clear();
  return RQLOST_OK;
}

rqlost_status rqlost_simulate(const rqlost_params* params,
                              const rqlost_sim_config* config,
                              rqlost_sim_estimate* out) {
  if (rqlost_status s = require(params != nullptr && config != nullptr &&
                                    out != nullptr,
                                "params, config and out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    rqlost::SimConfig cfg;
    cfg.demands = config->demands;
    cfg.warmup_demands = config->warmup_demands;
    cfg.batches = config->batches;
    cfg.seed = config->seed;
    *out = to_c(rqlost::simulate(params->impl, cfg));
  });
}

rqlost_status rqlost_check_identities(const rqlost_params* params,
                                      const rqlost_sim_estimate* estimate,
                                      double k_sigma,
                                      rqlost_identity_report* out) {
  if (rqlost_status s = require(params != nullptr && estimate != nullptr &&
                                    out != nullptr,
                                "params, estimate and out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    rqlost::SimEstimate e;
    e.gamma_time = estimate->gamma_time;
    e.gamma_lost = estimate->gamma_lost;
    e.level = estimate->level;
    e.on_order = estimate->on_order;
    e.position = estimate->position;
    e.gamma_time_hw = estimate->gamma_time_hw;
    e.gamma_lost_hw = estimate->gamma_lost_hw;
    e.level_hw = estimate->level_hw;
    e.on_order_hw = estimate->on_order_hw;
    e.position_hw = estimate->position_hw;
    e.demands_observed = estimate->demands_observed;
    const rqlost::ConsistencyReport r =
        rqlost::check_measure_identities(params->impl, e, k_sigma);
    out->on_order = to_c(r.on_order);
    out->position = to_c(r.position);
    out->level = to_c(r.level);
    out->pasta = to_c(r.pasta);
    out->all_pass = r.all_pass ? 1 : 0;
  });
}

size_t rqlost_table_rows(const rqlost_table* table) { return table->rows; }

size_t rqlost_table_cols(const rqlost_table* table) {
  return table->col_names.size();
}

const char* rqlost_table_col_name(const rqlost_table* table, size_t col) {
  if (col >= table->col_names.size()) return nullptr;
  return table->col_names[col].c_str();
}

double rqlost_table_cell(const rqlost_table* table, size_t row, size_t col) {
  if (row >= table->rows || col >= table->col_names.size()) return 0.0;
  return table->cells[row * table->col_names.size() + col];
}

void rqlost_table_free(rqlost_table* table) { delete table; }

rqlost_status rqlost_table2(int threads, rqlost_table** out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] { *out = aggregate_table(rqlost::table2(threads)); });
}

rqlost_status rqlost_table2_reference(rqlost_table** out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] { *out = aggregate_table(rqlost::table2_reference()); });
}

rqlost_status rqlost_figure1(int64_t r_max, double k_min, double k_max,
                             double k_step, int threads, rqlost_table** out) {
  if (rqlost_status s = require(out != nullptr, "out must not be NULL"); s != RQLOST_OK)
    return s;
  return guarded([&] {
    const std::vector<rqlost::FigurePoint> points =
        rqlost::figure1(r_max, k_min, k_max, k_step, threads);
    rqlost_table* t = make_table({"r", "worst_gap"}, points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      t->cells[i * 2] = static_cast<double>(points[i].r);
      t->cells[i * 2 + 1] = points[i].worst_gap;
    }
    *out = t;
  });
}

rqlost_status rqlost_verify_grid(const rqlost_verify_cell* cells, size_t count,
                                 double k_sigma, int threads,
                                 rqlost_table** out) {
  if (rqlost_status s = require(out != nullptr && (cells != nullptr || count == 0),
                                "cells and out must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    std::vector<rqlost::VerifyCell> cpp_cells;
    cpp_cells.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      rqlost::SimConfig cfg;
      cfg.demands = cells[i].sim.demands;
      cfg.warmup_demands = cells[i].sim.warmup_demands;
      cfg.batches = cells[i].sim.batches;
      cfg.seed = cells[i].sim.seed;
      cpp_cells.push_back(
          {rqlost::SystemParams(cells[i].reorder_point, cells[i].order_quantity,
                                cells[i].demand_rate, cells[i].lead_time),
           cfg});
    }
    const std::vector<rqlost::VerifyResult> results =
        rqlost::verify_grid(cpp_cells, k_sigma, threads);

    rqlost_table* t = make_table(
        {"r",           "q",           "x",
         "seed",        "demands",     "lower",
         "upper",       "gamma_lost",  "gamma_lost_hw",
         "gamma_time",  "gamma_time_hw", "level",
         "level_hw",    "on_order",    "on_order_hw",
         "position",    "position_hw", "bracket_pass",
         "equality_case", "equality_gap", "equality_allowed",
         "equality_pass", "identities_pass", "all_pass"},
        results.size());
    const std::size_t ncol = t->col_names.size();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const rqlost::VerifyResult& v = results[i];
      double* c = &t->cells[i * ncol];
      c[0] = static_cast<double>(v.r);
      c[1] = static_cast<double>(v.q);
      c[2] = v.x;
      c[3] = static_cast<double>(v.seed);
      c[4] = static_cast<double>(v.estimate.demands_observed);
      c[5] = v.lower;
      c[6] = v.upper;
      c[7] = v.estimate.gamma_lost;
      c[8] = v.estimate.gamma_lost_hw;
      c[9] = v.estimate.gamma_time;
      c[10] = v.estimate.gamma_time_hw;
      c[11] = v.estimate.level;
      c[12] = v.estimate.level_hw;
      c[13] = v.estimate.on_order;
      c[14] = v.estimate.on_order_hw;
      c[15] = v.estimate.position;
      c[16] = v.estimate.position_hw;
      c[17] = v.bracket_pass ? 1.0 : 0.0;
      c[18] = static_cast<double>(v.equality_case);
      c[19] = v.equality_gap;
      c[20] = v.equality_allowed;
      c[21] = v.equality_pass ? 1.0 : 0.0;
      c[22] = v.identities.all_pass ? 1.0 : 0.0;
      c[23] = v.all_pass ? 1.0 : 0.0;
    }
    *out = t;
  });
}

rqlost_status rqlost_search_min_r(int64_t order_quantity,
                                  double mean_lead_time_demand,
                                  double target_lost_fraction,
                                  int64_t* out_reorder_point) {
  if (rqlost_status s = require(out_reorder_point != nullptr,
                                "out_reorder_point must not be NULL");
      s != RQLOST_OK)
    return s;
  return guarded([&] {
    *out_reorder_point = rqlost::search_min_reorder_point(
        order_quantity, mean_lead_time_demand, target_lost_fraction);
  });
}

uint64_t rqlost_derive_seed(uint64_t root_seed, uint64_t a, uint64_t b,
                            uint64_t c) {
  return rqlost::derive_seed(root_seed, a, b, c);
}
