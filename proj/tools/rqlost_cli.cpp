// Command-line front end for librqlost. Links the public C API only.
//
// Exit codes: 0 success, 2 usage error, 3 domain error (value outside its
// feasible range, unreachable target), 4 I/O failure, 5 reproduction or
// verification mismatch.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rqlost/rqlost.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;
constexpr int kExitMismatch = 5;

int status_exit(rqlost_status s) {
  switch (s) {
    case RQLOST_OK:
      return kExitOk;
    case RQLOST_ERROR_INVALID_ARGUMENT:
      return kExitUsage;
    case RQLOST_ERROR_DOMAIN:
    case RQLOST_ERROR_UNREACHABLE:
      return kExitDomain;
    default:
      return 1;
  }
}

int fail_status(rqlost_status s) {
  std::cerr << "error: " << rqlost_last_error() << "\n";
  return status_exit(s);
}

struct OutputOptions {
  std::string format = "json";
  std::string path;
  bool round4 = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path,
                  "Write output to this file instead of standard output");
  cmd->add_flag("--round4", out.round4,
                "Round fractional values to 4 decimals before writing");
}

void apply_round4(ordered_json& rec) {
  for (auto& [key, value] : rec.items()) {
    (void)key;
    if (value.is_number_float())
      value = std::round(value.get<double>() * 1e4) / 1e4;
  }
}

std::string format_csv_value(const ordered_json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

int write_text(const std::string& text, const OutputOptions& opts) {
  if (opts.path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(opts.path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << opts.path << "' for writing\n";
    return kExitIo;
  }
  f << text;
  f.flush();
  if (!f) {
    std::cerr << "error: failed writing '" << opts.path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

// Serializes the records with identical numeric values in either format:
// JSON keeps shortest-round-trip doubles, CSV prints 17 significant digits.
int emit_records(std::vector<ordered_json> records, bool as_array,
                 const OutputOptions& opts) {
  if (opts.round4)
    for (auto& rec : records) apply_round4(rec);
  std::string text;
  if (opts.format == "csv") {
    if (!records.empty()) {
      bool first = true;
      for (auto it = records.front().begin(); it != records.front().end(); ++it) {
        if (!first) text += ',';
        text += it.key();
        first = false;
      }
      text += '\n';
      for (const auto& rec : records) {
        first = true;
        for (auto it = rec.begin(); it != rec.end(); ++it) {
          if (!first) text += ',';
          text += format_csv_value(it.value());
          first = false;
        }
        text += '\n';
      }
    }
  } else {
    if (as_array) {
      text = ordered_json(records).dump(2);
    } else {
      text = records.empty() ? std::string("{}") : records.front().dump(2);
    }
    text += '\n';
  }
  return write_text(text, opts);
}

// Columns that carry integral values; everything else stays a double.
const std::set<std::string>& int_columns() {
  static const std::set<std::string> cols = {
      "r", "q", "seed", "demands", "bracket_pass", "equality_case",
      "equality_pass", "identities_pass", "all_pass"};
  return cols;
}

std::vector<ordered_json> table_records(const rqlost_table* t) {
  const std::size_t rows = rqlost_table_rows(t);
  const std::size_t cols = rqlost_table_cols(t);
  std::vector<ordered_json> records(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    ordered_json rec;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string name = rqlost_table_col_name(t, c);
      const double v = rqlost_table_cell(t, i, c);
      if (int_columns().count(name)) {
        rec[name] = static_cast<std::int64_t>(std::llround(v));
      } else {
        rec[name] = v;
      }
    }
    records[i] = std::move(rec);
  }
  return records;
}

// ---- shared flag groups ----

struct ParamsFlags {
  std::int64_t r = 0;
  std::int64_t q = 0;
  double lambda = 0.0;
  double tau = 0.0;
  double x = 0.0;
  CLI::Option* opt_lambda = nullptr;
  CLI::Option* opt_tau = nullptr;
  CLI::Option* opt_x = nullptr;
};

void add_params_flags(CLI::App* cmd, ParamsFlags& pf, bool with_rate_form) {
  cmd->add_option("--r", pf.r, "Reorder point (>= 0)")->required();
  cmd->add_option("--q", pf.q, "Order quantity (>= 1)")->required();
  pf.opt_x = cmd->add_option("--x", pf.x, "Mean lead-time demand (= lambda*tau)");
  if (with_rate_form) {
    pf.opt_lambda = cmd->add_option("--lambda", pf.lambda, "Demand rate");
    pf.opt_tau = cmd->add_option("--tau", pf.tau, "Lead time");
    pf.opt_x->excludes(pf.opt_lambda);
    pf.opt_x->excludes(pf.opt_tau);
  } else {
    pf.opt_x->required();
  }
}

// Returns a params handle or nullptr with *code set.
rqlost_params* make_params(const ParamsFlags& pf, int* code) {
  const bool has_x = pf.opt_x->count() > 0;
  const bool has_rate = pf.opt_lambda && pf.opt_lambda->count() > 0;
  const bool has_tau = pf.opt_tau && pf.opt_tau->count() > 0;
  rqlost_params* p = nullptr;
  rqlost_status st;
  if (has_x && !has_rate && !has_tau) {
    st = rqlost_params_new_from_x(pf.r, pf.q, pf.x, &p);
  } else if (!has_x && has_rate && has_tau) {
    st = rqlost_params_new(pf.r, pf.q, pf.lambda, pf.tau, &p);
  } else {
    std::cerr << "error: supply either --x or both --lambda and --tau\n";
    *code = kExitUsage;
    return nullptr;
  }
  if (st != RQLOST_OK) {
    *code = fail_status(st);
    return nullptr;
  }
  *code = kExitOk;
  return p;
}

struct SimFlags {
  std::uint64_t demands = 1000000;
  std::int64_t warmup = -1;  // -1 = automatic
  std::uint32_t batches = 32;
  std::uint64_t seed = 1;
};

void add_sim_flags(CLI::App* cmd, SimFlags& sf) {
  cmd->add_option("--demands", sf.demands, "Measured (post-warm-up) arrivals")
      ->capture_default_str();
  cmd->add_option("--warmup", sf.warmup,
                  "Warm-up arrivals to discard (-1 = automatic)")
      ->capture_default_str();
  cmd->add_option("--batches", sf.batches, "Batch count for the 95% intervals")
      ->capture_default_str();
  cmd->add_option("--seed", sf.seed, "RNG seed")->capture_default_str();
}

rqlost_sim_config make_sim_config(const rqlost_params* p, const SimFlags& sf) {
  rqlost_sim_config cfg;
  rqlost_sim_config_init(p, &cfg);
  cfg.demands = sf.demands;
  if (sf.warmup >= 0) cfg.warmup_demands = static_cast<std::uint64_t>(sf.warmup);
  cfg.batches = sf.batches;
  cfg.seed = sf.seed;
  return cfg;
}

// ---- subcommand handlers ----

int run_bounds(const ParamsFlags& pf, const OutputOptions& out) {
  int code = kExitOk;
  rqlost_params* p = make_params(pf, &code);
  if (!p) return code;
  rqlost_bounds b;
  if (rqlost_status st = rqlost_compute_bounds(p, &b); st != RQLOST_OK) {
    rqlost_params_free(p);
    return fail_status(st);
  }
  ordered_json rec;
  rec["r"] = rqlost_params_reorder_point(p);
  rec["q"] = rqlost_params_order_quantity(p);
  rec["x"] = rqlost_params_mean_lead_time_demand(p);
  rec["loss"] = b.poisson_loss;
  rec["erlang"] = b.erlang;
  rec["lower_bound"] = b.lower;
  rec["upper_bound"] = b.upper;
  rec["service_level_lower"] = 1.0 - b.upper;
  rec["service_level_upper"] = 1.0 - b.lower;
  rec["gap"] = b.upper - b.lower;
  rqlost_params_free(p);
  return emit_records({rec}, false, out);
}

int run_convert(const ParamsFlags& pf, const CLI::Option* og,
                const CLI::Option* ol, const CLI::Option* op,
                const CLI::Option* ou, double gamma, double level,
                double position, double on_order, const OutputOptions& out) {
  const int given = (og->count() > 0) + (ol->count() > 0) + (op->count() > 0) +
                    (ou->count() > 0);
  if (given != 1) {
    std::cerr << "error: supply exactly one of --gamma, --L, --P, --U\n";
    return kExitUsage;
  }
  int code = kExitOk;
  rqlost_params* p = make_params(pf, &code);
  if (!p) return code;

  double g = gamma;
  rqlost_status st = RQLOST_OK;
  if (ol->count() > 0)
    st = rqlost_gamma_from_measure(p, RQLOST_MEASURE_LEVEL, level, &g);
  else if (op->count() > 0)
    st = rqlost_gamma_from_measure(p, RQLOST_MEASURE_POSITION, position, &g);
  else if (ou->count() > 0)
    st = rqlost_gamma_from_measure(p, RQLOST_MEASURE_ON_ORDER, on_order, &g);
  rqlost_measures m;
  if (st == RQLOST_OK) st = rqlost_measures_from_gamma(p, g, &m);
  if (st != RQLOST_OK) {
    rqlost_params_free(p);
    return fail_status(st);
  }
  ordered_json rec;
  rec["r"] = rqlost_params_reorder_point(p);
  rec["q"] = rqlost_params_order_quantity(p);
  rec["x"] = rqlost_params_mean_lead_time_demand(p);
  rec["gamma"] = m.gamma;
  rec["level"] = m.level;
  rec["position"] = m.position;
  rec["on_order"] = m.on_order;
  rqlost_params_free(p);
  return emit_records({rec}, false, out);
}

int run_simulate(const ParamsFlags& pf, const SimFlags& sf,
                 const OutputOptions& out) {
  int code = kExitOk;
  rqlost_params* p = make_params(pf, &code);
  if (!p) return code;
  const rqlost_sim_config cfg = make_sim_config(p, sf);
  rqlost_sim_estimate est;
  rqlost_bounds b;
  rqlost_status st = rqlost_simulate(p, &cfg, &est);
  if (st == RQLOST_OK) st = rqlost_compute_bounds(p, &b);
  if (st != RQLOST_OK) {
    rqlost_params_free(p);
    return fail_status(st);
  }
  ordered_json rec;
  rec["r"] = rqlost_params_reorder_point(p);
  rec["q"] = rqlost_params_order_quantity(p);
  rec["lambda"] = rqlost_params_demand_rate(p);
  rec["tau"] = rqlost_params_lead_time(p);
  rec["x"] = rqlost_params_mean_lead_time_demand(p);
  rec["demands"] = cfg.demands;
  rec["warmup_demands"] = cfg.warmup_demands;
  rec["batches"] = cfg.batches;
  rec["seed"] = cfg.seed;
  rec["gamma_lost"] = est.gamma_lost;
  rec["gamma_lost_hw"] = est.gamma_lost_hw;
  rec["gamma_time"] = est.gamma_time;
  rec["gamma_time_hw"] = est.gamma_time_hw;
  rec["level"] = est.level;
  rec["level_hw"] = est.level_hw;
  rec["on_order"] = est.on_order;
  rec["on_order_hw"] = est.on_order_hw;
  rec["position"] = est.position;
  rec["position_hw"] = est.position_hw;
  rec["lower_bound"] = b.lower;
  rec["upper_bound"] = b.upper;
  rqlost_params_free(p);
  return emit_records({rec}, false, out);
}

int run_table2(int threads, bool compare_paper, const OutputOptions& out) {
  rqlost_table* t = nullptr;
  if (rqlost_status st = rqlost_table2(threads, &t); st != RQLOST_OK)
    return fail_status(st);
  bool mismatch = false;
  if (compare_paper) {
    rqlost_table* ref = nullptr;
    if (rqlost_status st = rqlost_table2_reference(&ref); st != RQLOST_OK) {
      rqlost_table_free(t);
      return fail_status(st);
    }
    const std::size_t rows = rqlost_table_rows(t);
    const std::size_t cols = rqlost_table_cols(t);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t c = 2; c < cols; ++c) {
        const double got = rqlost_table_cell(t, i, c);
        const double want = rqlost_table_cell(ref, i, c);
        if (std::abs(got - want) > 1e-4) {
          std::cerr << "mismatch: r=" << rqlost_table_cell(t, i, 0)
                    << " K=" << rqlost_table_cell(t, i, 1) << " "
                    << rqlost_table_col_name(t, c) << " got=" << got
                    << " want=" << want << "\n";
          mismatch = true;
        }
      }
    }
    rqlost_table_free(ref);
  }
  const int code = emit_records(table_records(t), true, out);
  rqlost_table_free(t);
  if (code != kExitOk) return code;
  return mismatch ? kExitMismatch : kExitOk;
}

int run_figure1(std::int64_t r_max, double k_min, double k_max, double k_step,
                int threads, const OutputOptions& out) {
  rqlost_table* t = nullptr;
  if (rqlost_status st = rqlost_figure1(r_max, k_min, k_max, k_step, threads, &t);
      st != RQLOST_OK)
    return fail_status(st);
  const int code = emit_records(table_records(t), true, out);
  rqlost_table_free(t);
  return code;
}

int run_verify(const std::vector<std::int64_t>& rs,
               const std::vector<std::int64_t>& qs,
               const std::vector<double>& ks, const SimFlags& sf,
               double k_sigma, int threads, const OutputOptions& out) {
  std::vector<rqlost_verify_cell> cells;
  cells.reserve(rs.size() * qs.size() * ks.size());
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        const double x = ks[ki] * static_cast<double>(rs[ri]);
        rqlost_params* p = nullptr;
        if (rqlost_status st = rqlost_params_new(rs[ri], qs[qi], 1.0, x, &p);
            st != RQLOST_OK)
          return fail_status(st);
        rqlost_verify_cell cell;
        cell.reorder_point = rs[ri];
        cell.order_quantity = qs[qi];
        cell.demand_rate = 1.0;
        cell.lead_time = x;
        cell.sim = make_sim_config(p, sf);
        cell.sim.seed = rqlost_derive_seed(sf.seed, static_cast<std::uint64_t>(rs[ri]),
                                           static_cast<std::uint64_t>(qs[qi]),
                                           static_cast<std::uint64_t>(ki));
        rqlost_params_free(p);
        cells.push_back(cell);
      }
    }
  }
  rqlost_table* t = nullptr;
  if (rqlost_status st =
          rqlost_verify_grid(cells.data(), cells.size(), k_sigma, threads, &t);
      st != RQLOST_OK)
    return fail_status(st);

  std::vector<ordered_json> records = table_records(t);
  std::size_t failed = 0;
  std::size_t all_pass_col = 0;
  const std::size_t cols = rqlost_table_cols(t);
  for (std::size_t c = 0; c < cols; ++c)
    if (std::string(rqlost_table_col_name(t, c)) == "all_pass") all_pass_col = c;
  for (std::size_t i = 0; i < records.size(); ++i) {
    // the table's seed column is double-typed; re-emit the exact value
    records[i]["seed"] = cells[i].sim.seed;
    if (rqlost_table_cell(t, i, all_pass_col) == 0.0) ++failed;
  }
  rqlost_table_free(t);
  const int code = emit_records(std::move(records), true, out);
  if (code != kExitOk) return code;
  if (failed > 0) {
    std::cerr << "verification failed for " << failed << " of " << cells.size()
              << " cells\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_min_r(std::int64_t q, double x, double target, const OutputOptions& out) {
  std::int64_t r = 0;
  if (rqlost_status st = rqlost_search_min_r(q, x, target, &r); st != RQLOST_OK)
    return fail_status(st);
  ordered_json rec;
  rec["q"] = q;
  rec["x"] = x;
  rec["target"] = target;
  rec["min_r"] = r;
  return emit_records({rec}, false, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Guaranteed bounds, measure conversion and Monte Carlo verification for "
      "the (r,q) lost-sales inventory system with Poisson demand"};
  app.require_subcommand(0, 1);

  // bounds
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Guaranteed lower/upper bounds on the lost fraction");
  ParamsFlags bounds_pf;
  OutputOptions bounds_out;
  add_params_flags(cmd_bounds, bounds_pf, true);
  add_output_flags(cmd_bounds, bounds_out);

  // convert
  auto* cmd_convert = app.add_subcommand(
      "convert", "Convert any one performance measure into all four");
  ParamsFlags convert_pf;
  OutputOptions convert_out;
  double cv_gamma = 0.0, cv_level = 0.0, cv_position = 0.0, cv_on_order = 0.0;
  add_params_flags(cmd_convert, convert_pf, false);
  auto* og = cmd_convert->add_option("--gamma", cv_gamma,
                                     "Long-run fraction of sales lost");
  auto* ol = cmd_convert->add_option("--L", cv_level, "Average on-hand inventory");
  auto* op =
      cmd_convert->add_option("--P", cv_position, "Average inventory position");
  auto* ou = cmd_convert->add_option("--U", cv_on_order, "Average units on order");
  add_output_flags(cmd_convert, convert_out);

  // simulate
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Discrete-event simulation with batch-means intervals");
  ParamsFlags sim_pf;
  SimFlags sim_sf;
  OutputOptions sim_out;
  add_params_flags(cmd_simulate, sim_pf, true);
  add_sim_flags(cmd_simulate, sim_sf);
  add_output_flags(cmd_simulate, sim_out);

  // table2
  auto* cmd_table2 = app.add_subcommand(
      "table2", "Bound-quality aggregates over the standard (r, K) grid");
  int t2_threads = 0;
  bool t2_compare = false;
  OutputOptions t2_out;
  cmd_table2->add_option("--threads", t2_threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  cmd_table2->add_flag("--compare-paper", t2_compare,
                       "Diff against the embedded reference; exit 5 on mismatch");
  add_output_flags(cmd_table2, t2_out);

  // figure1
  auto* cmd_figure1 = app.add_subcommand(
      "figure1", "Worst bound gap per reorder point over a (K, q) grid");
  std::int64_t f1_rmax = 100;
  double f1_kmin = 0.5, f1_kmax = 1.5, f1_kstep = 0.01;
  int f1_threads = 0;
  OutputOptions f1_out;
  cmd_figure1->add_option("--r-max", f1_rmax, "Largest reorder point")
      ->capture_default_str();
  cmd_figure1->add_option("--k-min", f1_kmin, "Smallest K (x = K*r)")
      ->capture_default_str();
  cmd_figure1->add_option("--k-max", f1_kmax, "Largest K")->capture_default_str();
  cmd_figure1->add_option("--k-step", f1_kstep, "K grid step")
      ->capture_default_str();
  cmd_figure1->add_option("--threads", f1_threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_flags(cmd_figure1, f1_out);

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "Simulate a grid and grade it against the bounds; exit 5 on "
                "any failed cell");
  std::vector<std::int64_t> vf_r = {2, 4, 8};
  std::vector<std::int64_t> vf_q = {2, 3, 5};
  std::vector<double> vf_k = {0.5, 1.0, 2.0};
  SimFlags vf_sf;
  double vf_ksigma = 3.0;
  int vf_threads = 0;
  OutputOptions vf_out;
  cmd_verify->add_option("--r", vf_r, "Reorder points")
      ->delimiter(',')
      ->capture_default_str();
  cmd_verify->add_option("--q", vf_q, "Order quantities")
      ->delimiter(',')
      ->capture_default_str();
  cmd_verify->add_option("--k", vf_k, "Lead-time demand factors (x = K*r)")
      ->delimiter(',')
      ->capture_default_str();
  add_sim_flags(cmd_verify, vf_sf);
  cmd_verify->add_option("--k-sigma", vf_ksigma,
                         "Half-widths of slack for every check")
      ->capture_default_str();
  cmd_verify->add_option("--threads", vf_threads, "Worker threads (0 = auto)")
      ->capture_default_str();
  add_output_flags(cmd_verify, vf_out);

  // min-r
  auto* cmd_min_r = app.add_subcommand(
      "min-r", "Smallest reorder point whose guaranteed upper bound meets a "
               "target lost fraction");
  std::int64_t mr_q = 1;
  double mr_x = 0.0, mr_target = 0.0;
  OutputOptions mr_out;
  cmd_min_r->add_option("--q", mr_q, "Order quantity")->required();
  cmd_min_r->add_option("--x", mr_x, "Mean lead-time demand")->required();
  cmd_min_r->add_option("--target", mr_target, "Target lost fraction in (0,1)")
      ->required();
  add_output_flags(cmd_min_r, mr_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*cmd_bounds) return run_bounds(bounds_pf, bounds_out);
  if (*cmd_convert)
    return run_convert(convert_pf, og, ol, op, ou, cv_gamma, cv_level,
                       cv_position, cv_on_order, convert_out);
  if (*cmd_simulate) return run_simulate(sim_pf, sim_sf, sim_out);
  if (*cmd_table2) return run_table2(t2_threads, t2_compare, t2_out);
  if (*cmd_figure1)
    return run_figure1(f1_rmax, f1_kmin, f1_kmax, f1_kstep, f1_threads, f1_out);
  if (*cmd_verify)
    return run_verify(vf_r, vf_q, vf_k, vf_sf, vf_ksigma, vf_threads, vf_out);
  if (*cmd_min_r) return run_min_r(mr_q, mr_x, mr_target, mr_out);

  std::cerr << app.help();
  return kExitUsage;
}
