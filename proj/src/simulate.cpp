#include "simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "compensated.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "stats.hpp"

namespace rqlost {

std::uint64_t default_warmup(const SystemParams& p) {
  const auto cycles = 10ull * static_cast<std::uint64_t>(p.r() + p.q());
  return cycles > 10000ull ? cycles : 10000ull;
}

SimState initial_state(const SystemParams& p) {
  SimState s;
  s.on_hand = p.r() + p.q();
  return s;
}

namespace {

void validate_config(const SimConfig& cfg) {
  if (cfg.batches < 10)
    throw std::invalid_argument("simulate: need at least 10 batches");
  if (cfg.demands < 100ull * cfg.batches)
    throw std::invalid_argument("simulate: need at least 100 demands per batch");
}

}  // namespace

SimEstimate simulate(const SystemParams& p, const SimConfig& cfg) {
  validate_config(cfg);
  const std::int64_t r = p.r();
  const std::int64_t q = p.q();
  const std::int64_t cycle = p.cycle_stock();
  const std::int64_t max_orders = p.max_outstanding_orders();
  const double lambda = p.demand_rate();
  const double tau = p.lead_time();

  SplitMix64 rng(cfg.seed);
  SimState st = initial_state(p);

  // Lifetime unit conservation: on_hand == start + q*deliveries - served.
  const std::int64_t start_units = st.on_hand;
  std::int64_t deliveries = 0;
  std::int64_t served = 0;

  // Time integrals over the measured window, piecewise constant between
  // events, accumulated with compensation.
  CompensatedSum<double> int_stockout;
  CompensatedSum<double> int_level;
  CompensatedSum<double> int_on_order;
  CompensatedSum<double> int_position;

  double last_epoch = 0.0;
  bool measuring = cfg.warmup_demands == 0;
  double measure_start = 0.0;
  std::uint64_t warmup_left = cfg.warmup_demands;
  std::uint64_t measured_arrivals = 0;
  std::uint64_t lost = 0;

  // Batches split the measured arrivals as evenly as possible; the first
  // (demands % batches) batches carry one extra arrival.
  const std::uint64_t k = cfg.batches;
  const std::uint64_t base = cfg.demands / k;
  const std::uint64_t extra = cfg.demands % k;
  std::vector<double> bm_gamma_time, bm_gamma_lost, bm_level, bm_on_order,
      bm_position;
  bm_gamma_time.reserve(k);
  bm_gamma_lost.reserve(k);
  bm_level.reserve(k);
  bm_on_order.reserve(k);
  bm_position.reserve(k);

  std::uint64_t batch_index = 0;
  std::uint64_t batch_quota = base + (0 < extra ? 1 : 0);
  std::uint64_t batch_arrivals = 0;
  std::uint64_t batch_lost = 0;
  double batch_start = 0.0;
  double snap_stockout = 0.0, snap_level = 0.0, snap_on_order = 0.0,
         snap_position = 0.0;

  auto open_batch = [&] {
    batch_arrivals = 0;
    batch_lost = 0;
    batch_start = st.clock;
    snap_stockout = int_stockout.value();
    snap_level = int_level.value();
    snap_on_order = int_on_order.value();
    snap_position = int_position.value();
  };

  auto close_batch = [&] {
    const double dur = st.clock - batch_start;
    if (!(dur > 0.0)) throw internal_error("simulate: zero-length batch");
    bm_gamma_time.push_back((int_stockout.value() - snap_stockout) / dur);
    bm_level.push_back((int_level.value() - snap_level) / dur);
    bm_on_order.push_back((int_on_order.value() - snap_on_order) / dur);
    bm_position.push_back((int_position.value() - snap_position) / dur);
    bm_gamma_lost.push_back(static_cast<double>(batch_lost) /
                            static_cast<double>(batch_arrivals));
  };

  auto advance_to = [&](double t) {
    const double dt = t - last_epoch;
    if (measuring && dt > 0.0) {
      if (st.on_hand == 0) int_stockout.add(dt);
      int_level.add(static_cast<double>(st.on_hand) * dt);
      int_on_order.add(
          static_cast<double>(q * static_cast<std::int64_t>(st.pipeline.size())) * dt);
      int_position.add(static_cast<double>(st.position(q)) * dt);
    }
    last_epoch = t;
  };

  auto check_invariants = [&] {
    const std::int64_t pos = st.position(q);
    if (pos <= r || pos > r + q)
      throw internal_error("simulate: inventory position left (r, r+q]");
    if (static_cast<std::int64_t>(st.pipeline.size()) > max_orders)
      throw internal_error("simulate: outstanding orders exceed floor((r+q)/q)");
    if (st.on_hand != start_units + q * deliveries - served)
      throw internal_error("simulate: unit conservation violated");
  };

  if (measuring) open_batch();
  double next_demand = rng.next_exponential(lambda);

  while (true) {
    if (!st.pipeline.empty() && st.pipeline.front() <= next_demand) {
      // Delivery; ties against a demand resolve delivery first.
      const double t = st.pipeline.front();
      advance_to(t);
      st.clock = t;
      st.pipeline.pop_front();
      st.on_hand += q;
      ++deliveries;
      check_invariants();
      continue;
    }

    advance_to(next_demand);
    st.clock = next_demand;
    next_demand = st.clock + rng.next_exponential(lambda);

    const bool was_lost = st.on_hand == 0;
    if (!was_lost) {
      --st.on_hand;
      ++served;
      if (st.position(q) == r) {
        if (!st.pipeline.empty() && st.pipeline.back() > st.clock + tau)
          throw internal_error("simulate: pipeline epochs out of order");
        st.pipeline.push_back(st.clock + tau);
      }
      if (st.on_hand == 0 && st.position(q) != cycle)
        throw internal_error("simulate: stockout entered off the cycle stock point");
    }
    check_invariants();

    if (!measuring) {
      if (--warmup_left == 0) {
        measuring = true;
        measure_start = st.clock;
        last_epoch = st.clock;
        open_batch();
      }
      continue;
    }

    ++measured_arrivals;
    ++batch_arrivals;
    if (was_lost) {
      ++lost;
      ++batch_lost;
    }
    if (batch_arrivals == batch_quota) {
      close_batch();
      ++batch_index;
      if (batch_index == k) break;
      batch_quota = base + (batch_index < extra ? 1 : 0);
      open_batch();
    }
  }

  const double total_time = st.clock - measure_start;
  if (!(total_time > 0.0)) throw internal_error("simulate: empty measurement window");

  SimEstimate est;
  est.gamma_time = int_stockout.value() / total_time;
  est.level = int_level.value() / total_time;
  est.on_order = int_on_order.value() / total_time;
  est.position = int_position.value() / total_time;
  est.gamma_lost =
      static_cast<double>(lost) / static_cast<double>(measured_arrivals);
  est.gamma_time_hw = batch_means(bm_gamma_time).half_width;
  est.gamma_lost_hw = batch_means(bm_gamma_lost).half_width;
  est.level_hw = batch_means(bm_level).half_width;
  est.on_order_hw = batch_means(bm_on_order).half_width;
  est.position_hw = batch_means(bm_position).half_width;
  est.demands_observed = measured_arrivals;
  return est;
}

ConsistencyReport check_measure_identities(const SystemParams& p,
                                           const SimEstimate& est,
                                           double k_sigma) {
  if (!std::isfinite(k_sigma) || !(k_sigma > 0.0))
    throw std::invalid_argument("check_measure_identities: k_sigma must be positive");
  const double x = p.x();
  const double ladder = p.ladder_mean();
  const double cycle = static_cast<double>(p.cycle_stock());
  const double gt = est.gamma_time;

  // Each expectation is linear in gamma_time, so the uncertainty of the
  // right-hand side is the slope times the gamma_time half-width.
  ConsistencyReport rep;
  rep.on_order.observed = std::abs(est.on_order - (1.0 - gt) * x);
  rep.on_order.allowed = k_sigma * (est.on_order_hw + x * est.gamma_time_hw);
  rep.position.observed =
      std::abs(est.position - ((1.0 - gt) * ladder + gt * cycle));
  rep.position.allowed =
      k_sigma * (est.position_hw + std::abs(cycle - ladder) * est.gamma_time_hw);
  rep.level.observed = std::abs(
      est.level - ((1.0 - gt) * (ladder - x) + gt * cycle));
  rep.level.allowed =
      k_sigma *
      (est.level_hw + std::abs(cycle - ladder + x) * est.gamma_time_hw);
  rep.pasta.observed = std::abs(est.gamma_time - est.gamma_lost);
  rep.pasta.allowed = k_sigma * (est.gamma_time_hw + est.gamma_lost_hw);

  for (IdentityCheck* c : {&rep.on_order, &rep.position, &rep.level, &rep.pasta})
    c->pass = c->observed <= c->allowed;
  rep.all_pass = rep.on_order.pass && rep.position.pass && rep.level.pass &&
                 rep.pasta.pass;
  return rep;
}

}  // namespace rqlost
