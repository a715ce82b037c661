#pragma once

#include <cstdint>
#include <deque>

#include "params.hpp"

namespace rqlost {

struct SimConfig {
  std::uint64_t demands = 1000000;   // measured (post-warm-up) customer arrivals
  std::uint64_t warmup_demands = 0;  // arrivals discarded before measurement
  std::uint32_t batches = 32;        // batch count for the batch-means intervals
  std::uint64_t seed = 1;
};

// Warm-up long enough to forget the all-stocked start: 10 position cycles or
// 10^4 arrivals, whichever is larger.
std::uint64_t default_warmup(const SystemParams& p);

// Simulator state between events. pipeline holds the arrival epochs of
// outstanding orders in FIFO order; position() is on-hand plus on-order.
struct SimState {
  double clock = 0.0;
  std::int64_t on_hand = 0;
  std::deque<double> pipeline;

  std::int64_t position(std::int64_t q) const {
    return on_hand + q * static_cast<std::int64_t>(pipeline.size());
  }
};

// Fresh system: every unit on the shelf, nothing on order.
SimState initial_state(const SystemParams& p);

struct SimEstimate {
  double gamma_time;  // fraction of time with zero on-hand stock
  double gamma_lost;  // lost demands / all demands
  double level;       // time-average on-hand inventory
  double on_order;    // time-average units on order
  double position;    // time-average inventory position
  // 95% batch-means half-widths for the five estimates above.
  double gamma_time_hw;
  double gamma_lost_hw;
  double level_hw;
  double on_order_hw;
  double position_hw;
  std::uint64_t demands_observed;
};

// Event-driven run over cfg.demands measured arrivals. Deterministic given
// cfg.seed. Ties between a delivery and a demand resolve delivery first.
// Integer state invariants are checked on every event and throw
// internal_error when violated.
SimEstimate simulate(const SystemParams& p, const SimConfig& cfg);

struct IdentityCheck {
  double observed;  // |lhs - rhs|
  double allowed;   // k_sigma * combined half-width
  bool pass;
};

// Cross-checks the linked analytic identities on a finished run:
//   on_order: U vs (1 - gamma_time) * x
//   position: P vs the ladder/cycle-stock mixture at gamma_time
//   level:    L vs the closed form at gamma_time
//   pasta:    fraction of time out of stock vs fraction of sales lost
struct ConsistencyReport {
  IdentityCheck on_order;
  IdentityCheck position;
  IdentityCheck level;
  IdentityCheck pasta;
  bool all_pass;
};

ConsistencyReport check_measure_identities(const SystemParams& p,
                                           const SimEstimate& est,
                                           double k_sigma);

}  // namespace rqlost
