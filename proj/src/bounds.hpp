#pragma once

#include <cstdint>

#include "params.hpp"

namespace rqlost {

// Erlang blocking probability B(servers, x) for offered load x, via the
// standard forward recurrence B_0 = 1, B_n = x B_{n-1} / (n + x B_{n-1}).
double erlang_loss(std::int64_t servers, double x);

// Guaranteed bounds on gamma, the long-run fraction of sales lost (equal to
// the long-run fraction of time out of stock). Both are functions of
// (r, q, x) only.
//
//   lower = LOSS / (LOSS + C)          with LOSS = E[(X-r)^+], C the cycle stock
//   upper = c * rho / (1 + c * rho)    with c = (r+1)/C, rho = B/(1-B) at r+1 servers
//
// lower == gamma exactly when r < q; upper == gamma exactly when q == 1.
double lost_fraction_lower_bound(std::int64_t r, std::int64_t q, double x);
double lost_fraction_upper_bound(std::int64_t r, std::int64_t q, double x);

struct BoundsResult {
  double loss;    // E[(X-r)^+]
  double erlang;  // B(r+1, x)
  double lower;   // guaranteed lower bound on gamma
  double upper;   // guaranteed upper bound on gamma
};

BoundsResult compute_bounds(const SystemParams& p);

// The four linked performance measures. Any one of them pins down the other
// three through gamma:
//   position = (1-gamma) * ladder_mean + gamma * cycle_stock
//   on_order = (1-gamma) * x
//   level    = position - on_order
struct Measures {
  double gamma;     // long-run fraction of sales lost
  double level;     // time-average on-hand inventory
  double position;  // time-average inventory position
  double on_order;  // time-average units on order
};

enum class MeasureKind { Level, Position, OnOrder };

Measures measures_from_gamma(const SystemParams& p, double gamma);

// Inverts one measure back to gamma. Throws std::domain_error when the value
// lies outside the interval the measure sweeps over gamma in [0,1], or when
// the measure does not depend on gamma for these parameters (the relation is
// linear in gamma and its slope can vanish).
double gamma_from_measure(const SystemParams& p, MeasureKind kind, double value);

}  // namespace rqlost
