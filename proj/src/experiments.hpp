#pragma once

#include <cstdint>
#include <vector>

#include "bounds.hpp"
#include "simulate.hpp"

namespace rqlost {

// One row of the aggregate bound-quality sweep. Values follow the service
// level convention: SL% = 100 * (1 - gamma), so the lower bound on gamma
// yields the upper bound on the service level and vice versa. Diffs are
// 100 * (upper - lower), aggregated over q = 2..r.
struct AggregateRow {
  std::int64_t r;
  double k_factor;  // x = k_factor * r
  double avg_ub_sl_pct;
  double avg_lb_sl_pct;
  double avg_diff_pct;
  double max_diff_pct;
  double min_diff_pct;
};

// The 10x5 sweep: r in {2,4,...,1024} doubling, K in {0.5,0.75,1,1.5,2}.
std::vector<AggregateRow> table2(int threads = 0);

// Reference values this sweep reproduces, quoted to four decimals.
const std::vector<AggregateRow>& table2_reference();

struct FigurePoint {
  std::int64_t r;
  double worst_gap;  // max of upper - lower over the (K, q) sub-grid
};

// Worst-case bound gap per reorder point, scanning K = k_min, k_min+k_step,
// ..., <= k_max (x = K*r) and q = 2..r; r runs 2..r_max.
std::vector<FigurePoint> figure1(std::int64_t r_max = 100, double k_min = 0.5,
                                 double k_max = 1.5, double k_step = 0.01,
                                 int threads = 0);

struct VerifyCell {
  SystemParams params;
  SimConfig sim;
};

struct VerifyResult {
  std::int64_t r;
  std::int64_t q;
  double x;
  std::uint64_t seed;
  SimEstimate estimate;
  double lower;
  double upper;
  bool bracket_pass;       // lower - k*hw <= gamma_lost <= upper + k*hw
  int equality_case;       // 0 none, 1 q == 1 (upper is exact), 2 r < q (lower is exact)
  double equality_gap;     // |gamma_lost - exact bound| when equality_case != 0
  double equality_allowed;
  bool equality_pass;
  ConsistencyReport identities;
  bool all_pass;
};

// Simulates each cell and grades it against the guaranteed bounds, the exact
// special cases, and the linked-measure identities, all at k_sigma half-widths.
std::vector<VerifyResult> verify_grid(const std::vector<VerifyCell>& cells,
                                      double k_sigma, int threads = 0);

// Smallest reorder point whose guaranteed upper bound meets the target lost
// fraction, for fixed q and x. Scans r upward with an O(1) incremental
// recurrence per step; throws unreachable_target if nothing up to r = 10^6
// qualifies.
std::int64_t search_min_reorder_point(std::int64_t q, double x,
                                      double target_lost_fraction);

}  // namespace rqlost
