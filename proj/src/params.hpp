#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rqlost {

// One (r,q) continuous-review lost-sales system: a replenishment order of q
// units is placed whenever the inventory position drops to the reorder point
// r, demand is unit Poisson with the given rate, and every order arrives
// after a constant lead time. Unmet demand is lost.
//
// Every long-run fraction-type quantity depends only on (r, q, x) where
// x = demand_rate * lead_time is the mean lead-time demand.
class SystemParams {
 public:
  SystemParams(std::int64_t reorder_point, std::int64_t order_quantity,
               double demand_rate, double lead_time)
      : r_(reorder_point),
        q_(order_quantity),
        lambda_(demand_rate),
        tau_(lead_time) {
    if (r_ < 0) throw std::invalid_argument("reorder point must be >= 0");
    if (q_ < 1) throw std::invalid_argument("order quantity must be >= 1");
    if (!std::isfinite(lambda_) || !(lambda_ > 0.0))
      throw std::invalid_argument("demand rate must be positive and finite");
    if (!std::isfinite(tau_) || !(tau_ > 0.0))
      throw std::invalid_argument("lead time must be positive and finite");
  }

  // For closed-form work only x matters; any (rate, lead time) pair with the
  // same product is equivalent.
  static SystemParams from_mean_lead_time_demand(std::int64_t reorder_point,
                                                 std::int64_t order_quantity,
                                                 double x) {
    return SystemParams(reorder_point, order_quantity, x, 1.0);
  }

  std::int64_t r() const { return r_; }
  std::int64_t q() const { return q_; }
  double demand_rate() const { return lambda_; }
  double lead_time() const { return tau_; }
  double x() const { return lambda_ * tau_; }

  // q * floor((r+q)/q): the unique point of the position ladder
  // {r+1, ..., r+q} that is a multiple of q. The inventory position sits
  // here whenever on-hand stock is zero. Always in (r, r+q].
  std::int64_t cycle_stock() const { return q_ * ((r_ + q_) / q_); }

  // Orders outstanding can never exceed floor((r+q)/q).
  std::int64_t max_outstanding_orders() const { return (r_ + q_) / q_; }

  // Mean of the position ladder, r + (q+1)/2; the position is uniform on
  // the ladder while stock is positive.
  double ladder_mean() const {
    return static_cast<double>(r_) + 0.5 * (static_cast<double>(q_) + 1.0);
  }

 private:
  std::int64_t r_;
  std::int64_t q_;
  double lambda_;
  double tau_;
};

}  // namespace rqlost
