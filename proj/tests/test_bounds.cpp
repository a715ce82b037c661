#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "params.hpp"
#include "poisson.hpp"

using namespace rqlost;

namespace {
// Spot values frozen from a 60-digit arbitrary-precision run.
constexpr double kLoss_1_2 = 0.103638323514326964786571310484;
constexpr double kLoss_4_4 = 0.781467259252658359198635574325;
constexpr double kLoss_05_2 = 0.016326649281583559009498837478;
constexpr double kLoss_10_20 = 0.00277820652140711361563686268176;
constexpr double kLoss_100_50 = 50.0000000223460457104655638129;
constexpr double kLoss_1_50 = 2.4655701971777419e-67;
constexpr double kErlang_9_8 = 0.1731408276770114872305304165;
constexpr double kLb_4_3_4 = 0.115235719554115905431523742261;
constexpr double kLb_2_2_1 = 0.0252552284933268276651210109042;
constexpr double kUb_8_5_8 = 0.158572278463286637673558654485;
}  // namespace

TEST_CASE("poisson_loss spot values") {
  CHECK(poisson_loss(1.0, 2) == doctest::Approx(kLoss_1_2).epsilon(1e-13));
  CHECK(poisson_loss(4.0, 4) == doctest::Approx(kLoss_4_4).epsilon(1e-13));
  CHECK(poisson_loss(0.5, 2) == doctest::Approx(kLoss_05_2).epsilon(1e-13));
  CHECK(poisson_loss(10.0, 20) == doctest::Approx(kLoss_10_20).epsilon(1e-13));
  CHECK(poisson_loss(100.0, 50) == doctest::Approx(kLoss_100_50).epsilon(1e-13));
  CHECK(poisson_loss(1.0, 50) == doctest::Approx(kLoss_1_50).epsilon(1e-12));
  // far-left reorder points: loss approaches x - r
  CHECK(poisson_loss(8192.0, 4096) == doctest::Approx(4096.0).epsilon(1e-13));
  CHECK(poisson_loss(2048.0, 1024) == doctest::Approx(1024.0).epsilon(1e-13));
  // exact edges
  CHECK(poisson_loss(3.25, 0) == 3.25);
  CHECK(poisson_loss(0.0, 7) == 0.0);
}

TEST_CASE("poisson_loss agrees with the naive series") {
  const std::int64_t rs[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 50};
  const double xs[] = {0.1, 0.5, 1, 2, 5, 10, 25, 50, 100};
  for (std::int64_t r : rs) {
    for (double x : xs) {
      const double got = poisson_loss(x, r);
      const double want = static_cast<double>(
          testoracle::loss_brute(static_cast<long double>(x), r));
      if (want < 1e-300) {
        CHECK(got < 1e-300);
      } else {
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("poisson_loss differences equal the independent upper tail") {
  // LOSS(x,r) - LOSS(x,r+1) = P(X >= r+1), where the right side comes from
  // the regularized incomplete gamma rather than this library.
  const std::int64_t rs[] = {0, 1, 2, 3, 5, 10, 20, 50, 100, 200};
  const double xs[] = {0.5, 1, 5, 20, 100, 400};
  for (std::int64_t r : rs) {
    for (double x : xs) {
      const double diff = poisson_loss(x, r) - poisson_loss(x, r + 1);
      const double tail =
          boost::math::gamma_p(static_cast<double>(r + 1), x);
      if (tail < 1e-280) {
        CHECK(diff < 1e-270);
      } else {
        CHECK(diff == doctest::Approx(tail).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("poisson_loss monotonicity") {
  for (double x : {0.5, 3.0, 17.0, 64.0}) {
    double prev = poisson_loss(x, 0);
    CHECK(prev == x);
    for (std::int64_t r = 1; r <= 80; ++r) {
      const double cur = poisson_loss(x, r);
      CHECK(cur <= prev);
      CHECK(cur >= 0.0);
      prev = cur;
    }
  }
  for (std::int64_t r : {0, 3, 11}) {
    double prev = 0.0;
    for (double x = 0.25; x <= 32.0; x *= 2.0) {
      const double cur = poisson_loss(x, r);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("poisson tail and pmf are consistent") {
  CHECK(poisson_tail(2.5, 0) == 1.0);
  CHECK(poisson_tail(2.5, -3) == 1.0);
  CHECK(poisson_tail(0.0, 1) == 0.0);
  CHECK(poisson_pmf(0.0, 0) == 1.0);
  CHECK(poisson_pmf(2.0, -1) == 0.0);
  for (double x : {0.3, 1.0, 7.5, 40.0}) {
    for (std::int64_t m : {1, 2, 5, 9, 30, 55}) {
      const double lhs = poisson_tail(x, m) - poisson_tail(x, m + 1);
      const double rhs = poisson_pmf(x, m);
      if (rhs > 1e-280) CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
    CHECK(poisson_tail(x, 1) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-14));
  }
}

TEST_CASE("poisson input validation") {
  CHECK_THROWS_AS(poisson_loss(-1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(poisson_loss(1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(poisson_loss(std::nan(""), 2), std::invalid_argument);
  CHECK_THROWS_AS(poisson_loss(std::numeric_limits<double>::infinity(), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(poisson_tail(-0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(poisson_pmf(-0.5, 2), std::invalid_argument);
}

TEST_CASE("erlang_loss spot values and input validation") {
  CHECK(erlang_loss(1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(erlang_loss(3, 1.0) == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(erlang_loss(4, 2.0) == doctest::Approx(2.0 / 21.0).epsilon(1e-14));
  CHECK(erlang_loss(9, 8.0) == doctest::Approx(kErlang_9_8).epsilon(1e-13));
  CHECK(erlang_loss(5, 0.0) == 0.0);
  CHECK_THROWS_AS(erlang_loss(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(erlang_loss(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(erlang_loss(3, std::nan("")), std::invalid_argument);
}

TEST_CASE("erlang_loss recurrence matches the direct sum") {
  for (std::int64_t s = 1; s <= 30; ++s) {
    for (double x : {0.01, 0.1, 1.0, 2.5, 10.0, 30.0, 60.0}) {
      const double got = erlang_loss(s, x);
      const double want = static_cast<double>(
          testoracle::erlang_direct(s, static_cast<long double>(x)));
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("lower bound spot values and closed form") {
  CHECK(lost_fraction_lower_bound(2, 2, 1.0) ==
        doctest::Approx(kLb_2_2_1).epsilon(1e-13));
  CHECK(lost_fraction_lower_bound(4, 3, 4.0) ==
        doctest::Approx(kLb_4_3_4).epsilon(1e-13));
  CHECK(lost_fraction_lower_bound(5, 3, 0.0) == 0.0);
  // r < q: cycle stock is exactly q
  const double loss = poisson_loss(2.0, 1);
  CHECK(lost_fraction_lower_bound(1, 5, 2.0) ==
        doctest::Approx(loss / (loss + 5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(lost_fraction_lower_bound(-1, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lost_fraction_lower_bound(2, 0, 1.0), std::invalid_argument);
}

TEST_CASE("upper bound spot values and q=1 equality") {
  CHECK(lost_fraction_upper_bound(2, 2, 1.0) ==
        doctest::Approx(1.0 / 21.0).epsilon(1e-13));
  CHECK(lost_fraction_upper_bound(8, 5, 8.0) ==
        doctest::Approx(kUb_8_5_8).epsilon(1e-13));
  CHECK(lost_fraction_upper_bound(4, 2, 0.0) == 0.0);
  for (std::int64_t r : {0, 1, 3, 7}) {
    for (double x : {0.5, 2.0, 8.0}) {
      CHECK(lost_fraction_upper_bound(r, 1, x) ==
            doctest::Approx(erlang_loss(r + 1, x)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(lost_fraction_upper_bound(2, 2, -1.0), std::invalid_argument);
}

TEST_CASE("bounds are ordered probabilities across a wide grid") {
  for (std::int64_t r = 0; r <= 64; r += (r < 8 ? 1 : 7)) {
    for (std::int64_t q = 1; q <= r + 4; ++q) {
      const double rr = static_cast<double>(r);
      for (double x : {0.3, 0.5 * rr + 0.25, rr + 0.5, 2.0 * rr + 1.0}) {
        const double lb = lost_fraction_lower_bound(r, q, x);
        const double ub = lost_fraction_upper_bound(r, q, x);
        CHECK(lb >= 0.0);
        CHECK(ub <= 1.0);
        // the bounds may only touch at the exact cases, never cross
        CHECK(lb <= ub * (1.0 + 1e-12) + 1e-15);
      }
    }
  }
}

TEST_CASE("compute_bounds bundles all four quantities") {
  const BoundsResult b = compute_bounds(SystemParams::from_mean_lead_time_demand(2, 2, 1.0));
  CHECK(b.loss == doctest::Approx(kLoss_1_2).epsilon(1e-13));
  CHECK(b.erlang == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(b.lower == doctest::Approx(kLb_2_2_1).epsilon(1e-13));
  CHECK(b.upper == doctest::Approx(1.0 / 21.0).epsilon(1e-13));
  CHECK(b.lower <= b.upper);
  // bounds collapse together as x -> 0 (both exact at r=0, q=1)
  const BoundsResult tiny =
      compute_bounds(SystemParams::from_mean_lead_time_demand(0, 1, 1e-12));
  CHECK(tiny.lower == doctest::Approx(tiny.upper).epsilon(1e-10));
  CHECK(tiny.upper < 1e-11);
}

TEST_CASE("SystemParams validation and derived quantities") {
  CHECK_THROWS_AS(SystemParams(-1, 2, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 2, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 2, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 2, std::nan(""), 1.0), std::invalid_argument);

  const SystemParams p(5, 3, 2.0, 4.0);
  CHECK(p.x() == 8.0);
  CHECK(p.cycle_stock() == 6);
  CHECK(p.max_outstanding_orders() == 2);
  CHECK(p.ladder_mean() == 7.0);

  CHECK(SystemParams(2, 2, 1, 1).cycle_stock() == 4);
  CHECK(SystemParams(4, 3, 1, 1).cycle_stock() == 6);
  CHECK(SystemParams(0, 1, 1, 1).cycle_stock() == 1);
  CHECK(SystemParams(1, 3, 1, 1).cycle_stock() == 3);
  CHECK(SystemParams::from_mean_lead_time_demand(2, 2, 7.5).x() == 7.5);

  for (std::int64_t r = 0; r <= 40; ++r) {
    for (std::int64_t q = 1; q <= 12; ++q) {
      const std::int64_t c = SystemParams(r, q, 1, 1).cycle_stock();
      CHECK(c > r);
      CHECK(c <= r + q);
      CHECK(c % q == 0);
    }
  }
}

TEST_CASE("measures from gamma and back") {
  const SystemParams p(2, 2, 1.0, 1.0);
  const Measures at0 = measures_from_gamma(p, 0.0);
  CHECK(at0.position == 3.5);
  CHECK(at0.on_order == 1.0);
  CHECK(at0.level == 2.5);
  const Measures at1 = measures_from_gamma(p, 1.0);
  CHECK(at1.position == 4.0);
  CHECK(at1.on_order == 0.0);
  CHECK(at1.level == 4.0);

  const std::vector<SystemParams> cases = {
      SystemParams::from_mean_lead_time_demand(2, 2, 1.0),
      SystemParams::from_mean_lead_time_demand(4, 3, 4.0),
      SystemParams::from_mean_lead_time_demand(8, 5, 8.0),
      SystemParams::from_mean_lead_time_demand(0, 1, 0.5),
      SystemParams::from_mean_lead_time_demand(7, 7, 3.2),
  };
  for (const SystemParams& c : cases) {
    const double ladder = c.ladder_mean();
    const double cycle = static_cast<double>(c.cycle_stock());
    for (double g = 0.0; g <= 1.0; g += 0.1) {
      const Measures m = measures_from_gamma(c, g);
      // independent form of the level relation
      const double level_direct = (1.0 - g) * (ladder - c.x()) + g * cycle;
      CHECK(m.level == doctest::Approx(level_direct).epsilon(1e-12));
      CHECK(m.on_order == doctest::Approx((1.0 - g) * c.x()).epsilon(1e-13));
      CHECK(m.position == doctest::Approx(m.level + m.on_order).epsilon(1e-13));
      // round trips through every invertible measure
      CHECK(gamma_from_measure(c, MeasureKind::OnOrder, m.on_order) ==
            doctest::Approx(g).epsilon(1e-12));
      if (cycle != ladder)
        CHECK(gamma_from_measure(c, MeasureKind::Position, m.position) ==
              doctest::Approx(g).epsilon(1e-12));
      if (cycle - ladder + c.x() != 0.0)
        CHECK(gamma_from_measure(c, MeasureKind::Level, m.level) ==
              doctest::Approx(g).epsilon(1e-12));
    }
  }
}

TEST_CASE("measure conversion rejects bad input") {
  const SystemParams p(2, 2, 1.0, 1.0);
  CHECK_THROWS_AS(measures_from_gamma(p, 1.5), std::domain_error);
  CHECK_THROWS_AS(measures_from_gamma(p, -0.5), std::domain_error);
  CHECK_THROWS_AS(measures_from_gamma(p, std::nan("")), std::domain_error);
  // outside the interval the measure sweeps
  CHECK_THROWS_AS(gamma_from_measure(p, MeasureKind::OnOrder, 1.5),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_from_measure(p, MeasureKind::OnOrder, -0.1),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_from_measure(p, MeasureKind::Position, 5.0),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_from_measure(p, MeasureKind::Level, 100.0),
                  std::domain_error);

  // position is flat in gamma when the cycle stock equals the ladder mean
  const SystemParams degenerate_p(1, 3, 1.0, 1.0);
  CHECK(degenerate_p.cycle_stock() == 3);
  CHECK(degenerate_p.ladder_mean() == 3.0);
  CHECK_THROWS_AS(gamma_from_measure(degenerate_p, MeasureKind::Position, 3.0),
                  std::domain_error);
  // level is flat when x equals ladder mean minus cycle stock
  const SystemParams degenerate_l(2, 3, 1.0, 1.0);
  CHECK_THROWS_AS(gamma_from_measure(degenerate_l, MeasureKind::Level, 3.0),
                  std::domain_error);
  // on-order stays invertible there
  CHECK(gamma_from_measure(degenerate_l, MeasureKind::OnOrder, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
}
