#include "bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "poisson.hpp"

namespace rqlost {
namespace {

void validate_rq(std::int64_t r, std::int64_t q) {
  if (r < 0) throw std::invalid_argument("reorder point must be >= 0");
  if (q < 1) throw std::invalid_argument("order quantity must be >= 1");
}

double clamp_unit(double v, const char* what) {
  if (v >= 0.0 && v <= 1.0) return v;
  if (v > -1e-12 && v < 0.0) return 0.0;
  if (v > 1.0 && v < 1.0 + 1e-12) return 1.0;
  throw internal_error(std::string(what) + " fell outside [0,1]");
}

// 1/B(n, x) - offset form: L_n = (1 - B_n) / B_n, computed by
// L_0 = 0, L_n = (n/x) (1 + L_{n-1}). Stays exact as B -> 1 (L -> 0) and
// saturates to +inf harmlessly as B -> 0, so no guard division is needed.
double erlang_odds_inverse(std::int64_t servers, double x) {
  double odds_inv = 0.0;
  for (std::int64_t n = 1; n <= servers; ++n) {
    odds_inv = static_cast<double>(n) / x * (1.0 + odds_inv);
  }
  return odds_inv;
}

}  // namespace

double erlang_loss(std::int64_t servers, double x) {
  if (servers < 1) throw std::invalid_argument("erlang_loss: servers must be >= 1");
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument("erlang_loss: offered load must be finite and >= 0");
  double b = 1.0;
  for (std::int64_t n = 1; n <= servers; ++n) {
    b = x * b / (static_cast<double>(n) + x * b);
  }
  return clamp_unit(b, "erlang_loss");
}

double lost_fraction_lower_bound(std::int64_t r, std::int64_t q, double x) {
  validate_rq(r, q);
  const double loss = poisson_loss(x, r);
  if (loss == 0.0) return 0.0;
  const double cycle = static_cast<double>(q * ((r + q) / q));
  return clamp_unit(loss / (loss + cycle), "lost_fraction_lower_bound");
}

double lost_fraction_upper_bound(std::int64_t r, std::int64_t q, double x) {
  validate_rq(r, q);
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument("mean lead-time demand must be finite and >= 0");
  if (x == 0.0) return 0.0;
  const double cycle = static_cast<double>(q * ((r + q) / q));
  const double c = static_cast<double>(r + 1) / cycle;
  // c * rho / (1 + c * rho) with rho = B/(1-B), written through the inverse
  // odds so that B near 1 loses nothing.
  const double odds_inv = erlang_odds_inverse(r + 1, x);
  return clamp_unit(c / (c + odds_inv), "lost_fraction_upper_bound");
}

BoundsResult compute_bounds(const SystemParams& p) {
  BoundsResult res;
  res.loss = poisson_loss(p.x(), p.r());
  res.erlang = erlang_loss(p.r() + 1, p.x());
  res.lower = lost_fraction_lower_bound(p.r(), p.q(), p.x());
  res.upper = lost_fraction_upper_bound(p.r(), p.q(), p.x());
  if (res.lower > res.upper) {
    if (res.lower - res.upper > 1e-12)
      throw internal_error("bounds crossed by more than rounding slack");
    res.lower = res.upper;
  }
  return res;
}

Measures measures_from_gamma(const SystemParams& p, double gamma) {
  if (!std::isfinite(gamma) || gamma < -1e-12 || gamma > 1.0 + 1e-12)
    throw std::domain_error("gamma must lie in [0,1]");
  gamma = gamma < 0.0 ? 0.0 : (gamma > 1.0 ? 1.0 : gamma);
  Measures m;
  m.gamma = gamma;
  m.position = (1.0 - gamma) * p.ladder_mean() +
               gamma * static_cast<double>(p.cycle_stock());
  m.on_order = (1.0 - gamma) * p.x();
  m.level = m.position - m.on_order;
  return m;
}

double gamma_from_measure(const SystemParams& p, MeasureKind kind, double value) {
  if (!std::isfinite(value))
    throw std::domain_error("measure value must be finite");
  const double cycle = static_cast<double>(p.cycle_stock());
  // Each measure is linear in gamma; v0 and v1 are its values at gamma = 0
  // and gamma = 1.
  double v0 = 0.0;
  double v1 = 0.0;
  switch (kind) {
    case MeasureKind::Level:
      v0 = p.ladder_mean() - p.x();
      v1 = cycle;
      break;
    case MeasureKind::Position:
      v0 = p.ladder_mean();
      v1 = cycle;
      break;
    case MeasureKind::OnOrder:
      v0 = p.x();
      v1 = 0.0;
      break;
  }
  const double slope = v1 - v0;
  if (slope == 0.0)
    throw std::domain_error(
        "measure does not depend on the lost fraction for these parameters");
  const double gamma = (value - v0) / slope;
  if (gamma < -1e-9 || gamma > 1.0 + 1e-9)
    throw std::domain_error("measure value outside its feasible range");
  return gamma < 0.0 ? 0.0 : (gamma > 1.0 ? 1.0 : gamma);
}

}  // namespace rqlost
