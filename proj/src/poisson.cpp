#include "poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "compensated.hpp"
#include "errors.hpp"

namespace rqlost {
namespace {

// All internal arithmetic runs in long double (64-bit mantissa on x86-64) so
// that log-space anchors and long near-mode sums keep well over 12 decimal
// digits; results are rounded to double at the boundary.

constexpr long double kRelTol = 1e-19L;
constexpr std::int64_t kMaxTerms = 100000000;

void validate_x(double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument("mean lead-time demand must be finite and >= 0");
}

// glibc lgammal() writes the global signgam; lgammal_r is the thread-safe form.
long double log_gamma(long double v) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgammal_r(v, &sign);
#else
  return std::lgamma(v);
#endif
}

long double pmf_ld(long double x, std::int64_t k) {
  if (k < 0) return 0.0L;
  if (x == 0.0L) return k == 0 ? 1.0L : 0.0L;
  const long double kk = static_cast<long double>(k);
  return std::exp(kk * std::log(x) - x - log_gamma(kk + 1.0L));
}

// P(X >= m) by summing whichever side of the mode is smaller, generating pmf
// terms multiplicatively from a single log-space anchor. The stopping rule
// bounds the dropped tail by a geometric series (term ratios are monotone
// away from the mode).
long double tail_ld(long double x, std::int64_t m) {
  if (m <= 0) return 1.0L;
  if (x == 0.0L) return 0.0L;
  const auto mode = static_cast<std::int64_t>(x);
  if (m > mode) {
    long double p = pmf_ld(x, m);
    if (p == 0.0L) return 0.0L;
    CompensatedSum<long double> s;
    s.add(p);
    for (std::int64_t k = m + 1; k < m + kMaxTerms; ++k) {
      p *= x / static_cast<long double>(k);
      s.add(p);
      const long double rho = x / static_cast<long double>(k + 1);
      if (p * rho <= (1.0L - rho) * s.value() * kRelTol) return s.value();
    }
    throw internal_error("poisson_tail: upper series failed to converge");
  }
  // Lower side is the smaller one: accumulate P(X <= m-1) downward from the
  // anchor at m-1 and complement.
  long double p = pmf_ld(x, m - 1);
  CompensatedSum<long double> s;
  s.add(p);
  for (std::int64_t k = m - 1; k > 0; --k) {
    p *= static_cast<long double>(k) / x;
    s.add(p);
    const long double rho = static_cast<long double>(k - 1) / x;
    if (p * rho <= (1.0L - rho) * s.value() * kRelTol) break;
  }
  const long double tail = 1.0L - s.value();
  return tail < 0.0L ? 0.0L : tail;
}

}  // namespace

double poisson_pmf(double x, std::int64_t k) {
  validate_x(x);
  return static_cast<double>(pmf_ld(static_cast<long double>(x), k));
}

double poisson_tail(double x, std::int64_t m) {
  validate_x(x);
  return static_cast<double>(tail_ld(static_cast<long double>(x), m));
}

double poisson_loss(double x, std::int64_t r) {
  validate_x(x);
  if (r < 0) throw std::invalid_argument("poisson_loss: r must be >= 0");
  if (x == 0.0) return 0.0;
  if (r == 0) return x;
  const long double xl = static_cast<long double>(x);
  const long double rl = static_cast<long double>(r);
  if (rl <= xl) {
    // E[(X-r)^+] = x P(X>=r-1) - r P(X>=r), rearranged so both terms are
    // non-negative on this branch and nothing cancels.
    const long double v =
        (xl - rl) * tail_ld(xl, r - 1) + rl * pmf_ld(xl, r - 1);
    return static_cast<double>(v);
  }
  // r > x: the identity form subtracts nearly equal products, so sum the
  // defining series sum_{k>r} (k-r) pmf(k) directly; every term is positive.
  long double p = pmf_ld(xl, r + 1);
  if (p == 0.0L) return 0.0;
  CompensatedSum<long double> s;
  s.add(p);
  for (std::int64_t k = r + 2; k < r + kMaxTerms; ++k) {
    p *= xl / static_cast<long double>(k);
    s.add(static_cast<long double>(k - r) * p);
    // Remaining mass is below p * sum_i (k-r+i) rho^i with rho = x/(k+1) < 1.
    const long double rho = xl / static_cast<long double>(k + 1);
    const long double rem =
        p * rho / (1.0L - rho) *
        (static_cast<long double>(k - r) + 1.0L / (1.0L - rho));
    if (rem <= s.value() * kRelTol) return static_cast<double>(s.value());
  }
  throw internal_error("poisson_loss: series failed to converge");
}

}  // namespace rqlost
