#pragma once

#include <cstdint>

namespace rqlost {

// P(X = k) for X ~ Poisson(x).
double poisson_pmf(double x, std::int64_t k);

// P(X >= m) for X ~ Poisson(x). Exactly 1 for m <= 0.
double poisson_tail(double x, std::int64_t m);

// E[(X - r)^+] for X ~ Poisson(x): the expected lead-time demand in excess
// of r. Non-negative, <= x, non-increasing in r, non-decreasing in x.
double poisson_loss(double x, std::int64_t r);

}  // namespace rqlost
