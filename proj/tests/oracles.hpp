#pragma once

#include <cmath>
#include <cstdint>

// Independent reimplementations used only to cross-check the library.
// Deliberately naive: plain forward recurrences in long double, no log-space
// anchors, no compensated sums.

namespace testoracle {

// E[(X - r)^+] from the defining series, with pmf values grown forward from
// pmf(0) = e^-x. Adequate for x up to a few thousand.
inline long double loss_brute(long double x, std::int64_t r) {
  if (x == 0.0L) return 0.0L;
  long double p = std::exp(-x);
  long double total = 0.0L;
  const std::int64_t kmax =
      static_cast<std::int64_t>(x + 60.0L * std::sqrt(x + 1.0L)) + r + 200;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    p *= x / static_cast<long double>(k);
    if (k > r) total += static_cast<long double>(k - r) * p;
  }
  return total;
}

// Erlang blocking probability from its definition,
// (x^s / s!) / sum_{j=0..s} x^j / j!. Safe for s <= 30-ish.
inline long double erlang_direct(std::int64_t servers, long double x) {
  long double term = 1.0L;
  long double sum = 1.0L;
  for (std::int64_t j = 1; j <= servers; ++j) {
    term *= x / static_cast<long double>(j);
    sum += term;
  }
  return term / sum;
}

}  // namespace testoracle
