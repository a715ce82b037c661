#pragma once

#include <cmath>

namespace rqlost {

// Neumaier-compensated accumulator; value() folds the carry back in.
template <typename T = double>
class CompensatedSum {
 public:
  void add(T v) {
    T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + carry_; }

 private:
  T sum_ = 0;
  T carry_ = 0;
};

}  // namespace rqlost
