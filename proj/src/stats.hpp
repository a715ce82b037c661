#pragma once

#include <cstddef>
#include <vector>

namespace rqlost {

// Two-sided 95% Student-t critical value (the 0.975 quantile) for the given
// degrees of freedom.
double student_t_975(std::size_t dof);

struct BatchStats {
  double mean;
  double half_width;  // 95%, Student-t over the batch means
};

// Non-overlapping batch-means interval. Requires at least two batches.
BatchStats batch_means(const std::vector<double>& batch_values);

}  // namespace rqlost
