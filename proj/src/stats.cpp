#include "stats.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <stdexcept>

namespace rqlost {

double student_t_975(std::size_t dof) {
  if (dof < 1) throw std::invalid_argument("student_t_975: dof must be >= 1");
  const boost::math::students_t dist(static_cast<double>(dof));
  return boost::math::quantile(dist, 0.975);
}

BatchStats batch_means(const std::vector<double>& batch_values) {
  const std::size_t k = batch_values.size();
  if (k < 2) throw std::invalid_argument("batch_means: need at least two batches");
  double mean = 0.0;
  for (double v : batch_values) mean += v;
  mean /= static_cast<double>(k);
  double ss = 0.0;
  for (double v : batch_values) ss += (v - mean) * (v - mean);
  const double var_of_mean = ss / static_cast<double>(k - 1) / static_cast<double>(k);
  return {mean, student_t_975(k - 1) * std::sqrt(var_of_mean)};
}

}  // namespace rqlost
