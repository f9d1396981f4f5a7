#pragma once

#include <cstddef>
#include <vector>

namespace majority {

/// Replica mean with standard error = sample standard deviation / sqrt(replicas).
struct Estimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t replicas = 0;
  std::vector<double> values;

  static Estimate from_values(std::vector<double> values, bool keep_values = true);
};

}  // namespace majority
