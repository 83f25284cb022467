#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mvlab::detail {

struct SimplexOptions {
  double reflect = 1.0;
  double expand = 2.0;
  double contract = 0.5;
  double shrink = 0.5;
  int max_evals = 2000;
  double min_diameter = 1e-9;
  double initial_step = 0.5;
};

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
};

// Downhill simplex. Stops once max_evals evaluations are spent or every
// vertex lies within min_diameter of the best one.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          const SimplexOptions& opt);

}  // namespace mvlab::detail
