#pragma once

#include <functional>
#include <span>
#include <vector>

namespace infodist {

/// Direction-set (Powell-style) derivative-free search with
/// golden-section line minimization.
struct PowellOptions {
  int max_iterations = 500;      // full direction sweeps
  double tolerance = 1e-12;      // sweep improvement below this = converged
  double initial_step = 0.25;    // first bracketing step along a direction
  double line_tolerance = 1e-9;  // stop width of the golden-section bracket
};

struct PowellResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

PowellResult powell_maximize(const ObjectiveFn& f, std::vector<double> start,
                             const PowellOptions& options = {});

}  // namespace infodist
