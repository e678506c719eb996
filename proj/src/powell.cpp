#include "infodist/powell.hpp"

#include <cmath>

namespace infodist {

namespace {

constexpr double kExpand = 1.618033988749894848;
constexpr double kShrink = 0.381966011250105152;  // 2 - golden ratio

// Minimize g over t starting at t = 0 with g(0) already known in g_best.
// Brackets the minimum by expansion, then golden-section shrink.
void line_minimize(const std::function<double(double)>& g, double& t_best, double& g_best,
                   double step, double tol) {
  double a, b, c, fa, fb, fc;
  bool bracketed = false;

  const double f0 = g_best;
  const double fp = g(step);
  if (fp < f0) {
    a = 0.0; fa = f0; b = step; fb = fp;
  } else {
    const double fm = g(-step);
    if (fm < f0) {
      a = 0.0; fa = f0; b = -step; fb = fm;
    } else {
      a = -step; fa = fm; b = 0.0; fb = f0; c = step; fc = fp;
      bracketed = true;
    }
  }

  if (!bracketed) {
    c = b + kExpand * (b - a);
    fc = g(c);
    int guard = 0;
    while (fc < fb && guard++ < 80) {
      a = b; fa = fb;
      b = c; fb = fc;
      c = b + kExpand * (b - a);
      fc = g(c);
    }
  }

  int guard = 0;
  while (std::abs(c - a) > tol && guard++ < 200) {
    if (std::abs(c - b) > std::abs(b - a)) {
      const double u = b + kShrink * (c - b);
      const double fu = g(u);
      if (fu < fb) {
        a = b; fa = fb; b = u; fb = fu;
      } else {
        c = u; fc = fu;
      }
    } else {
      const double u = b - kShrink * (b - a);
      const double fu = g(u);
      if (fu < fb) {
        c = b; fc = fb; b = u; fb = fu;
      } else {
        a = u; fa = fu;
      }
    }
  }
  t_best = b;
  g_best = fb;
}

}  // namespace

PowellResult powell_maximize(const ObjectiveFn& f, std::vector<double> start,
                             const PowellOptions& options) {
  const std::size_t n = start.size();
  const auto g = [&f](std::span<const double> x) { return -f(x); };

  std::vector<std::vector<double>> dirs(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) dirs[i][i] = 1.0;

  std::vector<double> x = std::move(start);
  std::vector<double> probe(n);
  double fx = g(x);

  const auto line = [&](const std::vector<double>& dir, double& value) {
    const auto g1 = [&](double t) {
      for (std::size_t k = 0; k < n; ++k) probe[k] = x[k] + t * dir[k];
      return g(probe);
    };
    double t = 0.0;
    line_minimize(g1, t, value, options.initial_step, options.line_tolerance);
    for (std::size_t k = 0; k < n; ++k) x[k] += t * dir[k];
  };

  PowellResult result;
  std::vector<double> x_begin(n), extrapolated(n), new_dir(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    const double f_begin = fx;
    x_begin = x;
    double biggest_drop = 0.0;
    std::size_t ibig = 0;

    for (std::size_t i = 0; i < n; ++i) {
      const double f_prev = fx;
      line(dirs[i], fx);
      if (f_prev - fx > biggest_drop) {
        biggest_drop = f_prev - fx;
        ibig = i;
      }
    }

    if (f_begin - fx < options.tolerance) {
      result.converged = true;
      break;
    }

    // Powell's direction-replacement test on the extrapolated point
    for (std::size_t k = 0; k < n; ++k) extrapolated[k] = 2.0 * x[k] - x_begin[k];
    const double f_extra = g(extrapolated);
    if (f_extra < f_begin) {
      const double t = 2.0 * (f_begin - 2.0 * fx + f_extra) *
                           (f_begin - fx - biggest_drop) * (f_begin - fx - biggest_drop) -
                       biggest_drop * (f_begin - f_extra) * (f_begin - f_extra);
      if (t < 0.0) {
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          new_dir[k] = x[k] - x_begin[k];
          norm += new_dir[k] * new_dir[k];
        }
        norm = std::sqrt(norm);
        if (norm > 0.0) {
          for (double& v : new_dir) v /= norm;
          line(new_dir, fx);
          dirs[ibig] = dirs[n - 1];
          dirs[n - 1] = new_dir;
        }
      }
    }
  }

  result.x = std::move(x);
  result.value = -fx;
  return result;
}

}  // namespace infodist
