#include "infodist/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "infodist/infotheory.hpp"

namespace infodist {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

double overlap(double alpha) { return std::sin(2.0 * alpha); }

}  // namespace

double theta_min(double alpha, double phi) {
  const double s = overlap(alpha);
  const double num = s * std::cos(2.0 * phi);
  const double den = 1.0 - s * s * (1.0 - std::sin(2.0 * phi));
  if (num == 0.0 && den == 0.0) return 0.0;  // S = 1 at phi = pi/4: any theta, take 0
  return 0.5 * std::atan2(num, den);
}

double min_disturbance(double alpha, double phi) {
  const double s2 = overlap(alpha) * overlap(alpha);
  const double u = std::sin(2.0 * phi);
  const double c2p = std::cos(2.0 * phi);
  const double b = 1.0 - s2 * (1.0 - u);
  const double inner = s2 * c2p * c2p + b * b;
  return s2 * (1.0 - s2) * (1.0 - u) * (1.0 - u) / (2.0 * (1.0 + std::sqrt(inner)));
}

double max_information(double alpha) {
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double s2 = std::sin(alpha) * std::sin(alpha);
  double v = std::numbers::ln2;
  if (c2 > 0.0) v += c2 * std::log(c2);
  if (s2 > 0.0) v += s2 * std::log(s2);
  return std::max(0.0, v);
}

double max_frontier_disturbance(double alpha) {
  const double s2 = overlap(alpha) * overlap(alpha);
  return s2 * (1.0 - s2) / (2.0 * (1.0 + std::sqrt(1.0 - s2 + s2 * s2)));
}

double frontier_z_from_disturbance(double alpha, double d0) {
  const double d1 = max_frontier_disturbance(alpha);
  if (d1 <= 0.0) return d0 <= 0.0 ? std::cos(2.0 * alpha) : 0.0;
  const double ratio = std::max(0.0, d0 * (1.0 - d0) / (d1 * (1.0 - d1)));
  const double t = 1.0 - std::sqrt(ratio);
  return std::cos(2.0 * alpha) * std::sqrt(std::max(0.0, 1.0 - t * t));
}

double frontier_info_at(double alpha, double d) {
  if (d >= max_frontier_disturbance(alpha)) return max_information(alpha);
  return binary_info_from_z(frontier_z_from_disturbance(alpha, d));
}

std::vector<FrontierPoint> frontier_curve(double alpha, std::size_t n_points) {
  if (n_points < 2) throw std::invalid_argument("frontier_curve: need at least 2 points");

  std::vector<FrontierPoint> curve;
  const double cos2a = std::cos(2.0 * alpha);
  if (cos2a < 1e-15) {
    // identical signals: the whole tradeoff is the point (0, 0)
    curve.push_back({0.0, 0.0, 0.0, 0.0, 0.0, true});
    return curve;
  }

  curve.reserve(n_points + n_points / 4 + 2);
  for (std::size_t k = 0; k < n_points; ++k) {
    // phi descends from pi/4 to 0 so d0 ascends from 0 to D1
    const double phi = kQuarterPi * (1.0 - static_cast<double>(k) / static_cast<double>(n_points - 1));
    FrontierPoint p;
    p.phi = phi;
    p.theta0 = theta_min(alpha, phi);
    p.d0 = min_disturbance(alpha, phi);
    p.z = cos2a * std::cos(2.0 * phi);
    p.info = binary_info_from_z(p.z);
    curve.push_back(p);
  }

  const double d1 = max_frontier_disturbance(alpha);
  if (d1 > 1e-12) {
    // flat saturated tail: more disturbance cannot buy more information
    const double d_cap = std::min(2.0 * d1, 0.45);
    const std::size_t n_ext = std::max<std::size_t>(2, n_points / 4);
    const double i_max = max_information(alpha);
    for (std::size_t k = 1; k <= n_ext; ++k) {
      FrontierPoint p;
      p.phi = 0.0;
      p.theta0 = theta_min(alpha, 0.0);
      p.d0 = d1 + (d_cap - d1) * static_cast<double>(k) / static_cast<double>(n_ext);
      p.z = cos2a;
      p.info = i_max;
      p.saturated = true;
      curve.push_back(p);
    }
  }
  return curve;
}

AsymptoticPoint asymptotic_check(double alpha, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.1))
    throw std::invalid_argument("asymptotic_check: epsilon must lie in (0, 0.1)");
  const double cos2a = std::cos(2.0 * alpha);
  AsymptoticPoint out;
  if (std::abs(cos2a) < 1e-15) {
    // degenerate alpha = pi/4: tan(2a) diverges, return the exact limit
    const double phi = kQuarterPi - epsilon / 2.0;
    out.info_approx = binary_info_from_z(cos2a * std::cos(2.0 * phi));
    out.d0_approx = min_disturbance(alpha, phi);
    return out;
  }
  out.info_approx = 0.5 * (epsilon * cos2a) * (epsilon * cos2a);
  const double t = out.info_approx * std::tan(2.0 * alpha);
  out.d0_approx = 0.25 * t * t;
  return out;
}

}  // namespace infodist
