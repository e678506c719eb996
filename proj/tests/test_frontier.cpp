#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infodist/channel.hpp"
#include "infodist/frontier.hpp"
#include "infodist/infotheory.hpp"

using namespace infodist;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = 180.0 / kPi;

// brute-force oracle: dense theta sweep of the closed-form disturbance,
// golden-refined around the winning grid point
double swept_min_disturbance(double alpha, double phi, int grid = 10000) {
  const auto d_at = [&](double theta) {
    return disturbance_closed_form(alpha, {0.0, 0.0, theta, phi});
  };
  double best = 1.0, best_theta = 0.0;
  for (int k = 0; k <= grid; ++k) {
    const double theta = kPi * k / grid - kPi / 2;
    const double d = d_at(theta);
    if (d < best) {
      best = d;
      best_theta = theta;
    }
  }
  double lo = best_theta - kPi / grid, hi = best_theta + kPi / grid;
  for (int it = 0; it < 60; ++it) {
    const double m1 = lo + 0.381966011 * (hi - lo);
    const double m2 = hi - 0.381966011 * (hi - lo);
    if (d_at(m1) > d_at(m2)) lo = m1; else hi = m2;
  }
  return std::min(best, d_at(0.5 * (lo + hi)));
}

}  // namespace

TEST_CASE("theta_min reproduces both printed angles") {
  CHECK(std::abs(theta_min(kPi / 8, 0.0) * kDeg - 27.3678) < 1e-3);
  CHECK(std::abs(theta_min(kPi / 5, 0.0) * kDeg - 42.1332) < 1e-3);
  CHECK(std::abs(theta_min(kPi / 8, 0.0) - 0.477658309062255) < 1e-12);
  CHECK(std::abs(theta_min(kPi / 5, 0.0) - 0.735362999713736) < 1e-12);
  CHECK(std::abs(theta_min(0.3, kPi / 4)) < 1e-12);
}

TEST_CASE("theta_min really minimizes the disturbance") {
  for (double alpha : {kPi / 16, kPi / 8, kPi / 5}) {
    for (double phi : {0.0, 0.2, 0.5, kPi / 4}) {
      const double t0 = theta_min(alpha, phi);
      const double d0 = disturbance_closed_form(alpha, {0.0, 0.0, t0, phi});
      CHECK(std::abs(d0 - min_disturbance(alpha, phi)) < 1e-12);
      CHECK(std::abs(d0 - swept_min_disturbance(alpha, phi)) < 1e-8);
    }
  }
}

TEST_CASE("minimal disturbance landmarks") {
  CHECK(min_disturbance(0.3, kPi / 4) == 0.0);
  CHECK(std::abs(max_frontier_disturbance(kPi / 5) - 0.022080779760620) < 1e-14);
  CHECK(std::abs(max_frontier_disturbance(kPi / 8) - 0.066987298107781) < 1e-14);
  CHECK(std::abs(max_frontier_disturbance(kPi / 16) - 0.032292826653257) < 1e-14);
  CHECK(std::abs(max_frontier_disturbance(kPi / 8) - (1.0 - std::sqrt(0.75)) / 2.0) < 1e-14);
  CHECK(std::abs(min_disturbance(kPi / 5, 0.0) - max_frontier_disturbance(kPi / 5)) < 1e-14);
  // the stable evaluation agrees with the printed square-root form where
  // the latter is well conditioned
  for (double alpha : {0.2, 0.5, kPi / 5}) {
    for (double phi : {0.0, 0.3, 0.6}) {
      const double s2 = std::pow(std::sin(2 * alpha), 2);
      const double inner = s2 * std::pow(std::cos(2 * phi), 2) +
                           std::pow(1.0 - s2 * (1.0 - std::sin(2 * phi)), 2);
      CHECK(std::abs(min_disturbance(alpha, phi) - 0.5 * (1.0 - std::sqrt(inner))) < 1e-14);
    }
  }
}

TEST_CASE("maximal information endpoints") {
  CHECK(std::abs(max_information(kPi / 5) - 0.048536241251415) < 1e-14);
  CHECK(std::abs(max_information(kPi / 8) - 0.276651649860258) < 1e-14);
  CHECK(std::abs(max_information(kPi / 16) - 0.531417485760992) < 1e-14);
  CHECK(std::abs(max_information(0.0) - std::numbers::ln2) < 1e-15);
  CHECK(max_information(kPi / 4) == 0.0);
  // consistency with the binary closed form at z = cos 2 alpha
  for (double alpha : {0.1, 0.4, 0.7}) {
    CHECK(std::abs(max_information(alpha) - binary_info_from_z(std::cos(2 * alpha))) < 1e-12);
  }
}

TEST_CASE("frontier curve shape and endpoints") {
  const double alpha = kPi / 5;
  const auto curve = frontier_curve(alpha, 41);
  REQUIRE(curve.size() > 41);

  CHECK(curve.front().d0 == 0.0);
  CHECK(curve.front().info == 0.0);
  CHECK_FALSE(curve.front().saturated);

  const double d1 = max_frontier_disturbance(alpha);
  const double imax = max_information(alpha);
  std::size_t last_exact = 0;
  for (std::size_t k = 0; k < curve.size(); ++k)
    if (!curve[k].saturated) last_exact = k;
  CHECK(std::abs(curve[last_exact].d0 - d1) < 1e-14);
  CHECK(std::abs(curve[last_exact].info - imax) < 1e-14);

  for (std::size_t k = 1; k < curve.size(); ++k) {
    CHECK(curve[k].d0 >= curve[k - 1].d0 - 1e-15);
    CHECK(curve[k].info >= curve[k - 1].info - 1e-15);
  }
  for (const FrontierPoint& p : curve) {
    if (p.saturated) {
      CHECK(p.d0 > d1 - 1e-15);
      CHECK(p.info == imax);
    } else {
      CHECK(std::abs(p.z - std::cos(2 * alpha) * std::cos(2 * p.phi)) < 1e-14);
      CHECK(std::abs(p.info - binary_info_from_z(p.z)) < 1e-15);
      // the inverse relation z(D0) agrees with the phi-form
      CHECK(std::abs(frontier_z_from_disturbance(alpha, p.d0) - p.z) < 1e-9);
    }
  }
}

TEST_CASE("smaller alpha dominates at equal disturbance") {
  const auto shared_max = max_frontier_disturbance(kPi / 5) * 0.999;
  for (int k = 1; k <= 50; ++k) {
    const double d = shared_max * k / 50;
    const double i16 = binary_info_from_z(frontier_z_from_disturbance(kPi / 16, d));
    const double i8 = binary_info_from_z(frontier_z_from_disturbance(kPi / 8, d));
    const double i5 = binary_info_from_z(frontier_z_from_disturbance(kPi / 5, d));
    CHECK(i16 > i8);
    CHECK(i8 > i5);
  }
}

TEST_CASE("degenerate identical signals collapse the curve") {
  const auto curve = frontier_curve(kPi / 4, 10);
  REQUIRE(curve.size() == 1);
  CHECK(curve.front().d0 == 0.0);
  CHECK(curve.front().info == 0.0);
  CHECK(curve.front().saturated);
  CHECK_THROWS_AS(frontier_curve(0.3, 1), std::invalid_argument);
}

TEST_CASE("orthogonal signals: all information at no disturbance") {
  const auto curve = frontier_curve(0.0, 9);
  for (const FrontierPoint& p : curve) {
    CHECK(std::abs(p.d0) < 1e-15);
    CHECK(p.info <= std::numbers::ln2 + 1e-15);
  }
  CHECK(std::abs(curve.back().info - std::numbers::ln2) < 1e-12);
}

TEST_CASE("frontier information saturates past D1") {
  const double alpha = kPi / 8;
  const double d1 = max_frontier_disturbance(alpha);
  CHECK(frontier_info_at(alpha, d1 + 0.01) == max_information(alpha));
  CHECK(frontier_info_at(alpha, 0.0) < 1e-12);
  const double mid = d1 / 2;
  CHECK(frontier_info_at(alpha, mid) > 0.0);
  CHECK(frontier_info_at(alpha, mid) < max_information(alpha));
}

TEST_CASE("small-disturbance asymptotics") {
  for (double alpha : {kPi / 16, kPi / 8}) {
    for (double eps : {1e-2, 1e-3}) {
      const double phi = kPi / 4 - eps / 2;
      const double exact_info = binary_info_from_z(std::cos(2 * alpha) * std::cos(2 * phi));
      const double exact_d0 = min_disturbance(alpha, phi);
      const AsymptoticPoint approx = asymptotic_check(alpha, eps);
      CHECK(std::abs(exact_info - approx.info_approx) / approx.info_approx < 1e-3);
      CHECK(std::abs(exact_d0 - approx.d0_approx) / approx.d0_approx < 1e-2);
    }
  }
  // degenerate alpha = pi/4: exact values returned, both vanish
  const AsymptoticPoint deg = asymptotic_check(kPi / 4, 1e-3);
  CHECK(deg.info_approx < 1e-12);
  CHECK(deg.d0_approx < 1e-12);
  CHECK_THROWS_AS(asymptotic_check(0.3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_check(0.3, 0.0), std::invalid_argument);
}
