#pragma once

#include <cstddef>
#include <vector>

namespace infodist {

/// One point of the information-disturbance frontier. Points past the
/// top of the curve (d0 > D1) carry the saturated flag: information is
/// capped at I_max, accepting more disturbance buys nothing.
struct FrontierPoint {
  double phi = 0.0;
  double theta0 = 0.0;
  double d0 = 0.0;
  double z = 0.0;
  double info = 0.0;
  bool saturated = false;
};

/// The theta minimizing D at fixed phi:
///   tan(2 theta0) = S cos(2 phi) / [1 - S^2 (1 - sin(2 phi))]
/// with the branch 2 theta0 in [0, pi) picked by the two-argument
/// arctangent.
double theta_min(double alpha, double phi);

/// Minimal disturbance at fixed phi. Algebraically
///   2 D0 = 1 - sqrt{ S^2 cos^2(2 phi) + [1 - S^2 (1 - sin(2 phi))]^2 }
/// but evaluated through the equivalent cancellation-free form
///   2 D0 = S^2 (1 - S^2)(1 - sin 2 phi)^2 / (1 + sqrt{...})
/// which stays accurate in the D0 -> 0 corner.
double min_disturbance(double alpha, double phi);

/// I_max = ln 2 + cos^2(a) ln cos^2(a) + sin^2(a) ln sin^2(a); the
/// phi = 0 endpoint of the frontier.
double max_information(double alpha);

/// D1, the disturbance paid for I_max: [1 - sqrt(1 - S^2 + S^4)] / 2.
double max_frontier_disturbance(double alpha);

/// Invert the frontier: z as a function of the minimal disturbance,
///   z = cos(2a) sqrt{ 1 - (1 - sqrt{D(1-D)/D1(1-D1)})^2 }.
double frontier_z_from_disturbance(double alpha, double d0);

/// Maximal information at disturbance d (saturates at I_max past D1).
double frontier_info_at(double alpha, double d);

/// n_points frontier samples, phi swept from pi/4 down to 0 so the
/// disturbance column ascends, followed by flat saturated rows out to
/// min(2 D1, 0.45). Degenerate alpha = pi/4 collapses to one (0, 0) row.
std::vector<FrontierPoint> frontier_curve(double alpha, std::size_t n_points);

/// Small-disturbance asymptotics at phi = pi/4 - epsilon/2:
///   I ~ (epsilon cos 2a)^2 / 2,  D0 ~ (I tan 2a)^2 / 4.
/// At alpha = pi/4 the frontier is the single point (0,0) and the exact
/// values are returned instead of the (divergent) tangent form.
struct AsymptoticPoint {
  double info_approx = 0.0;
  double d0_approx = 0.0;
};
AsymptoticPoint asymptotic_check(double alpha, double epsilon);

}  // namespace infodist
