#pragma once

#include "infodist/infotheory.hpp"

namespace infodist {

/// Three-party picture for the maximal-information attack (lambda = 0,
/// phi = 0): what Eve learns about Alice (I_AE), what Bob could learn
/// about Eve's record (I_EB), and what is left for Bob about Alice's
/// preparation (I_AB). All in nats.
struct ScenarioReport {
  double alpha = 0.0;
  double theta = 0.0;  // resent-state angle
  double i_ae = 0.0;
  double i_eb = 0.0;
  double i_ab = 0.0;
  double z_ab = 0.0;
  double disturbance = 0.0;
  bool degenerate = false;  // alpha = pi/4: identical signals
};

/// The effective signal angle of the states Bob receives,
///   tan(2 theta) = S / (1 - S^2),
/// slightly larger than alpha. At alpha = pi/4 the denominator vanishes
/// and the limit theta = pi/4 is returned.
double resend_angle(double alpha);

/// Bob's reduced pair for the lambda = 0 attack at (theta, phi); its
/// z = sqrt(1 - 4ab) equals cos(2 alpha) cos(2 theta) for every phi.
SymmetricPair bob_reduced_pair(double alpha, double theta, double phi);

/// Report at the disturbance-minimizing resend angle.
ScenarioReport scenario_report(double alpha);

/// Report with theta overridden (theta = 0 is the orthogonal-resend
/// variant: Bob recoups I_AE in full but D jumps to S^2/2).
ScenarioReport scenario_report_at(double alpha, double theta);

}  // namespace infodist
