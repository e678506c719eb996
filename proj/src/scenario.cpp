#include "infodist/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "infodist/channel.hpp"
#include "infodist/frontier.hpp"
#include "infodist/model.hpp"

namespace infodist {

double resend_angle(double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4 + 1e-12))
    throw std::invalid_argument("resend_angle: alpha outside [0, pi/4]");
  const double s = std::sin(2.0 * alpha);
  const double num = s;
  const double den = 1.0 - s * s;
  if (num == 0.0 && den == 0.0) return std::numbers::pi / 4;
  return 0.5 * std::atan2(num, den);
}

SymmetricPair bob_reduced_pair(double alpha, double theta, double phi) {
  const CoefficientVector x = build_coefficients({0.0, 0.0, theta, phi});
  const InteractionTensor a = expand_tensor(x);
  const PropagationResult r = propagate(SignalPair(alpha).ket0(), a);
  return SymmetricPair(r.rho_b(0, 0).real(), r.rho_b(1, 1).real(), r.rho_b(0, 1).real());
}

ScenarioReport scenario_report_at(double alpha, double theta) {
  ScenarioReport rep;
  rep.alpha = alpha;
  rep.theta = theta;
  rep.i_ae = max_information(alpha);
  // equivalent-source picture: Eve knowingly resends pure states at angle
  // theta, so Bob's ceiling on her record is the same expression at theta
  rep.i_eb = max_information(theta);
  rep.z_ab = std::cos(2.0 * alpha) * std::cos(2.0 * theta);
  rep.i_ab = binary_info_from_z(rep.z_ab);
  rep.disturbance = disturbance_closed_form(alpha, {0.0, 0.0, theta, 0.0});
  rep.degenerate = std::cos(2.0 * alpha) < 1e-15;
  return rep;
}

ScenarioReport scenario_report(double alpha) { return scenario_report_at(alpha, resend_angle(alpha)); }

}  // namespace infodist
