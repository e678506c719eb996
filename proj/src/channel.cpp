#include "infodist/channel.hpp"

#include <cmath>

namespace infodist {

PropagationResult propagate(const std::array<double, 2>& signal, const InteractionTensor& a) {
  const double n2 = signal[0] * signal[0] + signal[1] * signal[1];
  if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("propagate: signal must be unit norm");

  PropagationResult r;
  for (int n = 0; n < 2; ++n)
    for (int b = 0; b < 4; ++b) r.y[n][b] = signal[0] * a.at(0, n, b) + signal[1] * a.at(1, n, b);

  r.rho_b = Matrix(2, 2);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      double acc = 0.0;
      for (int b = 0; b < 4; ++b) acc += r.y[m][b] * r.y[n][b];
      r.rho_b(m, n) = acc;
    }

  r.rho_e = Matrix(4, 4);
  for (int b = 0; b < 4; ++b)
    for (int g = 0; g < 4; ++g) {
      double acc = 0.0;
      for (int m = 0; m < 2; ++m) acc += r.y[m][b] * r.y[m][g];
      r.rho_e(b, g) = acc;
    }

  double sum_z2 = 0.0;
  for (int b = 0; b < 4; ++b) {
    r.z[b] = signal[0] * r.y[0][b] + signal[1] * r.y[1][b];
    sum_z2 += r.z[b] * r.z[b];
  }
  r.disturbance = 1.0 - sum_z2;
  return r;
}

double disturbance_closed_form(double alpha, const ProbeParams& p) {
  const double s = std::sin(2.0 * alpha);
  const double cl2 = std::cos(p.lambda) * std::cos(p.lambda);
  const double sl2 = std::sin(p.lambda) * std::sin(p.lambda);
  const double st = std::sin(p.theta);
  return cl2 * st * st - (s / 2.0) * cl2 * std::sin(2.0 * p.theta) * std::cos(2.0 * p.phi) +
         (s * s / 2.0) * (sl2 * (1.0 - std::sin(2.0 * p.mu)) +
                          cl2 * std::cos(2.0 * p.theta) * (1.0 - std::sin(2.0 * p.phi)));
}

std::array<ConditionalState, 4> conditional_states(const std::array<double, 2>& signal,
                                                   const InteractionTensor& a) {
  const PropagationResult r = propagate(signal, a);
  std::array<ConditionalState, 4> out;
  for (int b = 0; b < 4; ++b) {
    out[b].beta = b;
    out[b].amplitudes = {r.y[0][b], r.y[1][b]};
    out[b].probability = r.y[0][b] * r.y[0][b] + r.y[1][b] * r.y[1][b];
  }
  return out;
}

}  // namespace infodist
