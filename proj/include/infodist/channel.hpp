#pragma once

#include <array>

#include "infodist/matcore.hpp"
#include "infodist/model.hpp"

namespace infodist {

/// Everything the interaction produces for one signal: the propagated
/// amplitudes Y_{n beta}, both reduced states, the overlap amplitudes
/// Z_beta and the discrepancy rate D = 1 - sum_beta Z_beta^2.
struct PropagationResult {
  std::array<std::array<double, 4>, 2> y{};  // y[n][beta]
  Matrix rho_b;                              // 2x2, Bob's reduced state
  Matrix rho_e;                              // 4x4, Eve's reduced state
  std::array<double, 4> z{};
  double disturbance = 0.0;
};

/// Bob's (unnormalized) conditional state for probe outcome beta, with
/// its norm^2 as the outcome probability. Returned unnormalized so that
/// zero-probability outcomes need no special casing.
struct ConditionalState {
  int beta = 0;
  std::array<double, 2> amplitudes{};
  double probability = 0.0;
};

/// Send a unit-norm signal c through the interaction:
///   Y_{n beta} = sum_m c_m A_{m n beta}
///   (rho_B)_{mn} = sum_beta Y_{m beta} Y_{n beta}
///   (rho_E)_{beta gamma} = sum_m Y_{m beta} Y_{m gamma}
///   Z_beta = sum_n c_n Y_{n beta},  D = 1 - sum Z^2
PropagationResult propagate(const std::array<double, 2>& signal, const InteractionTensor& a);

/// D directly from the four angles:
///   D = cos^2(l) sin^2(t) - (S/2) cos^2(l) sin(2t) cos(2p)
///     + (S^2/2) [ sin^2(l)(1 - sin(2m)) + cos^2(l) cos(2t)(1 - sin(2p)) ]
/// The propagated Z-route is the authoritative value in reports; this
/// closed form serves as a verification oracle (they agree to 1e-12).
double disturbance_closed_form(double alpha, const ProbeParams& p);

std::array<ConditionalState, 4> conditional_states(const std::array<double, 2>& signal,
                                                   const InteractionTensor& a);

}  // namespace infodist
