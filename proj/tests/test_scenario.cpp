#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infodist/channel.hpp"
#include "infodist/frontier.hpp"
#include "infodist/model.hpp"
#include "infodist/scenario.hpp"

using namespace infodist;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = 180.0 / kPi;
}  // namespace

TEST_CASE("resend angle checkpoints") {
  CHECK(std::abs(resend_angle(kPi / 8) * kDeg - 27.3678) < 1e-3);
  CHECK(std::abs(resend_angle(kPi / 5) * kDeg - 42.1332) < 1e-3);
  CHECK(resend_angle(0.0) == 0.0);
  CHECK(std::abs(resend_angle(kPi / 4) - kPi / 4) < 1e-12);
  CHECK_THROWS_AS(resend_angle(-0.2), std::invalid_argument);
}

TEST_CASE("resend angle exceeds alpha and grows with it") {
  double prev = 0.0;
  for (int k = 1; k <= 40; ++k) {
    const double alpha = (kPi / 4) * k / 41.0;
    const double theta = resend_angle(alpha);
    CHECK(theta >= alpha - 1e-15);
    CHECK(theta > prev);
    prev = theta;
  }
  // equality only at alpha = 0
  CHECK(resend_angle(0.0) == 0.0);
  CHECK(resend_angle(0.1) > 0.1);
}

TEST_CASE("three-party report at alpha = 36 degrees") {
  const ScenarioReport rep = scenario_report(kPi / 5);
  CHECK(std::abs(rep.i_ae - 0.048536241251415) < 1e-12);
  CHECK(std::abs(rep.i_eb - 0.004998678405184) < 1e-12);
  CHECK(std::abs(rep.z_ab - 0.030871846054542) < 1e-12);
  CHECK(std::abs(rep.i_ab - 0.000476611163621) < 1e-12);
  CHECK(std::abs(rep.disturbance - 0.022080779760620) < 1e-12);
  CHECK(std::abs(rep.theta * kDeg - 42.1332) < 1e-3);
  CHECK_FALSE(rep.degenerate);
  // the information chain degrades strictly away from the ends
  CHECK(rep.i_ab < rep.i_eb);
  CHECK(rep.i_eb < rep.i_ae);
  // "about one tenth"
  CHECK(rep.i_eb / rep.i_ae > 0.098);
  CHECK(rep.i_eb / rep.i_ae < 0.108);
}

TEST_CASE("orthogonal signals pass everything through") {
  const ScenarioReport rep = scenario_report(0.0);
  CHECK(std::abs(rep.i_ae - std::numbers::ln2) < 1e-12);
  CHECK(std::abs(rep.i_eb - std::numbers::ln2) < 1e-12);
  CHECK(std::abs(rep.i_ab - std::numbers::ln2) < 1e-12);
  CHECK(std::abs(rep.disturbance) < 1e-15);
}

TEST_CASE("orthogonal-resend variant recoups I_AE at a heavy disturbance price") {
  const ScenarioReport rep = scenario_report_at(kPi / 5, 0.0);
  CHECK(std::abs(rep.i_ab - rep.i_ae) < 1e-14);
  CHECK(std::abs(rep.disturbance - 0.452254248593737) < 1e-12);
}

TEST_CASE("information chain is strict for interior alpha") {
  for (double alpha : {0.1, 0.3, 0.5, 0.7}) {
    const ScenarioReport rep = scenario_report(alpha);
    CHECK(rep.i_ab < rep.i_eb);
    CHECK(rep.i_eb < rep.i_ae);
    CHECK(std::abs(rep.z_ab - std::cos(2 * alpha) * std::cos(2 * rep.theta)) < 1e-14);
  }
}

TEST_CASE("bob's reduced pair gives z = cos2a cos2t at every phi") {
  SeededRng rng(606);
  for (int k = 0; k < 40; ++k) {
    const double alpha = rng.uniform(0.0, kPi / 4);
    const double theta = rng.uniform(0.0, kPi / 4);
    const double expected = std::cos(2 * alpha) * std::cos(2 * theta);
    for (double phi : {0.0, kPi / 8, kPi / 4, 0.6}) {
      const SymmetricPair pair = bob_reduced_pair(alpha, theta, phi);
      const double z = std::sqrt(std::max(0.0, 1.0 - 4.0 * pair.a * pair.b));
      CHECK(std::abs(z - std::abs(expected)) < 1e-10);
    }
  }
}

TEST_CASE("bob pair landmarks") {
  const SymmetricPair keep = bob_reduced_pair(kPi / 5, 0.0, 0.3);
  CHECK(std::abs((keep.a - keep.b) - std::cos(2 * kPi / 5)) < 1e-12);
  const double theta = 42.1332 / kDeg;
  const SymmetricPair paper = bob_reduced_pair(kPi / 5, theta, 0.0);
  CHECK(std::abs(std::sqrt(1.0 - 4.0 * paper.a * paper.b) - 0.0308718) < 1e-6);
}

TEST_CASE("bob pair agrees with the propagated reduced state") {
  SeededRng rng(909);
  for (int k = 0; k < 30; ++k) {
    const double alpha = rng.uniform(0.0, kPi / 4);
    const double theta = rng.uniform(-kPi, kPi);
    const double phi = rng.uniform(-kPi, kPi);
    const SymmetricPair pair = bob_reduced_pair(alpha, theta, phi);
    const InteractionTensor a = expand_tensor(build_coefficients({0.0, 0.0, theta, phi}));
    const SignalPair sig(alpha);
    const Matrix b0 = propagate(sig.ket0(), a).rho_b;
    const Matrix b1 = propagate(sig.ket1(), a).rho_b;
    CHECK(std::abs(pair.a - b0(0, 0).real()) < 1e-12);
    CHECK(std::abs(pair.b - b0(1, 1).real()) < 1e-12);
    // the second signal is the label swap
    CHECK(std::abs(pair.b - b1(0, 0).real()) < 1e-12);
    CHECK(std::abs(pair.a - b1(1, 1).real()) < 1e-12);
  }
}

TEST_CASE("scenario disturbance sits on the frontier") {
  for (double alpha : {0.1, kPi / 8, kPi / 5}) {
    const ScenarioReport rep = scenario_report(alpha);
    CHECK(std::abs(rep.disturbance - max_frontier_disturbance(alpha)) < 1e-12);
    CHECK(std::abs(rep.i_ae - max_information(alpha)) < 1e-14);
  }
}
