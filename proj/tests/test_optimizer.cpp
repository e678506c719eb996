#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infodist/channel.hpp"
#include "infodist/frontier.hpp"
#include "infodist/optimizer.hpp"

using namespace infodist;

namespace {

constexpr double kPi = std::numbers::pi;

Ensemble symmetric_ensemble(double a, double c) {
  const SymmetricPair sp(a, 1.0 - a, c);
  return Ensemble::equiprobable({sp.first(), sp.second()});
}

}  // namespace

TEST_CASE("optimize_povm separates orthogonal pure states perfectly") {
  const auto [povm, info] = optimize_povm(symmetric_ensemble(1.0, 0.0), 2, SeededRng(3), 2);
  CHECK(std::abs(info - std::numbers::ln2) < 1e-8);
  CHECK(povm.size() == 2);
}

TEST_CASE("optimize_povm reaches the closed form on the symmetric pair") {
  const Ensemble e = symmetric_ensemble(0.654508497187474, 0.11);
  const auto [povm, info] = optimize_povm(e, 2, SeededRng(17), 3);
  CHECK(std::abs(info - 0.048536241251415) < 1e-6);
  // identical states: nothing to learn
  SeededRng rng(5);
  const Matrix rho = random_density_matrix(rng, 3, 2);
  const auto [p2, zero] = optimize_povm(Ensemble::equiprobable({rho, rho}), 3, SeededRng(4), 1);
  CHECK(zero < 1e-10);
}

TEST_CASE("optimize_povm outcome-count monotonicity") {
  SeededRng rng(21);
  const Ensemble e = Ensemble::equiprobable(
      {random_density_matrix(rng, 2, 2), random_density_matrix(rng, 2, 1)});
  double prev = -1.0;
  for (std::size_t n_out = 2; n_out <= 4; ++n_out) {
    const auto [povm, info] = optimize_povm(e, n_out, SeededRng(100 + n_out), 3);
    CHECK(info >= prev - 1e-9);
    prev = info;
    Matrix sum(2, 2);
    for (const Matrix& el : povm.elements) sum = sum + el;
    CHECK((sum - Matrix::identity(2)).max_abs() < 1e-10);
  }
}

TEST_CASE("optimize_povm argument validation") {
  const Ensemble e = symmetric_ensemble(0.8, 0.1);
  CHECK_THROWS_AS(optimize_povm(e, 1, SeededRng(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(optimize_povm(e, 5, SeededRng(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(optimize_povm(e, 2, SeededRng(1), -1), std::invalid_argument);
}

TEST_CASE("optimize_povm is deterministic in the seed") {
  const Ensemble e = symmetric_ensemble(0.7, 0.2);
  const auto [p1, i1] = optimize_povm(e, 3, SeededRng(55), 2);
  const auto [p2, i2] = optimize_povm(e, 3, SeededRng(55), 2);
  CHECK(i1 == i2);
}

TEST_CASE("merit search rediscovers the analytic frontier point") {
  // d_tol at the phi = pi/8 frontier point for alpha = pi/8
  MeritConfig cfg;
  cfg.alpha = kPi / 8;
  cfg.d_tol = 0.005390712128939;
  const OptimizeReport rep = maximize_merit(cfg, SeededRng(12), 2);
  CHECK(rep.converged);
  CHECK(std::abs(rep.info - 0.130812035941137) < 1e-4);
  CHECK(std::abs(rep.disturbance - cfg.d_tol) < 1e-4);
  CHECK(std::abs(std::sin(rep.params.lambda)) < 1e-3);
  // reported values are reproducible from the reported parameters
  CHECK(std::abs(disturbance_closed_form(cfg.alpha, rep.params) - rep.disturbance) < 1e-10);
  // merit is exactly the configured expression
  const double recomputed =
      rep.info - cfg.penalty_weight * (rep.disturbance - cfg.d_tol) * (rep.disturbance - cfg.d_tol);
  CHECK(rep.merit == recomputed);
  CHECK(rep.restart_seeds.size() == 3);
  CHECK(rep.restart_seeds[0] == 0);
}

TEST_CASE("zero tolerated disturbance forces the identity interaction") {
  MeritConfig cfg;
  cfg.alpha = kPi / 8;
  cfg.d_tol = 0.0;
  const OptimizeReport rep = maximize_merit(cfg, SeededRng(77), 2);
  CHECK(rep.info < 1e-6);
  CHECK(rep.disturbance < 1e-6);
  CHECK(std::abs(std::sin(rep.params.lambda)) < 1e-3);
}

TEST_CASE("merit search lands on the top of the frontier") {
  MeritConfig cfg;
  cfg.alpha = kPi / 5;
  cfg.d_tol = 0.022080779760620;
  const OptimizeReport rep = maximize_merit(cfg, SeededRng(1), 2);
  CHECK(std::abs(rep.info - 0.048536241251415) < 1e-4);
  CHECK(std::abs(rep.disturbance - cfg.d_tol) < 1e-4);
  CHECK(std::abs(std::sin(rep.params.lambda)) < 1e-3);
  // never above the analytic frontier
  CHECK(rep.info <= frontier_info_at(cfg.alpha, rep.disturbance) + 1e-4);
  // the reported measurement achieves the reported information on Eve's pair
  const InteractionTensor a = expand_tensor(build_coefficients(rep.params));
  const SignalPair sig(cfg.alpha);
  const Ensemble eve = Ensemble::equiprobable(
      {propagate(sig.ket0(), a).rho_e, propagate(sig.ket1(), a).rho_e});
  CHECK(std::abs(mutual_information(eve, rep.povm) - rep.info) < 1e-9);
}

TEST_CASE("merit reports are bit-identical for a fixed seed") {
  MeritConfig cfg;
  cfg.alpha = kPi / 8;
  cfg.d_tol = 0.01;
  const OptimizeReport a = maximize_merit(cfg, SeededRng(99), 2);
  const OptimizeReport b = maximize_merit(cfg, SeededRng(99), 2);
  CHECK(a.info == b.info);
  CHECK(a.disturbance == b.disturbance);
  CHECK(a.merit == b.merit);
  CHECK(a.params.lambda == b.params.lambda);
  CHECK(a.params.theta == b.params.theta);
  CHECK(a.params.phi == b.params.phi);
  CHECK(a.best_restart == b.best_restart);
}

TEST_CASE("linear merit mode trades information against disturbance") {
  MeritConfig ruinous;
  ruinous.alpha = kPi / 8;
  ruinous.mode = MeritMode::linear_tradeoff;
  ruinous.linear_cost = 1e4;  // any disturbance is prohibitive
  const OptimizeReport cautious = maximize_merit(ruinous, SeededRng(31), 2);
  CHECK(cautious.disturbance < 1e-4);
  CHECK(cautious.info < 1e-3);

  MeritConfig cheap;
  cheap.alpha = kPi / 8;
  cheap.mode = MeritMode::linear_tradeoff;
  cheap.linear_cost = 1e-4;  // disturbance is almost free
  const OptimizeReport greedy = maximize_merit(cheap, SeededRng(31), 2);
  CHECK(greedy.info > max_information(kPi / 8) - 1e-3);
  CHECK(greedy.merit == greedy.info - cheap.linear_cost * greedy.disturbance);
}

TEST_CASE("maximize_merit argument validation") {
  MeritConfig cfg;
  cfg.alpha = kPi / 8;
  CHECK_THROWS_AS(maximize_merit(cfg, SeededRng(1), 0), std::invalid_argument);
  cfg.d_tol = 0.7;
  CHECK_THROWS_AS(maximize_merit(cfg, SeededRng(1), 1), std::invalid_argument);
  cfg.d_tol = 0.0;
  cfg.penalty_weight = 0.0;
  CHECK_THROWS_AS(maximize_merit(cfg, SeededRng(1), 1), std::invalid_argument);
}

TEST_CASE("davies trial on identical matrices finds nothing anywhere") {
  SeededRng rng(13);
  const Matrix rho = random_density_matrix(rng, 3, 3);
  const DaviesTrial trial = run_davies_trial(rho, rho, SeededRng(14));
  CHECK(trial.info_at_dim() < 1e-10);
  CHECK(trial.max_improvement() < 1e-10);
  CHECK(trial.best_info.size() == 7);  // 3..9 outcomes
}

TEST_CASE("davies experiment: extra outcomes never help") {
  const std::vector<std::size_t> dims = {2};
  const auto trials = davies_experiment(dims, 6, SeededRng(2025));
  CHECK(trials.size() == 6);
  for (const DaviesTrial& t : trials) {
    CHECK(t.dim == 2);
    CHECK(t.best_info.size() == 3);
    CHECK(t.max_improvement() < 1e-6);
    for (std::size_t k = 1; k < t.best_info.size(); ++k)
      CHECK(t.best_info[k] >= t.best_info[k - 1]);
  }
}

TEST_CASE("davies experiment validation") {
  const std::vector<std::size_t> bad_dim = {5};
  CHECK_THROWS_AS(davies_experiment(bad_dim, 1, SeededRng(1)), std::invalid_argument);
  const std::vector<std::size_t> ok = {2};
  CHECK_THROWS_AS(davies_experiment(ok, 0, SeededRng(1)), std::invalid_argument);
}

TEST_CASE("lambda study smoke run") {
  const std::vector<double> grid = {0.0, 0.01};
  const auto rows = lambda_zero_study(kPi / 5, grid, SeededRng(8), 2);
  REQUIRE(rows.size() == 2);
  for (const LambdaStudyRow& row : rows) {
    CHECK(row.abs_sin_lambda < 1e-3);
    CHECK(std::abs(row.lambda) <= kPi / 2 + 1e-12);
    CHECK(row.abs_sin_lambda == std::abs(std::sin(row.lambda)));
  }
}
