#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "infodist/infotheory.hpp"
#include "infodist/matcore.hpp"
#include "infodist/model.hpp"

namespace infodist {

class DegenerateFrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MeritMode {
  quadratic_penalty,  // M = I - w (D - d_tol)^2
  linear_tradeoff,    // M = I - k D
};

struct MeritConfig {
  double alpha = 0.0;
  double d_tol = 0.0;
  double penalty_weight = 1000.0;
  MeritMode mode = MeritMode::quadratic_penalty;
  double linear_cost = 0.0;
};

struct OptimizeReport {
  ProbeParams params;     // lambda reduced mod pi to [-pi/2, pi/2]; mu = 0 when lambda ~ 0
  Povm povm;              // Eve's measurement at the optimum
  double info = 0.0;      // nats
  double disturbance = 0.0;
  double merit = 0.0;     // at the configured penalty weight
  int restarts = 0;
  bool converged = false;
  std::vector<std::uint64_t> restart_seeds;  // [0] = 0 marks the deterministic identity start
  std::size_t best_restart = 0;
};

/// Maximize the figure of merit over the four interaction angles and
/// Eve's POVM. Start 0 is the identity interaction, then `restarts`
/// uniformly random starts. For the quadratic mode the penalty weight is
/// escalated internally (x100 per stage, warm-started) until the
/// disturbance is pinned to d_tol; the reported merit always uses the
/// configured weight. Deterministic for a fixed (cfg, seed).
OptimizeReport maximize_merit(const MeritConfig& cfg, SeededRng rng, int restarts);

/// Best rank-one POVM with n_outcomes elements for the ensemble and the
/// mutual information it attains. n_outcomes must lie in [dim, dim^2];
/// n_outcomes == dim searches orthonormal bases (Givens angles, complete
/// by construction), larger counts search isometry rows with the
/// completeness constraint restored by column orthonormalization after
/// every step.
std::pair<Povm, double> optimize_povm(const Ensemble& e, std::size_t n_outcomes, SeededRng rng,
                                      int restarts);

/// One outcome-count scan N..N^2 for a fixed pair of states.
struct DaviesTrial {
  std::size_t dim = 0;
  int index = 0;
  std::vector<double> best_info;  // best_info[k] = best I with dim + k outcomes, nondecreasing

  double info_at_dim() const { return best_info.front(); }
  double max_improvement() const { return best_info.back() - best_info.front(); }
};

DaviesTrial run_davies_trial(const Matrix& rho0, const Matrix& rho1, SeededRng rng);

/// Random-pair outcome-count experiment: `trials` pairs per requested
/// dimension (ranks drawn uniformly from 1..N), each scanned over
/// N_w = N..N^2.
std::vector<DaviesTrial> davies_experiment(std::span<const std::size_t> dims, int trials,
                                           SeededRng rng);

struct LambdaStudyRow {
  double d_tol = 0.0;
  double lambda = 0.0;  // of the best restart, reduced mod pi to [-pi/2, pi/2]
  double abs_sin_lambda = 0.0;
};

/// Re-runs maximize_merit over a d_tol grid and tabulates the lambda the
/// optimization lands on.
std::vector<LambdaStudyRow> lambda_zero_study(double alpha, std::span<const double> d_tol_grid,
                                              SeededRng rng, int restarts);

}  // namespace infodist
