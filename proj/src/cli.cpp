#include "infodist/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "infodist/frontier.hpp"
#include "infodist/optimizer.hpp"
#include "infodist/scenario.hpp"

namespace infodist {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// 9 significant digits, plain C locale, LF endings everywhere
std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = nullptr;

  // returns false when the path cannot be opened
  bool open(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream = &fallback;
      return true;
    }
    file.open(path, std::ios::binary);
    if (!file) return false;
    stream = &file;
    return true;
  }
};

int cmd_frontier(double alpha_deg, int points, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  OutputTarget target;
  if (!target.open(out_path, out)) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }
  const auto curve = frontier_curve(alpha_deg * kDegToRad, static_cast<std::size_t>(points));
  *target.stream << "phi_rad,theta0_rad,D,I_nats,saturated\n";
  for (const FrontierPoint& p : curve)
    *target.stream << fmt9(p.phi) << ',' << fmt9(p.theta0) << ',' << fmt9(p.d0) << ','
                   << fmt9(p.info) << ',' << (p.saturated ? 1 : 0) << '\n';
  return 0;
}

int cmd_optimize(double alpha_deg, double dtol, std::uint64_t seed, int restarts, double penalty,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (!(dtol >= 0.0 && dtol <= 0.5)) {
    err << "error: --dtol must lie in [0, 0.5]\n";
    return 2;
  }
  if (!(penalty > 0.0)) {
    err << "error: --penalty must be positive\n";
    return 2;
  }
  OutputTarget target;
  if (!target.open(out_path, out)) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }

  MeritConfig cfg;
  cfg.alpha = alpha_deg * kDegToRad;
  cfg.d_tol = dtol;
  cfg.penalty_weight = penalty;
  const OptimizeReport rep = maximize_merit(cfg, SeededRng(seed), restarts);

  *target.stream << "lambda=" << fmt9(rep.params.lambda) << '\n'
                 << "mu=" << fmt9(rep.params.mu) << '\n'
                 << "theta=" << fmt9(rep.params.theta) << '\n'
                 << "phi=" << fmt9(rep.params.phi) << '\n'
                 << "D=" << fmt9(rep.disturbance) << '\n'
                 << "I_nats=" << fmt9(rep.info) << '\n'
                 << "merit=" << fmt9(rep.merit) << '\n'
                 << "converged=" << (rep.converged ? "true" : "false") << '\n'
                 << "seed=" << seed << '\n';
  return rep.converged ? 0 : 3;
}

int cmd_scenario(double alpha_deg, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  OutputTarget target;
  if (!target.open(out_path, out)) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }
  const ScenarioReport rep = scenario_report(alpha_deg * kDegToRad);
  *target.stream << "theta_deg=" << fmt9(rep.theta / kDegToRad) << '\n'
                 << "I_AE=" << fmt9(rep.i_ae) << '\n'
                 << "I_EB=" << fmt9(rep.i_eb) << '\n'
                 << "I_AB=" << fmt9(rep.i_ab) << '\n'
                 << "z_AB=" << fmt9(rep.z_ab) << '\n'
                 << "D=" << fmt9(rep.disturbance) << '\n';
  return 0;
}

int cmd_davies(int dim, int trials, std::uint64_t seed, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  OutputTarget target;
  if (!target.open(out_path, out)) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }
  const std::vector<std::size_t> dims = {static_cast<std::size_t>(dim)};
  const auto result = davies_experiment(dims, trials, SeededRng(seed));
  *target.stream << "trial,dim,I_at_N,max_improvement_beyond_N\n";
  for (const DaviesTrial& t : result)
    *target.stream << t.index << ',' << t.dim << ',' << fmt9(t.info_at_dim()) << ','
                   << fmt9(t.max_improvement()) << '\n';
  return 0;
}

int cmd_lambda_study(double alpha_deg, int points, std::uint64_t seed, int restarts,
                     const std::string& out_path, std::ostream& out, std::ostream& err) {
  OutputTarget target;
  if (!target.open(out_path, out)) {
    err << "error: cannot open output path '" << out_path << "'\n";
    return 2;
  }
  const double alpha = alpha_deg * kDegToRad;
  const double d1 = max_frontier_disturbance(alpha);
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k)
    grid[k] = d1 * static_cast<double>(k) / static_cast<double>(points - 1);
  const auto rows = lambda_zero_study(alpha, grid, SeededRng(seed), restarts);
  *target.stream << "d_tol,lambda,abs_sin_lambda\n";
  for (const LambdaStudyRow& r : rows)
    *target.stream << fmt9(r.d_tol) << ',' << fmt9(r.lambda) << ',' << fmt9(r.abs_sin_lambda)
                   << '\n';
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eavesdropping tradeoff model for two non-orthogonal qubit signals"};
  app.name("infodist");
  app.require_subcommand(1);

  double alpha_deg = 0.0;
  double dtol = 0.0;
  double penalty = 1000.0;
  std::uint64_t seed = 1;
  int points = 65;
  int restarts = 20;
  int trials = 30;
  int dim = 2;
  std::string out_path = "-";

  auto* frontier_cmd = app.add_subcommand("frontier", "analytic information-disturbance curve (CSV)");
  frontier_cmd->add_option("--alpha-deg", alpha_deg, "signal angle in degrees")
      ->required()
      ->check(CLI::Range(0.0, 45.0));
  frontier_cmd->add_option("--points", points, "samples over phi in [0, pi/4]")
      ->check(CLI::Range(2, 1000000));
  frontier_cmd->add_option("--out", out_path, "output path or - for stdout");

  auto* optimize_cmd = app.add_subcommand("optimize", "penalty-merit search over the probe angles");
  optimize_cmd->add_option("--alpha-deg", alpha_deg, "signal angle in degrees")
      ->required()
      ->check(CLI::Range(0.0, 45.0));
  optimize_cmd->add_option("--dtol", dtol, "tolerated disturbance")->required();
  optimize_cmd->add_option("--seed", seed, "random seed");
  optimize_cmd->add_option("--restarts", restarts, "random restarts")->check(CLI::Range(1, 10000));
  optimize_cmd->add_option("--penalty", penalty, "penalty weight in the merit");
  optimize_cmd->add_option("--out", out_path, "output path or - for stdout");

  auto* scenario_cmd = app.add_subcommand("scenario", "three-party mutual informations");
  scenario_cmd->add_option("--alpha-deg", alpha_deg, "signal angle in degrees")
      ->required()
      ->check(CLI::Range(0.0, 45.0));
  scenario_cmd->add_option("--out", out_path, "output path or - for stdout");

  auto* davies_cmd = app.add_subcommand("davies", "outcome-count experiment on random state pairs");
  davies_cmd->add_option("--dim", dim, "Hilbert space dimension")->required()->check(CLI::Range(2, 4));
  davies_cmd->add_option("--trials", trials, "number of random pairs")->check(CLI::Range(1, 100000));
  davies_cmd->add_option("--seed", seed, "random seed");
  davies_cmd->add_option("--out", out_path, "output path or - for stdout");

  auto* lambda_cmd = app.add_subcommand("lambda-study", "lambda of the optimum over a d_tol grid");
  lambda_cmd->add_option("--alpha-deg", alpha_deg, "signal angle in degrees")
      ->required()
      ->check(CLI::Range(0.0, 45.0));
  lambda_cmd->add_option("--points", points, "d_tol grid size")->check(CLI::Range(2, 10000));
  lambda_cmd->add_option("--seed", seed, "random seed");
  lambda_cmd->add_option("--restarts", restarts, "random restarts per grid point")
      ->check(CLI::Range(1, 10000));
  lambda_cmd->add_option("--out", out_path, "output path or - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (frontier_cmd->parsed()) return cmd_frontier(alpha_deg, points, out_path, out, err);
    if (optimize_cmd->parsed()) return cmd_optimize(alpha_deg, dtol, seed, restarts, penalty, out_path, out, err);
    if (scenario_cmd->parsed()) return cmd_scenario(alpha_deg, out_path, out, err);
    if (davies_cmd->parsed()) return cmd_davies(dim, trials, seed, out_path, out, err);
    if (lambda_cmd->parsed()) return cmd_lambda_study(alpha_deg, points, seed, restarts, out_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace infodist
