#pragma once

#include <array>
#include <stdexcept>

namespace infodist {

/// Thrown by expand_tensor when a hand-built coefficient vector violates
/// the unitarity constraints beyond 1e-9.
class InvalidCoefficientsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alice's two equiprobable real signal states
///   |0> = cos(alpha)|e0> + sin(alpha)|e1>
///   |1> = cos(alpha)|e1> + sin(alpha)|e0>
/// with overlap S = <0|1> = sin(2 alpha). The canonical range [0, pi/4]
/// covers S in [0, 1] once; the two labels are exchanged by swapping the
/// basis, which every downstream quantity is symmetric under.
struct SignalPair {
  double alpha;

  explicit SignalPair(double alpha_radians);

  std::array<double, 2> ket0() const;
  std::array<double, 2> ket1() const;
  double overlap() const;
};

/// Eve's interaction angles. All four are unrestricted (trig handles
/// periodicity); mu only matters when lambda != 0.
struct ProbeParams {
  double lambda = 0.0;
  double mu = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// The eight coefficients X_0..X_7 describing the symmetric half of the
/// interaction tensor. Built from ProbeParams they satisfy
///   sum_K X_K^2 = 1   and   sum_K X_K X_{7-K} = 0
/// exactly; hand-built vectors are checked by expand_tensor.
struct CoefficientVector {
  std::array<double, 8> x{};

  double norm_residual() const;   // |sum X_K^2 - 1|
  double cross_residual() const;  // |sum X_K X_{7-K}|
};

/// Full 16-coefficient real tensor A_{mnrs} with the 01-symmetry
/// A_K = A_{15-K}. Indexing: K = 8m + 4n + 2r + s, beta = 2r + s.
struct InteractionTensor {
  std::array<double, 16> a{};

  double at(int m, int n, int beta) const { return a[8 * m + 4 * n + beta]; }
  double at(int m, int n, int r, int s) const { return a[8 * m + 4 * n + 2 * r + s]; }

  /// max deviation of the two m-row Gram matrix from the 2x2 identity
  double unitarity_residual() const;
};

/// Four-angle parameterization:
///   X0 = sin(l)cos(m)   X1 = cos(l)cos(t)cos(p)   X2 = cos(l)cos(t)sin(p)
///   X3 = sin(l)sin(m)   X5 = cos(l)sin(t)cos(p)   X6 = -cos(l)sin(t)sin(p)
/// and X4 = X7 = 0.
CoefficientVector build_coefficients(const ProbeParams& p);

/// Mirrors X into the full tensor (A_K = A_{15-K} = X_K). Throws
/// InvalidCoefficientsError when either constraint residual exceeds 1e-9.
InteractionTensor expand_tensor(const CoefficientVector& x);

/// K = 8m + 4n + 2r + s for indices in {0,1}.
int index_map(int m, int n, int r, int s);

}  // namespace infodist
