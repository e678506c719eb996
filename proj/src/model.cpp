#include "infodist/model.hpp"

#include <cmath>
#include <numbers>

namespace infodist {

SignalPair::SignalPair(double alpha_radians) : alpha(alpha_radians) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4 + 1e-12))
    throw std::invalid_argument("SignalPair: alpha outside the canonical range [0, pi/4]");
}

std::array<double, 2> SignalPair::ket0() const { return {std::cos(alpha), std::sin(alpha)}; }
std::array<double, 2> SignalPair::ket1() const { return {std::sin(alpha), std::cos(alpha)}; }
double SignalPair::overlap() const { return std::sin(2.0 * alpha); }

double CoefficientVector::norm_residual() const {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::abs(s - 1.0);
}

double CoefficientVector::cross_residual() const {
  double s = 0.0;
  for (int k = 0; k < 8; ++k) s += x[k] * x[7 - k];
  return std::abs(s);
}

CoefficientVector build_coefficients(const ProbeParams& p) {
  const double sl = std::sin(p.lambda), cl = std::cos(p.lambda);
  const double sm = std::sin(p.mu), cm = std::cos(p.mu);
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double sp = std::sin(p.phi), cp = std::cos(p.phi);
  CoefficientVector v;
  v.x[0] = sl * cm;
  v.x[1] = cl * ct * cp;
  v.x[2] = cl * ct * sp;
  v.x[3] = sl * sm;
  v.x[4] = 0.0;
  v.x[5] = cl * st * cp;
  v.x[6] = -cl * st * sp;
  v.x[7] = 0.0;
  return v;
}

double InteractionTensor::unitarity_residual() const {
  double worst = 0.0;
  for (int m = 0; m < 2; ++m) {
    for (int mp = 0; mp < 2; ++mp) {
      double g = 0.0;
      for (int n = 0; n < 2; ++n)
        for (int b = 0; b < 4; ++b) g += at(m, n, b) * at(mp, n, b);
      worst = std::max(worst, std::abs(g - (m == mp ? 1.0 : 0.0)));
    }
  }
  return worst;
}

InteractionTensor expand_tensor(const CoefficientVector& x) {
  if (x.norm_residual() > 1e-9 || x.cross_residual() > 1e-9)
    throw InvalidCoefficientsError("expand_tensor: coefficient vector violates unitarity constraints");
  InteractionTensor t;
  for (int k = 0; k < 8; ++k) {
    t.a[k] = x.x[k];
    t.a[15 - k] = x.x[k];
  }
  return t;
}

int index_map(int m, int n, int r, int s) {
  if ((m | n | r | s) < 0 || m > 1 || n > 1 || r > 1 || s > 1)
    throw std::invalid_argument("index_map: indices must be 0 or 1");
  return 8 * m + 4 * n + 2 * r + s;
}

}  // namespace infodist
