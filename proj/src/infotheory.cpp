#include "infodist/infotheory.hpp"

#include <cmath>

namespace infodist {

namespace {

constexpr double kCompletenessTol = 1e-10;
constexpr double kRenormalizableTol = 1e-8;
constexpr double kOutcomeFloor = 1e-15;

Matrix completeness_sum(const std::vector<Matrix>& elements) {
  Matrix t(elements.front().rows(), elements.front().cols());
  for (const Matrix& e : elements) t = t + e;
  return t;
}

double identity_deviation(const Matrix& t) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      worst = std::max(worst, std::abs(t(i, j) - (i == j ? Complex(1.0) : Complex(0.0))));
  return worst;
}

Matrix inverse_sqrt(const Matrix& t) {
  const EigenSystem sys = hermitian_eigensystem(t);
  Matrix out(t.rows(), t.cols());
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    if (sys.values[k] <= 0.0) throw std::invalid_argument("Povm: completeness sum not positive definite");
    const double w = 1.0 / std::sqrt(sys.values[k]);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        out(i, j) += w * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
  }
  return out;
}

}  // namespace

Povm Povm::from_elements(std::vector<Matrix> elements) {
  if (elements.empty()) throw std::invalid_argument("Povm: no elements");
  const std::size_t d = elements.front().rows();
  for (const Matrix& e : elements) {
    if (e.rows() != d || e.cols() != d) throw std::invalid_argument("Povm: mixed element dimensions");
    if (e.hermiticity_residual() > 1e-10) throw std::invalid_argument("Povm: element not Hermitian");
    if (e.max_abs() > 1e-14 && min_eigenvalue(e) < -1e-10)
      throw std::invalid_argument("Povm: element not positive semidefinite");
  }

  Povm povm;
  const Matrix t = completeness_sum(elements);
  const double dev = identity_deviation(t);
  if (dev <= kCompletenessTol) {
    povm.elements = std::move(elements);
    return povm;
  }
  if (dev > kRenormalizableTol)
    throw std::invalid_argument("Povm: elements do not sum to identity");
  // small optimizer drift: symmetric renormalization T^{-1/2} E T^{-1/2}
  const Matrix s = inverse_sqrt(t);
  povm.elements.reserve(elements.size());
  for (const Matrix& e : elements) povm.elements.push_back(s * e * s);
  povm.renormalized = true;
  return povm;
}

Povm Povm::from_vectors(const std::vector<CVector>& vectors) {
  std::vector<Matrix> elements;
  elements.reserve(vectors.size());
  for (const CVector& w : vectors) elements.push_back(outer(w, w));
  return from_elements(std::move(elements));
}

Ensemble::Ensemble(std::vector<Matrix> states_in, std::vector<double> priors_in)
    : states(std::move(states_in)), priors(std::move(priors_in)) {
  if (states.empty() || states.size() != priors.size())
    throw std::invalid_argument("Ensemble: states/priors size mismatch");
  const std::size_t d = states.front().rows();
  for (const Matrix& s : states)
    if (s.rows() != d || s.cols() != d) throw std::invalid_argument("Ensemble: mixed state dimensions");
  double sum = 0.0;
  for (double p : priors) {
    if (p < 0.0) throw std::invalid_argument("Ensemble: negative prior");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("Ensemble: priors must sum to 1");
}

Ensemble Ensemble::equiprobable(std::vector<Matrix> states) {
  const std::size_t n = states.size();
  return Ensemble(std::move(states), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

SymmetricPair::SymmetricPair(double a_in, double b_in, double c_in) : a(a_in), b(b_in), c(c_in) {
  if (std::abs(a + b - 1.0) > 1e-12) throw InvalidPairError("SymmetricPair: a + b must equal 1");
  if (a * b - c * c < -1e-12) throw InvalidPairError("SymmetricPair: determinant ab - c^2 is negative");
}

Matrix SymmetricPair::first() const {
  Matrix m(2, 2);
  m(0, 0) = a; m(0, 1) = c; m(1, 0) = c; m(1, 1) = b;
  return m;
}

Matrix SymmetricPair::second() const {
  Matrix m(2, 2);
  m(0, 0) = b; m(0, 1) = c; m(1, 0) = c; m(1, 1) = a;
  return m;
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw InvalidDistributionError("shannon_entropy: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidDistributionError("shannon_entropy: probabilities must sum to 1");
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

std::vector<std::vector<double>> povm_outcome_probabilities(const Ensemble& e, const Povm& m) {
  if (e.dim() != m.dim()) throw std::invalid_argument("povm_outcome_probabilities: dimension mismatch");
  std::vector<std::vector<double>> p(m.size(), std::vector<double>(e.states.size(), 0.0));
  for (std::size_t mu = 0; mu < m.size(); ++mu)
    for (std::size_t i = 0; i < e.states.size(); ++i)
      p[mu][i] = (m.elements[mu] * e.states[i]).trace().real();
  return p;
}

double mutual_information(const Ensemble& e, const Povm& m) {
  const auto p = povm_outcome_probabilities(e, m);
  const double h_prior = shannon_entropy(e.priors);
  double h_post = 0.0;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    double q = 0.0;
    for (std::size_t i = 0; i < e.priors.size(); ++i) q += p[mu][i] * e.priors[i];
    if (q < kOutcomeFloor) continue;
    double h_mu = 0.0;
    for (std::size_t i = 0; i < e.priors.size(); ++i) {
      const double post = std::max(0.0, p[mu][i] * e.priors[i] / q);
      if (post > 0.0) h_mu -= post * std::log(post);
    }
    h_post += q * h_mu;
  }
  return std::max(0.0, h_prior - h_post);
}

double binary_info_from_z(double z) {
  z = std::abs(z);
  if (z > 1.0 + 1e-12) throw std::invalid_argument("binary_info_from_z: |z| must not exceed 1");
  z = std::min(z, 1.0);
  double t = (1.0 + z) * std::log1p(z);
  if (z < 1.0) t += (1.0 - z) * std::log1p(-z);
  return t / 2.0;
}

double accessible_info_symmetric(const SymmetricPair& sp) {
  const double t = 1.0 - 4.0 * sp.a * sp.b;
  if (t < -1e-12) throw InvalidPairError("accessible_info_symmetric: 1 - 4ab is negative");
  return binary_info_from_z(std::sqrt(std::max(0.0, t)));
}

}  // namespace infodist
