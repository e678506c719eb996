#pragma once

#include <span>
#include <vector>

#include "infodist/matcore.hpp"

namespace infodist {

class InvalidDistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A positive operator valued measure: PSD elements of one dimension
/// summing to the identity. Completeness drift up to 1e-8 (optimizer
/// iterates) is corrected by a symmetric renormalization and flagged;
/// anything worse is rejected.
struct Povm {
  std::vector<Matrix> elements;
  bool renormalized = false;

  static Povm from_elements(std::vector<Matrix> elements);
  /// rank-one POVM from frame vectors: E_mu = |w_mu><w_mu|
  static Povm from_vectors(const std::vector<CVector>& vectors);

  std::size_t size() const { return elements.size(); }
  std::size_t dim() const { return elements.empty() ? 0 : elements.front().rows(); }
};

/// A finite set of states with prior probabilities.
struct Ensemble {
  std::vector<Matrix> states;
  std::vector<double> priors;

  Ensemble(std::vector<Matrix> states, std::vector<double> priors);
  static Ensemble equiprobable(std::vector<Matrix> states);

  std::size_t dim() const { return states.empty() ? 0 : states.front().rows(); }
};

/// The 2x2 pair ((a,c),(c,b)) and its label swap ((b,c),(c,a)), with
/// a + b = 1 and common determinant d = ab - c^2 >= 0.
struct SymmetricPair {
  double a, b, c;

  SymmetricPair(double a, double b, double c);

  Matrix first() const;
  Matrix second() const;
};

/// Shannon entropy in nats, with 0 log 0 = 0. The input must be a valid
/// probability vector (entries >= 0, sum within 1e-9 of 1).
double shannon_entropy(std::span<const double> p);

/// Outcome probability table P[mu][i] = Tr(E_mu rho_i).
std::vector<std::vector<double>> povm_outcome_probabilities(const Ensemble& e, const Povm& m);

/// Average information gain I = H(priors) - sum_mu q_mu H_mu, where
/// q_mu = sum_j P_{mu j} p_j and the posteriors come from Bayes's rule.
/// Outcomes with q_mu < 1e-15 contribute nothing.
double mutual_information(const Ensemble& e, const Povm& m);

/// [(1+z)ln(1+z) + (1-z)ln(1-z)] / 2 with the z -> 1 limit handled.
double binary_info_from_z(double z);

/// Accessible information of the symmetric pair, z = sqrt(1 - 4ab).
/// The computational basis attains it; the projective sweep in the test
/// suite is the verification oracle.
double accessible_info_symmetric(const SymmetricPair& sp);

}  // namespace infodist
