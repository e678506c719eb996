#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace infodist {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Thrown by gram_orthonormalize when the input vectors are linearly
/// dependent within tolerance.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major, intended for dimensions <= 16.
/// Entries with exactly zero imaginary parts make the matrix "real";
/// the channel code keeps everything real, the Davies experiment uses
/// genuinely complex states.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex trace() const;
  Matrix adjoint() const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(Complex scale) const;

  /// max_ij |(M - M^dagger)_ij|; zero for an exactly Hermitian matrix.
  double hermiticity_residual() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_residual() < tol; }

  /// max_ij |M_ij|
  double max_abs() const;
  /// max_ij |imag(M_ij)|
  double max_imag() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix outer(const CVector& u, const CVector& v);

/// Joint index convention for the qubit (dim 2) x probe (dim 4) system:
/// |e_m, v_beta> lives at 4*m + beta, and the probe label beta packs the
/// Latin index pair rs as beta = 2*r + s.
struct BipartiteIndex {
  static constexpr std::size_t dim_a = 2;
  static constexpr std::size_t dim_e = 4;

  static std::size_t flatten(std::size_t alice, std::size_t probe) {
    if (alice >= dim_a || probe >= dim_e) throw std::invalid_argument("BipartiteIndex: index out of range");
    return alice * dim_e + probe;
  }
  static std::pair<std::size_t, std::size_t> unflatten(std::size_t joint) {
    if (joint >= dim_a * dim_e) throw std::invalid_argument("BipartiteIndex: joint index out of range");
    return {joint / dim_e, joint % dim_e};
  }
  static std::size_t probe_index(std::size_t r, std::size_t s) {
    if (r >= 2 || s >= 2) throw std::invalid_argument("BipartiteIndex: probe pair out of range");
    return 2 * r + s;
  }
};

/// Deterministic 64-bit generator (SplitMix64) with Box-Muller Gaussian
/// sampling. The whole state is the seed plus the cached Gaussian spare,
/// so copies advance independently and identical seeds reproduce the
/// stream bit-exactly on any platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// uniform double in [0, 1)
  double uniform();
  double uniform(double lo, double hi);
  /// standard normal via Box-Muller; caches the paired sample
  double gaussian();

  /// Child generator for an independent stream; the parent is unchanged.
  /// Distinct stream ids give decorrelated children (splitmix hash of
  /// the current state and the id).
  SeededRng derive(std::uint64_t stream) const;

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class TraceSide { traceE, traceB };

/// Partial trace of an 8x8 state over the probe (traceE -> 2x2) or over
/// Bob's qubit (traceB -> 4x4). The input must be Hermitian with unit
/// trace within 1e-12.
Matrix partial_trace(const Matrix& rho, TraceSide side);

/// Random density matrix of the requested dimension and rank (Ginibre
/// construction: G G^dagger normalized, G complex Gaussian dim x rank).
Matrix random_density_matrix(SeededRng& rng, std::size_t dim, std::size_t rank);

/// Modified Gram-Schmidt with re-orthogonalization. Throws
/// DegenerateInputError when the input is linearly dependent within 1e-10.
std::vector<CVector> gram_orthonormalize(const std::vector<CVector>& vectors);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns are eigenvectors
};

/// Cyclic Jacobi eigensolver for Hermitian matrices (dims <= 16 in this
/// project), off-diagonal tolerance 1e-13 relative to the matrix scale.
EigenSystem hermitian_eigensystem(const Matrix& m);
std::vector<double> hermitian_eigenvalues(const Matrix& m);
double min_eigenvalue(const Matrix& m);

}  // namespace infodist
