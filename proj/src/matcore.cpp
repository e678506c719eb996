#include "infodist/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace infodist {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + other.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix::operator-: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - other.data_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += aik * other(k, j);
    }
  return m;
}

Matrix Matrix::operator*(Complex scale) const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * scale;
  return m;
}

double Matrix::hermiticity_residual() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double Matrix::max_abs() const {
  double worst = 0.0;
  for (const Complex& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

double Matrix::max_imag() const {
  double worst = 0.0;
  for (const Complex& v : data_) worst = std::max(worst, std::abs(v.imag()));
  return worst;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

Matrix outer(const CVector& u, const CVector& v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

std::uint64_t SeededRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SeededRng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

SeededRng SeededRng::derive(std::uint64_t stream) const {
  std::uint64_t z = state_ ^ (0xD1B54A32D192ED03ULL * (stream + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return SeededRng(z ^ (z >> 31));
}

Matrix partial_trace(const Matrix& rho, TraceSide side) {
  constexpr std::size_t da = BipartiteIndex::dim_a;
  constexpr std::size_t de = BipartiteIndex::dim_e;
  if (rho.rows() != da * de || rho.cols() != da * de)
    throw std::invalid_argument("partial_trace: expected an 8x8 state");
  if (rho.hermiticity_residual() >= 1e-12)
    throw std::invalid_argument("partial_trace: input is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) >= 1e-12)
    throw std::invalid_argument("partial_trace: input trace is not 1");

  if (side == TraceSide::traceE) {
    Matrix out(da, da);
    for (std::size_t m = 0; m < da; ++m)
      for (std::size_t n = 0; n < da; ++n)
        for (std::size_t b = 0; b < de; ++b) out(m, n) += rho(m * de + b, n * de + b);
    return out;
  }
  Matrix out(de, de);
  for (std::size_t b = 0; b < de; ++b)
    for (std::size_t g = 0; g < de; ++g)
      for (std::size_t m = 0; m < da; ++m) out(b, g) += rho(m * de + b, m * de + g);
  return out;
}

Matrix random_density_matrix(SeededRng& rng, std::size_t dim, std::size_t rank) {
  if (dim == 0 || rank == 0 || rank > dim)
    throw std::invalid_argument("random_density_matrix: need 1 <= rank <= dim");
  Matrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  Matrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return rho * Complex(1.0 / tr, 0.0);
}

namespace {

Complex inner_product(const CVector& u, const CVector& v) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) acc += std::conj(u[k]) * v[k];
  return acc;
}

double norm(const CVector& v) { return std::sqrt(inner_product(v, v).real()); }

}  // namespace

std::vector<CVector> gram_orthonormalize(const std::vector<CVector>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t dim = vectors.front().size();
  std::vector<CVector> basis;
  basis.reserve(vectors.size());
  for (const CVector& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("gram_orthonormalize: ragged input");
    CVector w = v;
    // two passes of projection keep the residual orthogonality near machine eps
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& b : basis) {
        const Complex c = inner_product(b, w);
        for (std::size_t k = 0; k < dim; ++k) w[k] -= c * b[k];
      }
    }
    const double n = norm(w);
    if (n < 1e-10 * std::max(1.0, norm(v)))
      throw DegenerateInputError("gram_orthonormalize: linearly dependent input");
    for (Complex& x : w) x /= n;
    basis.push_back(std::move(w));
  }
  return basis;
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigensystem: square matrix required");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < 1e-13 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // columns: col_p' = c*col_p + s*conj(phase)*col_q ; col_q' = -s*phase*col_p + c*col_q
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(phase) * aiq;
          a(i, q) = -s * phase * aip + c * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(phase) * viq;
          v(i, q) = -s * phase * vip + c * viq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + s * phase * aqj;
          a(q, j) = -s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sys.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) sys.vectors(i, k) = v(i, order[k]);
  }
  return sys;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) { return hermitian_eigensystem(m).values; }

double min_eigenvalue(const Matrix& m) {
  const std::vector<double> vals = hermitian_eigenvalues(m);
  return vals.front();
}

}  // namespace infodist
