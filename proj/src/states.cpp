#include "qepi/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace qepi {

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(6);
  os << what << " (deviation " << value << ")";
  return os.str();
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("density matrix must be square and non-empty");
  }
}

Complex standard_complex_normal(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(gen);
  const double im = normal(gen);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

}  // namespace

DensityMatrix DensityMatrix::validate(const Matrix& m, const Tolerances& tol) {
  require_square(m);
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.hermitian) {
    throw NotHermitian(describe("matrix is not Hermitian", asym), asym);
  }
  Matrix h = 0.5 * (m + m.adjoint());

  const double trace_dev = std::abs(h.trace().real() - 1.0);
  if (trace_dev > tol.trace) {
    throw TraceNotOne(describe("trace differs from one", trace_dev), trace_dev);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw EigenFailure("Hermitian eigensolver did not converge");
  }
  const double lowest = es.eigenvalues().minCoeff();
  if (lowest < -tol.psd) {
    throw NotPSD(describe("matrix has a negative eigenvalue", lowest), lowest);
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::assume_valid(const Matrix& m) {
  require_square(m);
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw DimensionMismatch("dimension must be positive");
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::basis_state(int d, int index) {
  if (d < 1 || index < 0 || index >= d) {
    throw DimensionMismatch("basis index out of range");
  }
  Matrix m = Matrix::Zero(d, d);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  const auto d = static_cast<Eigen::Index>(probabilities.size());
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = probabilities[static_cast<std::size_t>(i)];
  return validate(m);
}

Spectrum Spectrum::from_probabilities(std::vector<double> p, const Tolerances& tol) {
  if (p.empty()) throw DimensionMismatch("empty probability vector");
  double sum = 0.0;
  for (double& v : p) {
    if (!std::isfinite(v)) throw DomainError("non-finite probability");
    if (v < -tol.psd) {
      throw NotPSD(describe("negative probability", v), v);
    }
    if (v < kSpectralNoiseFloor) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol.trace) {
    throw TraceNotOne(describe("probabilities do not sum to one", sum - 1.0), sum - 1.0);
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return Spectrum(std::move(p));
}

int Spectrum::rank() const noexcept {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(),
                                        [](double v) { return v > 0.0; }));
}

double BlochVector::norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

BlochVector cross(const BlochVector& u, const BlochVector& v) noexcept {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Spectrum spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw EigenFailure("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = es.eigenvalues();
  return Spectrum::from_probabilities(std::vector<double>(ev.data(), ev.data() + ev.size()), tol);
}

std::vector<double> eigenvalues_descending(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw EigenFailure("Hermitian eigensolver did not converge");
  }
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

DensityMatrix random_state(int d, int rank, std::mt19937_64& gen) {
  if (d < 1 || rank < 1 || rank > d) {
    throw DomainError("random_state requires 1 <= rank <= d");
  }
  Matrix g(d, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = standard_complex_normal(gen);
  }
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix::assume_valid(w);
}

DensityMatrix random_state(int d, int rank, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_state(d, rank, gen);
}

Matrix random_unitary(int d, std::mt19937_64& gen) {
  Matrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = standard_complex_normal(gen);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

BlochVector random_bloch(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  BlochVector r{normal(gen), normal(gen), normal(gen)};
  const double n = r.norm();
  const double radius = std::cbrt(unif(gen));
  if (n == 0.0) return {};
  return {r.x / n * radius, r.y / n * radius, r.z / n * radius};
}

Matrix pauli(int axis) {
  Matrix p(2, 2);
  switch (axis) {
    case 0: p << 0.0, 1.0, 1.0, 0.0; break;
    case 1: p << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0; break;
    case 2: p << 1.0, 0.0, 0.0, -1.0; break;
    default: throw DomainError("Pauli axis must be 0, 1 or 2");
  }
  return p;
}

DensityMatrix bloch_to_state(const BlochVector& r) {
  Matrix m = Matrix::Identity(2, 2);
  m += r.x * pauli(0) + r.y * pauli(1) + r.z * pauli(2);
  return DensityMatrix::validate(0.5 * m);
}

BlochVector state_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionMismatch("Bloch representation requires d = 2");
  const Matrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace_second(const Matrix& rho12, int d) {
  if (d < 1 || rho12.rows() != static_cast<Eigen::Index>(d) * d ||
      rho12.cols() != rho12.rows()) {
    throw DimensionMismatch("partial_trace_second expects a d^2 x d^2 matrix");
  }
  Matrix out = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += rho12(i * d + k, j * d + k);
      out(i, j) = acc;
    }
  }
  return DensityMatrix::assume_valid(out);
}

}  // namespace qepi
