#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qepi/error.hpp"

namespace qepi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Acceptance thresholds for the three density-matrix invariants.
struct Tolerances {
  double hermitian = 1e-10;
  double psd = 1e-10;
  double trace = 1e-10;
};

/// Eigenvalues with magnitude below this are treated as exact zeros.
/// Double-precision Hermitian eigensolvers on d <= 64 leave O(d * eps)
/// residue on the null space; zeroing it keeps rank-sensitive functionals
/// (Renyi with small alpha, log-rank) stable.
inline constexpr double kSpectralNoiseFloor = 1e-12;

/// A Hermitian, positive semidefinite, unit-trace matrix. Instances are only
/// produced by `validate` or by library operations that preserve the
/// invariants.
class DensityMatrix {
 public:
  /// Symmetrizes `m` to (m + m^dagger)/2 and checks all invariants.
  static DensityMatrix validate(const Matrix& m, const Tolerances& tol = {});

  /// Wraps `m` after Hermitian symmetrization, without eigenvalue checks.
  /// Used by operations whose output is a state by construction.
  static DensityMatrix assume_valid(const Matrix& m);

  static DensityMatrix maximally_mixed(int d);
  static DensityMatrix basis_state(int d, int index);
  static DensityMatrix diagonal(std::span<const double> probabilities);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Eigenvalues sorted non-increasing, clamped at zero.
class Spectrum {
 public:
  /// Builds a spectrum from an arbitrary probability vector (any order).
  /// Entries above -tol.psd are clamped to zero; the sum must be 1 within
  /// tol.trace.
  static Spectrum from_probabilities(std::vector<double> p, const Tolerances& tol = {});

  std::span<const double> values() const noexcept { return values_; }
  int dim() const noexcept { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  /// Number of strictly positive entries.
  int rank() const noexcept;

 private:
  explicit Spectrum(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const noexcept;
};

BlochVector cross(const BlochVector& u, const BlochVector& v) noexcept;

/// Eigenvalues of a state in non-increasing order. Throws EigenFailure if the
/// solver does not converge and TraceNotOne if the eigenvalue sum drifted.
Spectrum spectrum(const DensityMatrix& rho, const Tolerances& tol = {});

/// Eigenvalues of the Hermitian part of `m`, sorted non-increasing, with no
/// clamping or validation. For inspecting matrices that may not be states.
std::vector<double> eigenvalues_descending(const Matrix& m);

/// Ginibre-induced random state G G^dagger / Tr(G G^dagger), G is d x rank.
DensityMatrix random_state(int d, int rank, std::mt19937_64& gen);
DensityMatrix random_state(int d, int rank, std::uint64_t seed);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) moved into Q.
Matrix random_unitary(int d, std::mt19937_64& gen);

/// Uniformly distributed point in the unit ball.
BlochVector random_bloch(std::mt19937_64& gen);

DensityMatrix bloch_to_state(const BlochVector& r);
BlochVector state_to_bloch(const DensityMatrix& rho);

/// (Tr_2 rho12)_{ij} = sum_k rho12[(i,k),(j,k)], composite index i*d + k.
DensityMatrix partial_trace_second(const Matrix& rho12, int d);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Pauli matrices sigma_x, sigma_y, sigma_z.
Matrix pauli(int axis);

}  // namespace qepi
