#include "qepi/channels.hpp"

#include <cmath>

namespace qepi {

namespace {

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("both states must have the same dimension");
  }
}

}  // namespace

SwapParams::SwapParams(double a) : a_(a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("swap parameter a must lie in [0, 1]");
}

Matrix KrausSet::completeness() const {
  if (operators.empty()) return {};
  const auto n = operators.front().cols();
  Matrix acc = Matrix::Zero(n, n);
  for (const Matrix& a : operators) acc += a.adjoint() * a;
  return acc;
}

Matrix swap_operator(int d) {
  if (d < 1) throw DimensionMismatch("dimension must be positive");
  const int n = d * d;
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  }
  return s;
}

Matrix partial_swap_unitary(int d, SwapParams p) {
  const int n = d * d;
  Matrix u = p.sqrt_a() * Matrix::Identity(n, n);
  u += Complex(0.0, p.sqrt_one_minus_a()) * swap_operator(d);
  return u;
}

KrausSet partial_swap_kraus(int d, SwapParams p) {
  KrausSet set;
  set.operators.reserve(static_cast<std::size_t>(d));
  const Complex ib(0.0, p.sqrt_one_minus_a());
  for (int k = 0; k < d; ++k) {
    Matrix a = Matrix::Zero(d, d * d);
    for (int i = 0; i < d; ++i) {
      // I (x) <k| maps |i,k> to |i>; <k| (x) I maps |k,i> to |i>.
      a(i, i * d + k) += p.sqrt_a();
      a(i, k * d + i) += ib;
    }
    set.operators.push_back(std::move(a));
  }
  return set;
}

DensityMatrix boxplus_closed_form(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  SwapParams p) {
  require_same_dim(rho, sigma);
  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();
  Matrix out = p.a() * r + (1.0 - p.a()) * s;
  out -= Complex(0.0, p.cross_weight()) * (r * s - s * r);
  return DensityMatrix::assume_valid(out);
}

DensityMatrix boxplus_via_unitary(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  SwapParams p) {
  require_same_dim(rho, sigma);
  const int d = rho.dim();
  const Matrix u = partial_swap_unitary(d, p);
  const Matrix joint = u * kron(rho.matrix(), sigma.matrix()) * u.adjoint();
  return partial_trace_second(joint, d);
}

DensityMatrix apply_partial_swap_channel(const Matrix& rho12, int d, SwapParams p) {
  if (rho12.rows() != static_cast<Eigen::Index>(d) * d || rho12.cols() != rho12.rows()) {
    throw DimensionMismatch("channel input must be d^2 x d^2");
  }
  const KrausSet kraus = partial_swap_kraus(d, p);
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& a : kraus.operators) out += a * rho12 * a.adjoint();
  return DensityMatrix::assume_valid(out);
}

DensityMatrix boxplus_via_kraus(const DensityMatrix& rho, const DensityMatrix& sigma,
                                SwapParams p) {
  require_same_dim(rho, sigma);
  return apply_partial_swap_channel(kron(rho.matrix(), sigma.matrix()), rho.dim(), p);
}

BlochVector boxplus_bloch(const BlochVector& r1, const BlochVector& r2, SwapParams p) {
  const double a = p.a();
  const double w = p.cross_weight();
  const BlochVector c = cross(r1, r2);
  return {a * r1.x + (1.0 - a) * r2.x + w * c.x,
          a * r1.y + (1.0 - a) * r2.y + w * c.y,
          a * r1.z + (1.0 - a) * r2.z + w * c.z};
}

DensityMatrix mixing_channel(const DensityMatrix& rho, const DensityMatrix& sigma, SwapParams p) {
  require_same_dim(rho, sigma);
  return DensityMatrix::assume_valid(p.a() * rho.matrix() + (1.0 - p.a()) * sigma.matrix());
}

FixedSigmaChannel::FixedSigmaChannel(DensityMatrix sigma, SwapParams p)
    : sigma_(std::move(sigma)), params_(p) {}

DensityMatrix FixedSigmaChannel::apply(const DensityMatrix& rho) const {
  return boxplus_closed_form(rho, sigma_, params_);
}

}  // namespace qepi
