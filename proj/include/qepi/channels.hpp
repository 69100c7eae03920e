#pragma once

#include <vector>

#include "qepi/states.hpp"

namespace qepi {

/// Interpolation parameter a in [0, 1] of the partial swap.
class SwapParams {
 public:
  explicit SwapParams(double a);

  double a() const noexcept { return a_; }
  double sqrt_a() const noexcept { return std::sqrt(a_); }
  double sqrt_one_minus_a() const noexcept { return std::sqrt(1.0 - a_); }
  /// sqrt(a (1 - a)), the weight of the commutator term.
  double cross_weight() const noexcept { return std::sqrt(a_ * (1.0 - a_)); }

 private:
  double a_;
};

/// Kraus operators A_k = sqrt(a) I (x) <k| + i sqrt(1-a) <k| (x) I, each d x d^2.
struct KrausSet {
  std::vector<Matrix> operators;

  /// Sum_k A_k^dagger A_k, which must be the d^2 identity.
  Matrix completeness() const;
};

/// S = sum_{i,j} |i><j| (x) |j><i|.
Matrix swap_operator(int d);

/// U_a = sqrt(a) I + i sqrt(1-a) S.
Matrix partial_swap_unitary(int d, SwapParams p);

KrausSet partial_swap_kraus(int d, SwapParams p);

/// a rho + (1-a) sigma - sqrt(a(1-a)) i [rho, sigma]. Production path.
DensityMatrix boxplus_closed_form(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  SwapParams p);

/// Tr_2(U_a (rho (x) sigma) U_a^dagger), materialized densely.
DensityMatrix boxplus_via_unitary(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  SwapParams p);

/// sum_k A_k (rho (x) sigma) A_k^dagger.
DensityMatrix boxplus_via_kraus(const DensityMatrix& rho, const DensityMatrix& sigma,
                                SwapParams p);

/// Partial swap channel on an arbitrary (not necessarily product) d^2 x d^2 input.
DensityMatrix apply_partial_swap_channel(const Matrix& rho12, int d, SwapParams p);

/// Qubit rule r = a r1 + (1-a) r2 + sqrt(a(1-a)) r1 x r2.
BlochVector boxplus_bloch(const BlochVector& r1, const BlochVector& r2, SwapParams p);

/// Plain convex mixing a rho + (1-a) sigma.
DensityMatrix mixing_channel(const DensityMatrix& rho, const DensityMatrix& sigma, SwapParams p);

/// rho -> rho [+]_a sigma for a fixed environment state sigma. With sigma = I/d
/// this is the depolarizing channel with parameter a.
class FixedSigmaChannel {
 public:
  FixedSigmaChannel(DensityMatrix sigma, SwapParams p);

  DensityMatrix apply(const DensityMatrix& rho) const;

  const DensityMatrix& sigma() const noexcept { return sigma_; }
  SwapParams params() const noexcept { return params_; }
  int dim() const noexcept { return sigma_.dim(); }

 private:
  DensityMatrix sigma_;
  SwapParams params_;
};

}  // namespace qepi
