#pragma once

#include <span>

#include "qepi/channels.hpp"

namespace qepi {

/// Outcome of a u < v (u majorized by v) test.
struct MajorizationReport {
  bool holds = true;
  /// min_k (prefix_v(k) - prefix_u(k)) over the sorted-descending prefix sums.
  double worst_slack = 0.0;
  /// 1-based k attaining worst_slack.
  int worst_k = 0;
  /// |sum u - sum v|.
  double total_gap = 0.0;
};

inline constexpr double kDefaultMajorizationTol = 1e-10;

/// Prefix-sum slack tolerance grown with dimension so eigensolver error that
/// accumulates linearly in d is not misreported; equals `tol` at desk scale.
double scaled_majorization_tol(double tol, int d, double spectral_norm = 1.0);

MajorizationReport majorizes(std::span<const double> u, std::span<const double> v, double tol);

/// lambda(rho [+]_a sigma) < a lambda(rho) + (1-a) lambda(sigma).
MajorizationReport check_spectral_majorization(const DensityMatrix& rho, const DensityMatrix& sigma,
                                               SwapParams p, double tol = kDefaultMajorizationTol);

/// Same relation for a precomputed channel output.
MajorizationReport check_spectral_majorization(const Spectrum& output, const Spectrum& rho,
                                               const Spectrum& sigma, SwapParams p, double tol);

/// x y + sqrt(x(1-x) y(1-y)) - min{x, y}; nonnegative on [0,1]^2.
double min_inequality_margin(double x, double y);
bool min_inequality_check(double x, double y);

}  // namespace qepi
