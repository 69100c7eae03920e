#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qepi/entropies.hpp"

namespace qepi {

/// q_{k,x} = (x, ..., x, y, ..., y) with k copies of x in [0, 1/d] and
/// y = (1 - k x)/(d - k) filling the remaining d - k slots.
class TwoValuedDist {
 public:
  TwoValuedDist(int d, int k, double x);

  int dim() const noexcept { return d_; }
  int small_count() const noexcept { return k_; }
  double small() const noexcept { return x_; }
  double large() const noexcept { return y_; }

  /// H(k, x) = -k x log x - (d-k) y log y.
  double entropy() const;
  /// L(k, x) = k x (log x)^2 + (d-k) y (log y)^2.
  double second_moment() const;
  Spectrum to_spectrum() const;

 private:
  int d_;
  int k_;
  double x_;
  double y_;
};

/// s_r(x) = -r x log x - (1 - r x) log(1 - r x), x in [0, 1/(r+1)].
double s_r(double x, int r);
/// w_r(x) = r x (1 - r x) (log x - log(1 - r x))^2, x in [0, 1/(r+1)].
double w_r(double x, int r);

struct LMaxResult {
  double l_max = 0.0;
  int k_star = 0;
  double x_star = 0.0;
};

/// Maximizes L(q_{k,x}) over integer k in [1, d-1] and x on the curve
/// H(q_{k,x}) = H0, each root located by grid bracketing plus bisection.
LMaxResult l_max_bruteforce(int d, double h0, int grid);

struct ThresholdResult {
  int d = 0;
  double c_max = 0.0;
  double argmax_x = 0.0;
  /// 1 / [(1 + log(d-1))/2 + (log(d-1))^2/4].
  double lower_bound = 0.0;
  /// max_x w_{d-1}(x).
  double max_w = 0.0;
};

double c_max_lower_bound(int d);

/// Largest entropy-power exponent allowed by the surprisal-variance condition:
/// c_max = 1 / max_{0 <= x <= 1/d} w_{d-1}(x).
ThresholdResult c_max_entropy_power(int d);

struct ConditionCheck {
  bool holds = true;
  double worst_margin = 0.0;
  double worst_x = 0.0;
};

/// On x = i/(grid d), i = 1..grid: y = g_inv(c s_r(x)), margin k(y) - c w_r(x).
ConditionCheck epni_condition_check(int d, double c, int grid);

/// Most negative midpoint-concavity margin of p -> f(p rho + (1-p) sigma) over
/// random segments. Throws OutOfCertifiedRange unless `force` is set.
double concavity_fuzz(const EntropyFunctional& f, int d, std::int64_t trials, std::uint64_t seed,
                      bool force = false);

/// (g(y), k(y)) for y log-spaced over [1e-6, 1e6].
struct GkPoint {
  double y = 0.0;
  double g = 0.0;
  double k = 0.0;
  /// 1 - k(y), kept separately for slope computations near k = 1.
  double k_complement = 0.0;
};

std::vector<GkPoint> parametric_gk_curve(int samples);

/// Secant slopes (k_{i+1} - k_i)/(g_{i+1} - g_i) of a sampled curve.
std::vector<double> gk_slopes(const std::vector<GkPoint>& curve);

}  // namespace qepi
