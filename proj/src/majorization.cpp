#include "qepi/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace qepi {

double scaled_majorization_tol(double tol, int d, double spectral_norm) {
  return std::max(tol, d * std::numeric_limits<double>::epsilon() * spectral_norm);
}

MajorizationReport majorizes(std::span<const double> u, std::span<const double> v, double tol) {
  if (u.size() != v.size()) throw LengthMismatch("majorization needs vectors of equal length");
  std::vector<double> us(u.begin(), u.end());
  std::vector<double> vs(v.begin(), v.end());
  std::sort(us.begin(), us.end(), std::greater<>());
  std::sort(vs.begin(), vs.end(), std::greater<>());

  MajorizationReport rep;
  rep.worst_slack = std::numeric_limits<double>::infinity();
  double pu = 0.0;
  double pv = 0.0;
  for (std::size_t k = 0; k < us.size(); ++k) {
    pu += us[k];
    pv += vs[k];
    const double slack = pv - pu;
    if (slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.worst_k = static_cast<int>(k) + 1;
    }
  }
  if (us.empty()) rep.worst_slack = 0.0;
  rep.total_gap = std::abs(pu - pv);
  rep.holds = rep.worst_slack >= -tol && rep.total_gap <= tol;
  return rep;
}

MajorizationReport check_spectral_majorization(const Spectrum& output, const Spectrum& rho,
                                               const Spectrum& sigma, SwapParams p, double tol) {
  if (output.dim() != rho.dim() || rho.dim() != sigma.dim()) {
    throw DimensionMismatch("spectra must share one dimension");
  }
  std::vector<double> mix(static_cast<std::size_t>(rho.dim()));
  for (int i = 0; i < rho.dim(); ++i) {
    mix[static_cast<std::size_t>(i)] = p.a() * rho[i] + (1.0 - p.a()) * sigma[i];
  }
  return majorizes(output.values(), mix, scaled_majorization_tol(tol, rho.dim()));
}

MajorizationReport check_spectral_majorization(const DensityMatrix& rho, const DensityMatrix& sigma,
                                               SwapParams p, double tol) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("both states must have the same dimension");
  return check_spectral_majorization(spectrum(boxplus_closed_form(rho, sigma, p)), spectrum(rho),
                                     spectrum(sigma), p, tol);
}

double min_inequality_margin(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("min inequality is stated on [0, 1]^2");
  }
  return x * y + std::sqrt(x * (1.0 - x) * y * (1.0 - y)) - std::min(x, y);
}

bool min_inequality_check(double x, double y) { return min_inequality_margin(x, y) >= -1e-14; }

}  // namespace qepi
