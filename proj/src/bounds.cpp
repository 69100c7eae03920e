#include "qepi/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qepi/entropies.hpp"

namespace qepi {

namespace {

double checked_entropy(double h, int d) {
  const double top = std::log(static_cast<double>(d));
  if (!(h >= -1e-12 && h <= top + 1e-12)) throw DomainError("entropy outside [0, log d]");
  return std::clamp(h, 0.0, top);
}

void check_a(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("a must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Linear: return "linear";
    case BoundKind::EntropyPower: return "entropy-power";
    case BoundKind::PhotonNumber: return "photon-number";
    case BoundKind::QubitOptimal: return "qubit-optimal";
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind k : kAllBoundKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double bound_linear(double h_rho, double h_sigma, double a) {
  check_a(a);
  return a * h_rho + (1.0 - a) * h_sigma;
}

double bound_entropy_power(double h_rho, double h_sigma, double a, int d) {
  check_a(a);
  if (d < 2) throw DomainError("entropy power bound needs d >= 2");
  h_rho = checked_entropy(h_rho, d);
  h_sigma = checked_entropy(h_sigma, d);
  if (a == 1.0) return h_rho;
  if (a == 0.0) return h_sigma;
  const double c = EntropyFunctional::certified_entropy_power_c(d);
  return std::log(a * std::exp(c * h_rho) + (1.0 - a) * std::exp(c * h_sigma)) / c;
}

double bound_photon_number(double h_rho, double h_sigma, double a, int d) {
  check_a(a);
  if (d < 2) throw DomainError("photon number bound needs d >= 2");
  h_rho = checked_entropy(h_rho, d);
  h_sigma = checked_entropy(h_sigma, d);
  if (a == 1.0) return h_rho;
  if (a == 0.0) return h_sigma;
  const double c = EntropyFunctional::certified_photon_number_c(d);
  return g(a * g_inv(c * h_rho) + (1.0 - a) * g_inv(c * h_sigma)) / c;
}

double bound_qubit_optimal(double h_rho, double h_sigma, double a) {
  check_a(a);
  const double top = std::log(2.0);
  if (!(h_rho >= 0.0 && h_rho <= top + 1e-12 && h_sigma >= 0.0 && h_sigma <= top + 1e-12)) {
    throw DomainError("qubit bound needs entropies in [0, log 2]");
  }
  const double r = a * ell_inv(std::min(h_rho, ell(0.0))) +
                   (1.0 - a) * ell_inv(std::min(h_sigma, ell(0.0)));
  return ell(std::min(r, 1.0));
}

double bound_value(BoundKind kind, double h_rho, double h_sigma, double a, int d) {
  switch (kind) {
    case BoundKind::Linear: return bound_linear(h_rho, h_sigma, a);
    case BoundKind::EntropyPower: return bound_entropy_power(h_rho, h_sigma, a, d);
    case BoundKind::PhotonNumber: return bound_photon_number(h_rho, h_sigma, a, d);
    case BoundKind::QubitOptimal:
      if (d != 2) throw DomainError("the optimal bound is only known for qubits (d = 2)");
      return bound_qubit_optimal(h_rho, h_sigma, a);
  }
  return 0.0;
}

bool bound_certified(BoundKind kind, int d) {
  return kind != BoundKind::QubitOptimal || d == 2;
}

BoundCurve sample_bound_curve(BoundKind kind, SwapParams p, double sigma_entropy, int d,
                              int samples) {
  if (samples < 2) throw DomainError("a bound curve needs at least two samples");
  if (kind == BoundKind::QubitOptimal && d != 2) {
    throw DomainError("the optimal bound is only known for qubits (d = 2)");
  }
  BoundCurve curve;
  curve.kind = kind;
  curve.a = p.a();
  curve.d = d;
  curve.sigma_entropy = sigma_entropy;
  curve.certified = bound_certified(kind, d);
  const double top = std::log(static_cast<double>(d));
  curve.samples.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double h0 = i + 1 == samples ? top : top * i / (samples - 1);
    curve.samples.emplace_back(h0, bound_value(kind, h0, sigma_entropy, p.a(), d));
  }
  return curve;
}

MinOutputBound min_output_entropy_lb(BoundKind kind, SwapParams p, const DensityMatrix& sigma) {
  const int d = sigma.dim();
  const double h_sigma = von_neumann(spectrum(sigma));
  const double top = std::log(static_cast<double>(d));
  constexpr int kGrid = 10000;
  auto G = [&](double h0) { return bound_value(kind, h0, h_sigma, p.a(), d); };

  MinOutputBound res;
  int best = 0;
  double prev = G(0.0);
  res.value = prev;
  for (int i = 1; i <= kGrid; ++i) {
    const double h0 = i == kGrid ? top : top * i / kGrid;
    const double v = G(h0);
    if (v < prev - 1e-12) res.monotone = false;
    if (v < res.value) {
      res.value = v;
      best = i;
    }
    prev = v;
  }
  res.argmin_h0 = top * best / kGrid;
  if (best > 0 && best < kGrid) {
    double lo = top * (best - 1) / kGrid;
    double hi = top * (best + 1) / kGrid;
    constexpr double kGolden = 0.6180339887498948482;
    while (hi - lo > 1e-12) {
      const double x1 = hi - kGolden * (hi - lo);
      const double x2 = lo + kGolden * (hi - lo);
      if (G(x1) < G(x2)) {
        hi = x2;
      } else {
        lo = x1;
      }
    }
    const double h0 = 0.5 * (lo + hi);
    if (G(h0) < res.value) {
      res.value = G(h0);
      res.argmin_h0 = h0;
    }
  }
  return res;
}

double holevo_upper_bound(SwapParams p, const DensityMatrix& sigma) {
  const double log_d = std::log(static_cast<double>(sigma.dim()));
  return log_d - (1.0 - p.a()) * von_neumann(spectrum(sigma));
}

}  // namespace qepi
