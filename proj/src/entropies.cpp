#include "qepi/entropies.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qepi {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

constexpr int kMaxBisection = 4000;

// Coefficients c_n of (1+u) (log(1+u)/u)^2 = sum_n c_n u^n.
constexpr int kSeriesTerms = 48;

std::array<double, kSeriesTerms> k_series_coefficients() {
  std::array<double, kSeriesTerms> a{};
  for (int n = 0; n < kSeriesTerms; ++n) a[n] = (n % 2 == 0 ? 1.0 : -1.0) / (n + 1);
  std::array<double, kSeriesTerms> b{};
  for (int n = 0; n < kSeriesTerms; ++n) {
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) acc += a[i] * a[n - i];
    b[n] = acc;
  }
  std::array<double, kSeriesTerms> c{};
  c[0] = b[0];
  for (int n = 1; n < kSeriesTerms; ++n) c[n] = b[n] + b[n - 1];
  return c;
}

double g_prime(double x) { return std::log1p(1.0 / x); }

// k'(x) = (1 + 2x) L^2 + 2 L with L = log x - log(1 + x).
double k_prime(double x) {
  const double l = -std::log1p(1.0 / x);
  return (1.0 + 2.0 * x) * l * l + 2.0 * l;
}

}  // namespace

double von_neumann(const Spectrum& s) {
  double h = 0.0;
  for (double v : s.values()) h -= xlogx(v);
  // A pure state can come back as 1 + eps, giving H of order -1e-16.
  return std::max(h, 0.0);
}

double renyi(const Spectrum& s, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("Renyi order must lie in [0, 1)");
  if (alpha == 0.0) return std::log(static_cast<double>(s.rank()));
  double acc = 0.0;
  for (double v : s.values()) {
    if (v > 0.0) acc += std::pow(v, alpha);
  }
  return std::log(acc) / (1.0 - alpha);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary entropy needs p in [0, 1]");
  return -xlogx(p) - xlogx(1.0 - p);
}

double g(double x) {
  if (!(x >= 0.0)) throw DomainError("g is defined for x >= 0");
  if (x == 0.0) return 0.0;
  // log(1+x) + x log(1 + 1/x); avoids cancelling two O(x log x) terms.
  return std::log1p(x) + x * std::log1p(1.0 / x);
}

double g_inv(double y) {
  if (!(y >= 0.0)) throw DomainError("g_inv is defined for y >= 0");
  if (y == 0.0) return 0.0;
  // exp(y-1) - 1/2 <= g^{-1}(y) <= exp(y-1) - 1/e; for y < 1 the root is in [0, 1].
  const double e = std::exp(y - 1.0);
  if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
  double lo = std::max(0.0, e - 0.5);
  double hi = std::max(1.0, e);
  int it = 0;
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < y ? lo : hi) = mid;
    if (++it > kMaxBisection) throw NumericalFailure("g_inv bisection did not converge");
  }
  double x = 0.5 * (lo + hi);
  for (int step = 0; step < 2 && x > 0.0; ++step) {
    const double next = x - (g(x) - y) / g_prime(x);
    if (!(next > 0.0)) break;
    x = next;
  }
  return x;
}

double entropy_power(const Spectrum& s, double c) {
  if (!(c >= 0.0)) throw DomainError("entropy power exponent must be >= 0");
  return std::exp(c * von_neumann(s));
}

double photon_number(const Spectrum& s, double c) {
  if (!(c >= 0.0)) throw DomainError("photon number exponent must be >= 0");
  return g_inv(c * von_neumann(s));
}

SurprisalMoments surprisal_moments(const Spectrum& s) {
  SurprisalMoments m;
  for (double q : s.values()) {
    if (q <= 0.0) continue;
    const double lq = std::log(q);
    m.entropy -= q * lq;
    m.second += q * lq * lq;
  }
  m.variance = std::max(0.0, m.second - m.entropy * m.entropy);
  return m;
}

double k(double x) {
  if (!(x >= 0.0)) throw DomainError("k is defined for x >= 0");
  if (x == 0.0) return 0.0;
  const double l = std::log1p(1.0 / x);
  return x * (1.0 + x) * l * l;
}

double k_complement(double x) {
  if (!(x >= 0.0)) throw DomainError("k is defined for x >= 0");
  if (x < 4.0) return 1.0 - k(x);
  static const std::array<double, kSeriesTerms> c = k_series_coefficients();
  const double u = 1.0 / x;
  // Horner on sum_{n>=2} c_n u^n.
  double acc = 0.0;
  for (int n = kSeriesTerms - 1; n >= 2; --n) acc = acc * u + c[n];
  return -acc * u * u;
}

double k_inv(double y) {
  if (!(y >= 0.0 && y < 1.0)) throw DomainError("k_inv is defined for y in [0, 1)");
  if (y == 0.0) return 0.0;
  const bool upper = y > 0.5;
  const double yc = 1.0 - y;
  // Signed residual k(x) - y, evaluated through the complement near 1.
  auto residual = [&](double x) { return upper ? yc - k_complement(x) : k(x) - y; };

  double lo = 0.0;
  double hi = 1.0;
  while (residual(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw NumericalFailure("k_inv bracket overflow");
  }
  int it = 0;
  while (hi - lo > 1e-13 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (residual(mid) < 0.0 ? lo : hi) = mid;
    if (++it > kMaxBisection) throw NumericalFailure("k_inv bisection did not converge");
  }
  double x = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    const double next = x - residual(x) / k_prime(x);
    if (!(next > 0.0)) break;
    x = next;
  }
  return x;
}

double ell(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("l is defined on [-1, 1]");
  const double p = 0.5 * (1.0 + x);
  const double q = 0.5 * (1.0 - x);
  return -xlogx(p) - xlogx(q);
}

double ell_inv(double y) {
  const double top = ell(0.0);
  if (!(y >= 0.0 && y <= top + 1e-15)) throw DomainError("l_inv is defined on [0, log 2]");
  if (y >= top) return 0.0;
  if (y == 0.0) return 1.0;
  // Smallest r in [0, 1] with l(r) <= y; l is decreasing there.
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ell(mid) <= y ? hi : lo) = mid;
  }
  return hi;
}

EntropyFunctional EntropyFunctional::renyi(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("Renyi order must lie in [0, 1)");
  return {Kind::Renyi, alpha};
}

EntropyFunctional EntropyFunctional::entropy_power(double c) {
  if (!(c >= 0.0)) throw DomainError("entropy power exponent must be >= 0");
  return {Kind::EntropyPower, c};
}

EntropyFunctional EntropyFunctional::photon_number(double c) {
  if (!(c >= 0.0)) throw DomainError("photon number exponent must be >= 0");
  return {Kind::PhotonNumber, c};
}

double EntropyFunctional::certified_entropy_power_c(int d) {
  if (d < 2) throw DomainError("certified exponents need d >= 2");
  const double l = std::log(static_cast<double>(d));
  return 1.0 / (l * l);
}

double EntropyFunctional::certified_photon_number_c(int d) {
  if (d < 2) throw DomainError("certified exponents need d >= 2");
  return 1.0 / static_cast<double>(d - 1);
}

double EntropyFunctional::evaluate(const Spectrum& s) const {
  switch (kind) {
    case Kind::VonNeumann: return qepi::von_neumann(s);
    case Kind::Renyi: return qepi::renyi(s, parameter);
    case Kind::Subentropy: return qepi::subentropy(s);
    case Kind::EntropyPower: return qepi::entropy_power(s, parameter);
    case Kind::PhotonNumber: return qepi::photon_number(s, parameter);
  }
  return 0.0;
}

bool EntropyFunctional::in_certified_range(int d) const {
  constexpr double slack = 1.0 + 1e-12;
  switch (kind) {
    case Kind::EntropyPower: return parameter <= certified_entropy_power_c(d) * slack;
    case Kind::PhotonNumber: return parameter <= certified_photon_number_c(d) * slack;
    default: return true;
  }
}

std::string EntropyFunctional::name() const {
  switch (kind) {
    case Kind::VonNeumann: return "von_neumann";
    case Kind::Renyi: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "renyi_%g", parameter);
      return buf;
    }
    case Kind::Subentropy: return "subentropy";
    case Kind::EntropyPower: return "entropy_power";
    case Kind::PhotonNumber: return "photon_number";
  }
  return "unknown";
}

}  // namespace qepi
