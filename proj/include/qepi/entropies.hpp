#pragma once

#include <string>

#include "qepi/states.hpp"

namespace qepi {

/// Shannon entropy of the eigenvalues, in nats, with 0 log 0 = 0.
double von_neumann(const Spectrum& s);

/// Renyi entropy (1/(1-alpha)) log sum lambda^alpha for alpha in [0, 1).
/// alpha = 0 gives log(rank).
double renyi(const Spectrum& s, double alpha);

/// Subentropy -sum_i lambda_i^d / prod_{j!=i}(lambda_i - lambda_j) log lambda_i,
/// extended by continuity to coincident and zero eigenvalues.
double subentropy(const Spectrum& s);

/// h(p) = -p log p - (1-p) log(1-p).
double binary_entropy(double p);

/// g(x) = (x+1) log(x+1) - x log x, x >= 0.
double g(double x);
/// Inverse of g on [0, inf).
double g_inv(double y);

double entropy_power(const Spectrum& s, double c);
double photon_number(const Spectrum& s, double c);

struct SurprisalMoments {
  double entropy = 0.0;   // H = -sum q log q
  double second = 0.0;    // L = sum q (log q)^2
  double variance = 0.0;  // V = L - H^2
};

SurprisalMoments surprisal_moments(const Spectrum& s);

/// k(x) = x (1+x) (log x - log(1+x))^2, increasing from 0 to 1 on [0, inf).
double k(double x);
/// 1 - k(x), accurate for large x where k rounds to 1.
double k_complement(double x);
/// Inverse of k, y in [0, 1).
double k_inv(double y);

/// l(x) = h((1+x)/2) for x in [-1, 1]: entropy of a qubit with Bloch radius |x|.
double ell(double x);
/// Nonnegative-branch inverse of l: returns r in [0, 1] with l(r) = y.
double ell_inv(double y);

/// A member of the class of concave, spectrally symmetric functionals.
struct EntropyFunctional {
  enum class Kind { VonNeumann, Renyi, Subentropy, EntropyPower, PhotonNumber };

  Kind kind = Kind::VonNeumann;
  /// alpha for Renyi, c for EntropyPower / PhotonNumber, unused otherwise.
  double parameter = 0.0;

  static EntropyFunctional von_neumann() { return {Kind::VonNeumann, 0.0}; }
  static EntropyFunctional renyi(double alpha);
  static EntropyFunctional subentropy() { return {Kind::Subentropy, 0.0}; }
  static EntropyFunctional entropy_power(double c);
  static EntropyFunctional photon_number(double c);

  /// Largest proven exponents: 1/(log d)^2 and 1/(d-1).
  static double certified_entropy_power_c(int d);
  static double certified_photon_number_c(int d);

  double evaluate(const Spectrum& s) const;
  /// Concavity is proven for this parameter in dimension d.
  bool in_certified_range(int d) const;
  /// Stable identifier such as "renyi_0.25" or "entropy_power".
  std::string name() const;
};

}  // namespace qepi
