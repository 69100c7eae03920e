#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qepi/channels.hpp"

namespace qepi {

/// Lower bounds G(H(rho)) on the output entropy of rho -> rho [+]_a sigma.
enum class BoundKind { Linear, EntropyPower, PhotonNumber, QubitOptimal };

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);
inline constexpr BoundKind kAllBoundKinds[] = {BoundKind::Linear, BoundKind::EntropyPower,
                                               BoundKind::PhotonNumber, BoundKind::QubitOptimal};

/// a H(rho) + (1-a) H(sigma).
double bound_linear(double h_rho, double h_sigma, double a);
/// (1/c) log[a e^{c H(rho)} + (1-a) e^{c H(sigma)}], c = 1/(log d)^2.
double bound_entropy_power(double h_rho, double h_sigma, double a, int d);
/// (1/c) g[a g^{-1}(c H(rho)) + (1-a) g^{-1}(c H(sigma))], c = 1/(d-1).
double bound_photon_number(double h_rho, double h_sigma, double a, int d);
/// l[a l^{-1}(H(rho)) + (1-a) l^{-1}(H(sigma))]; qubits only, tight for
/// parallel Bloch vectors.
double bound_qubit_optimal(double h_rho, double h_sigma, double a);

/// Dispatches on kind. Throws DomainError for QubitOptimal with d != 2.
double bound_value(BoundKind kind, double h_rho, double h_sigma, double a, int d);

/// Whether the inequality behind `kind` is proven in dimension d.
bool bound_certified(BoundKind kind, int d);

struct BoundCurve {
  BoundKind kind = BoundKind::Linear;
  double a = 0.0;
  int d = 0;
  double sigma_entropy = 0.0;
  bool certified = true;
  /// (H0, G(H0)) pairs on an even grid over [0, log d].
  std::vector<std::pair<double, double>> samples;
};

BoundCurve sample_bound_curve(BoundKind kind, SwapParams p, double sigma_entropy, int d,
                              int samples);

struct MinOutputBound {
  double value = 0.0;
  double argmin_h0 = 0.0;
  /// The grid scan found G non-decreasing in H0.
  bool monotone = true;
};

/// min over H0 in [0, log d] of G(H0), by a 10^4-point scan plus golden-section
/// refinement when the minimum is interior.
MinOutputBound min_output_entropy_lb(BoundKind kind, SwapParams p, const DensityMatrix& sigma);

/// log d - (1-a) H(sigma).
double holevo_upper_bound(SwapParams p, const DensityMatrix& sigma);

}  // namespace qepi
