#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qepi/bounds.hpp"
#include "qepi/entropies.hpp"
#include "qepi/parallel.hpp"

namespace qepi {

/// Deliberate corruption of the closed-form rule, for mutation testing.
enum class Fault {
  None,
  /// +i instead of -i on the commutator. The output is the image under the
  /// other branch and still a valid state.
  SignFlip,
  /// Commutator weight doubled. Breaks positivity and majorization.
  DoubleCommutator,
};

std::string_view to_string(Fault f);
std::optional<Fault> parse_fault(std::string_view name);

/// Default per-check thresholds. A check passes when worst_margin >= -threshold.
inline constexpr double kMajorizationThreshold = 1e-10;
inline constexpr double kEpiThreshold = 1e-9;
inline constexpr double kAgreementThreshold = 1e-12;
inline constexpr double kMinInequalityThreshold = 1e-14;
inline constexpr double kBoundThreshold = 1e-9;

struct CampaignConfig {
  std::vector<int> dims{2, 3, 4};
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  /// Replaces every per-check threshold when set.
  std::optional<double> tolerance;
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 0.9};
  /// Swap parameters cycled over trials; empty means a ~ U[0, 1].
  std::vector<double> a_grid;
  /// Override the entropy power / photon number exponents.
  std::optional<double> ep_c;
  std::optional<double> pn_c;
  bool force_range = false;
  bool channel_agreement = true;
  Fault fault = Fault::None;
  /// Points per axis of the [0,1]^2 grid; 0 skips the check.
  int lemma_grid = 1000;

  /// Throws DomainError for out-of-range fields.
  void validate() const;
};

struct CheckResult {
  std::string name;
  /// 0 for dimension-independent checks.
  int dim = 0;
  bool certified = true;
  std::int64_t samples = 0;
  double worst_margin = 0.0;
  double threshold = 0.0;
  /// -1 when the check is not trial-based.
  std::int64_t worst_trial = -1;
  std::uint64_t worst_seed = 0;
  bool passed = true;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckResult> checks;

  /// Conjunction over certified checks.
  bool passed() const;
  /// First failing certified check, if any.
  const CheckResult* first_failure() const;
};

/// One random input triple, reproducible from (seed, d, trial).
struct Trial {
  DensityMatrix rho;
  DensityMatrix sigma;
  SwapParams params;
  std::uint64_t seed;
};

/// Ranks of rho and sigma are uniform in 1..d independently, so full-rank
/// and rank-deficient inputs are mixed.
Trial draw_trial(std::uint64_t base_seed, int d, std::int64_t trial,
                 const std::vector<double>& a_grid = {});

/// Closed-form output with an optional fault applied. The result is not
/// validated, since faulty rules need not produce states.
Matrix boxplus_with_fault(const DensityMatrix& rho, const DensityMatrix& sigma, SwapParams p,
                          Fault fault);

/// Largest elementwise deviation among the closed-form, Kraus and unitary
/// realizations.
double channel_agreement_deviation(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   SwapParams p, Fault fault = Fault::None);

/// Functionals exercised in dimension d.
std::vector<EntropyFunctional> registered_functionals(const CampaignConfig& cfg, int d);

/// Per dimension: spectral majorization, one EPI check per functional,
/// channel agreement, the plain-mixing control; then the scalar grid check.
CampaignReport run_verification(const CampaignConfig& cfg, Execution exec = Execution::Parallel);

/// H(rho [+]_a sigma) - bound for every applicable bound kind.
std::vector<CheckResult> run_bounds_soundness(const std::vector<int>& dims, std::int64_t trials,
                                              std::uint64_t seed,
                                              Execution exec = Execution::Parallel);

/// Qubit checks: Bloch rule vs matrix rule on random pairs, and the optimal
/// bound's soundness there plus tightness on aligned commuting pairs.
std::vector<CheckResult> run_qubit_checks(std::int64_t trials, std::int64_t aligned_trials,
                                          std::uint64_t seed,
                                          Execution exec = Execution::Parallel);

}  // namespace qepi
