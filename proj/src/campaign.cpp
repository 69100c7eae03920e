#include "qepi/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qepi/majorization.hpp"
#include "qepi/rng.hpp"

namespace qepi {

namespace {

struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  std::int64_t index = -1;
};

// Serial reduction in index order, so ties resolve the same way regardless
// of how the trials were scheduled. NaN counts as a failure.
Worst reduce_min(const std::vector<double>& margins) {
  Worst w;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    const double m = std::isnan(margins[i]) ? -std::numeric_limits<double>::infinity() : margins[i];
    if (m < w.margin) {
      w.margin = m;
      w.index = static_cast<std::int64_t>(i);
    }
  }
  return w;
}

CheckResult make_check(std::string name, int dim, const std::vector<double>& margins,
                       double threshold, std::uint64_t base_seed, bool trial_based = true) {
  const Worst w = reduce_min(margins);
  CheckResult r;
  r.name = std::move(name);
  r.dim = dim;
  r.samples = static_cast<std::int64_t>(margins.size());
  r.worst_margin = w.margin;
  r.threshold = threshold;
  if (trial_based) {
    r.worst_trial = w.index;
    r.worst_seed = trial_seed(base_seed, dim, w.index);
  } else {
    r.worst_trial = w.index;
  }
  r.passed = w.margin >= -threshold;
  return r;
}

std::vector<double> mix(std::span<const double> u, std::span<const double> v, double a) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + (1.0 - a) * v[i];
  return out;
}

double majorization_margin(std::span<const double> out, std::span<const double> bound) {
  const MajorizationReport rep = majorizes(out, bound, 0.0);
  return std::min(rep.worst_slack, -rep.total_gap);
}

double elementwise_gap(const Matrix& x, const Matrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace

std::string_view to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::SignFlip: return "sign-flip";
    case Fault::DoubleCommutator: return "double-commutator";
  }
  return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (Fault f : {Fault::None, Fault::SignFlip, Fault::DoubleCommutator}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void CampaignConfig::validate() const {
  if (dims.empty()) throw DomainError("at least one dimension is required");
  for (int d : dims) {
    if (d < 2) throw DomainError("dimensions must be >= 2");
  }
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (tolerance && !(*tolerance > 0.0)) throw DomainError("tolerance must be positive");
  for (double a : a_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("a values must lie in [0, 1]");
  }
  for (double al : alphas) {
    if (!(al >= 0.0 && al < 1.0) && !force_range) {
      throw OutOfCertifiedRange("Renyi alpha outside [0, 1) needs --force-range");
    }
    if (al < 0.0) throw DomainError("Renyi alpha must be nonnegative");
  }
  if (lemma_grid != 0 && lemma_grid < 2) throw DomainError("lemma grid needs at least 2 points");
}

bool CampaignReport::passed() const { return first_failure() == nullptr; }

const CheckResult* CampaignReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (c.certified && !c.passed) return &c;
  }
  return nullptr;
}

Trial draw_trial(std::uint64_t base_seed, int d, std::int64_t trial,
                 const std::vector<double>& a_grid) {
  const std::uint64_t seed = trial_seed(base_seed, d, trial);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> rank(1, d);
  const int r1 = rank(gen);
  const int r2 = rank(gen);
  DensityMatrix rho = random_state(d, r1, gen);
  DensityMatrix sigma = random_state(d, r2, gen);
  double a;
  if (a_grid.empty()) {
    a = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
  } else {
    a = a_grid[static_cast<std::size_t>(trial) % a_grid.size()];
  }
  return {std::move(rho), std::move(sigma), SwapParams(a), seed};
}

Matrix boxplus_with_fault(const DensityMatrix& rho, const DensityMatrix& sigma, SwapParams p,
                          Fault fault) {
  if (fault == Fault::None) return boxplus_closed_form(rho, sigma, p).matrix();
  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();
  const Matrix comm = r * s - s * r;
  const Complex i(0.0, 1.0);
  double w = p.cross_weight();
  if (fault == Fault::SignFlip) w = -w;
  if (fault == Fault::DoubleCommutator) w = 2.0 * w;
  return p.a() * r + (1.0 - p.a()) * s - w * i * comm;
}

double channel_agreement_deviation(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   SwapParams p, Fault fault) {
  const Matrix closed = boxplus_with_fault(rho, sigma, p, fault);
  const Matrix unitary = boxplus_via_unitary(rho, sigma, p).matrix();
  const Matrix kraus = boxplus_via_kraus(rho, sigma, p).matrix();
  return std::max({elementwise_gap(closed, unitary), elementwise_gap(closed, kraus),
                   elementwise_gap(unitary, kraus)});
}

std::vector<EntropyFunctional> registered_functionals(const CampaignConfig& cfg, int d) {
  std::vector<EntropyFunctional> fs;
  fs.push_back(EntropyFunctional::von_neumann());
  for (double al : cfg.alphas) fs.push_back(EntropyFunctional::renyi(al));
  fs.push_back(EntropyFunctional::subentropy());
  fs.push_back(EntropyFunctional::entropy_power(
      cfg.ep_c.value_or(EntropyFunctional::certified_entropy_power_c(d))));
  fs.push_back(EntropyFunctional::photon_number(
      cfg.pn_c.value_or(EntropyFunctional::certified_photon_number_c(d))));
  if (!cfg.force_range) {
    for (const EntropyFunctional& f : fs) {
      if (!f.in_certified_range(d)) {
        throw OutOfCertifiedRange(f.name() + " parameter is outside the certified range for d = " +
                                  std::to_string(d) + "; pass --force-range to explore it");
      }
    }
  }
  return fs;
}

CampaignReport run_verification(const CampaignConfig& cfg, Execution exec) {
  cfg.validate();
  CampaignReport report;
  report.config = cfg;
  auto thr = [&](double def) { return cfg.tolerance.value_or(def); };

  for (int d : cfg.dims) {
    const std::vector<EntropyFunctional> fs = registered_functionals(cfg, d);
    const auto n = static_cast<std::size_t>(cfg.trials);
    // Columns: majorization, control, agreement, then one per functional.
    const std::size_t cols = 3 + fs.size();
    std::vector<std::vector<double>> margins(cols, std::vector<double>(n, 0.0));

    for_each_index(cfg.trials, exec, [&](std::int64_t t) {
      const Trial tr = draw_trial(cfg.seed, d, t, cfg.a_grid);
      const double a = tr.params.a();
      const auto ti = static_cast<std::size_t>(t);
      const Spectrum s_rho = spectrum(tr.rho);
      const Spectrum s_sigma = spectrum(tr.sigma);
      const std::vector<double> bound = mix(s_rho.values(), s_sigma.values(), a);

      const Matrix out = boxplus_with_fault(tr.rho, tr.sigma, tr.params, cfg.fault);
      margins[0][ti] = majorization_margin(eigenvalues_descending(out), bound);

      const Matrix mixed = mixing_channel(tr.rho, tr.sigma, tr.params).matrix();
      margins[1][ti] = majorization_margin(eigenvalues_descending(mixed), bound);

      if (cfg.channel_agreement) {
        margins[2][ti] = -channel_agreement_deviation(tr.rho, tr.sigma, tr.params, cfg.fault);
      }

      std::optional<Spectrum> s_out;
      double invalid = 0.0;
      try {
        s_out = spectrum(DensityMatrix::assume_valid(out));
      } catch (const ValidationError& e) {
        // A faulty rule can leave the state space; report how far.
        invalid = -std::abs(e.deviation());
      }
      for (std::size_t j = 0; j < fs.size(); ++j) {
        margins[3 + j][ti] = s_out ? fs[j].evaluate(*s_out) - a * fs[j].evaluate(s_rho) -
                                         (1.0 - a) * fs[j].evaluate(s_sigma)
                                   : invalid;
      }
    });

    report.checks.push_back(make_check("spectral_majorization", d, margins[0],
                                       thr(kMajorizationThreshold), cfg.seed));
    for (std::size_t j = 0; j < fs.size(); ++j) {
      CheckResult c = make_check("epi_" + fs[j].name(), d, margins[3 + j], thr(kEpiThreshold),
                                 cfg.seed);
      c.certified = fs[j].in_certified_range(d);
      report.checks.push_back(std::move(c));
    }
    if (cfg.channel_agreement) {
      report.checks.push_back(
          make_check("channel_agreement", d, margins[2], thr(kAgreementThreshold), cfg.seed));
    }
    report.checks.push_back(make_check("control_mixing_majorization", d, margins[1],
                                       thr(kMajorizationThreshold), cfg.seed));
  }

  if (cfg.lemma_grid > 0) {
    const int G = cfg.lemma_grid;
    std::vector<double> margins(static_cast<std::size_t>(G) * static_cast<std::size_t>(G));
    for_each_index(G, exec, [&](std::int64_t i) {
      const double x = static_cast<double>(i) / (G - 1);
      for (int j = 0; j < G; ++j) {
        const double y = static_cast<double>(j) / (G - 1);
        margins[static_cast<std::size_t>(i) * G + j] = min_inequality_margin(x, y);
      }
    });
    report.checks.push_back(make_check("min_inequality_grid", 0, margins,
                                       thr(kMinInequalityThreshold), cfg.seed, false));
  }
  return report;
}

std::vector<CheckResult> run_bounds_soundness(const std::vector<int>& dims, std::int64_t trials,
                                              std::uint64_t seed, Execution exec) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  std::vector<CheckResult> out;
  for (int d : dims) {
    std::vector<BoundKind> kinds;
    for (BoundKind k : kAllBoundKinds) {
      if (bound_certified(k, d)) kinds.push_back(k);
    }
    std::vector<std::vector<double>> margins(kinds.size(),
                                             std::vector<double>(static_cast<std::size_t>(trials)));
    for_each_index(trials, exec, [&](std::int64_t t) {
      const Trial tr = draw_trial(seed, d, t);
      const double h_out = von_neumann(spectrum(boxplus_closed_form(tr.rho, tr.sigma, tr.params)));
      const double h_rho = von_neumann(spectrum(tr.rho));
      const double h_sigma = von_neumann(spectrum(tr.sigma));
      for (std::size_t j = 0; j < kinds.size(); ++j) {
        margins[j][static_cast<std::size_t>(t)] =
            h_out - bound_value(kinds[j], h_rho, h_sigma, tr.params.a(), d);
      }
    });
    for (std::size_t j = 0; j < kinds.size(); ++j) {
      out.push_back(make_check("bound_" + std::string(to_string(kinds[j])), d, margins[j],
                               kBoundThreshold, seed));
    }
  }
  return out;
}

std::vector<CheckResult> run_qubit_checks(std::int64_t trials, std::int64_t aligned_trials,
                                          std::uint64_t seed, Execution exec) {
  if (trials < 1 || aligned_trials < 1) throw DomainError("trials must be >= 1");
  auto bloch_matrix = [](const BlochVector& r) {
    Matrix m = Matrix::Identity(2, 2);
    m += r.x * pauli(0) + r.y * pauli(1) + r.z * pauli(2);
    return Matrix(0.5 * m);
  };

  const auto n = static_cast<std::size_t>(trials);
  std::vector<double> rule(n), optimal(n);
  for_each_index(trials, exec, [&](std::int64_t t) {
    std::mt19937_64 gen(trial_seed(seed, 2, t));
    const BlochVector r1 = random_bloch(gen);
    const BlochVector r2 = random_bloch(gen);
    const SwapParams p(std::uniform_real_distribution<double>(0.0, 1.0)(gen));
    const DensityMatrix rho = DensityMatrix::assume_valid(bloch_matrix(r1));
    const DensityMatrix sigma = DensityMatrix::assume_valid(bloch_matrix(r2));
    const DensityMatrix out = boxplus_closed_form(rho, sigma, p);
    const auto ti = static_cast<std::size_t>(t);
    rule[ti] = -elementwise_gap(out.matrix(), bloch_matrix(boxplus_bloch(r1, r2, p)));
    optimal[ti] = von_neumann(spectrum(out)) -
                  bound_qubit_optimal(von_neumann(spectrum(rho)), von_neumann(spectrum(sigma)),
                                      p.a());
  });

  const std::uint64_t aligned_seed = splitmix64(seed ^ 0xa11a11a11ULL);
  std::vector<double> tight(static_cast<std::size_t>(aligned_trials));
  for_each_index(aligned_trials, exec, [&](std::int64_t t) {
    std::mt19937_64 gen(trial_seed(aligned_seed, 2, t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BlochVector dir = random_bloch(gen);
    const double nd = dir.norm();
    dir = nd > 0.0 ? BlochVector{dir.x / nd, dir.y / nd, dir.z / nd} : BlochVector{0.0, 0.0, 1.0};
    const double l1 = unit(gen);
    const double l2 = unit(gen);
    const SwapParams p(unit(gen));
    const DensityMatrix rho =
        DensityMatrix::assume_valid(bloch_matrix({l1 * dir.x, l1 * dir.y, l1 * dir.z}));
    const DensityMatrix sigma =
        DensityMatrix::assume_valid(bloch_matrix({l2 * dir.x, l2 * dir.y, l2 * dir.z}));
    const double h_out = von_neumann(spectrum(boxplus_closed_form(rho, sigma, p)));
    const double b =
        bound_qubit_optimal(von_neumann(spectrum(rho)), von_neumann(spectrum(sigma)), p.a());
    tight[static_cast<std::size_t>(t)] = -std::abs(h_out - b);
  });

  return {make_check("qubit_bloch_rule", 2, rule, kAgreementThreshold, seed),
          make_check("bound_qubit-optimal", 2, optimal, kBoundThreshold, seed),
          make_check("qubit_optimal_tightness", 2, tight, 1e-10, aligned_seed)};
}

}  // namespace qepi
