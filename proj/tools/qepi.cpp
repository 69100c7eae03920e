// qepi: verification campaigns and data emission for the partial-swap rule.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qepi/bounds.hpp"
#include "qepi/campaign.hpp"
#include "qepi/concavity.hpp"
#include "qepi/io.hpp"

namespace {

using namespace qepi;
using nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

struct Common {
  std::string output;
  std::string format;
  bool bits = false;
};

// Entropies are in nats; --bits rescales at presentation only.
double unit(const Common& c, double nats) { return c.bits ? nats / std::log(2.0) : nats; }

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + c.output + "'");
  out << text;
}

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("-o,--output", c.output, "Output file (default stdout)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--bits", c.bits, "Report entropies in bits instead of nats");
}

std::vector<BoundKind> parse_kinds(const std::string& spec) {
  if (spec == "all") return {std::begin(kAllBoundKinds), std::end(kAllBoundKinds)};
  std::vector<BoundKind> kinds;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto k = parse_bound_kind(item);
    if (!k) throw ParseError("unknown bound kind '" + item + "'");
    kinds.push_back(*k);
  }
  if (kinds.empty()) throw ParseError("no bound kinds given");
  return kinds;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  CampaignConfig cfg;
  Common common;
  double tolerance = 0.0;
  double ep_c = 0.0;
  double pn_c = 0.0;
  std::string fault = "none";
  bool serial = false;
};

int run_verify(VerifyArgs& args, const CLI::App& cmd) {
  CampaignConfig& cfg = args.cfg;
  if (cmd.count("--tolerance")) cfg.tolerance = args.tolerance;
  if (cmd.count("--ep-c")) cfg.ep_c = args.ep_c;
  if (cmd.count("--pn-c")) cfg.pn_c = args.pn_c;
  const auto fault = parse_fault(args.fault);
  if (!fault) throw ParseError("unknown fault '" + args.fault + "'");
  cfg.fault = *fault;

  const CampaignReport report =
      run_verification(cfg, args.serial ? Execution::Serial : Execution::Parallel);
  if (args.common.format == "json") {
    emit(args.common, report_to_json(report).dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_report_csv(os, report);
    emit(args.common, os.str());
  }
  if (const CheckResult* f = report.first_failure()) {
    std::fprintf(stderr, "violation: %s (d=%d) worst margin %.3e < -%.1e", f->name.c_str(),
                 f->dim, f->worst_margin, f->threshold);
    if (f->worst_trial >= 0) {
      std::fprintf(stderr, " at trial %lld, seed %llu", static_cast<long long>(f->worst_trial),
                   static_cast<unsigned long long>(f->worst_seed));
    }
    std::fprintf(stderr, "\n");
    return kViolation;
  }
  return kOk;
}

// ---- cmax ---------------------------------------------------------------

int run_cmax(const std::vector<int>& dims, const Common& c) {
  for (int d : dims) {
    if (d < 2) throw DomainError("dimensions must be >= 2");
  }
  std::ostringstream os;
  json rows = json::array();
  std::optional<CsvWriter> csv;
  if (c.format == "csv") {
    csv.emplace(os, std::vector<std::string>{"d", "c_max", "x_star", "lb_closed_form",
                                             "inv_log_sq", "inv_d_minus_1"});
  }
  for (int d : dims) {
    const ThresholdResult t = c_max_entropy_power(d);
    const double ld = std::log(static_cast<double>(d));
    const std::vector<double> row{static_cast<double>(d), t.c_max, t.argmax_x, t.lower_bound,
                                  1.0 / (ld * ld), 1.0 / (d - 1.0)};
    if (csv) {
      csv->row(row);
    } else {
      rows.push_back({{"d", d},
                      {"c_max", row[1]},
                      {"x_star", row[2]},
                      {"lb_closed_form", row[3]},
                      {"inv_log_sq", row[4]},
                      {"inv_d_minus_1", row[5]}});
    }
  }
  emit(c, csv ? os.str() : json{{"tool", "qepi"}, {"version", QEPI_VERSION}, {"rows", rows}}
                                   .dump(2) + "\n");
  return kOk;
}

// ---- bounds-curve -------------------------------------------------------

struct CurveArgs {
  int dim = 0;
  double a = 0.5;
  std::string sigma = "mixed";
  std::string kinds = "all";
  int samples = 101;
  Common common;
};

struct CurveSet {
  int d = 0;
  double a = 0.0;
  double sigma_entropy = 0.0;
  std::vector<BoundCurve> curves;
  std::vector<std::pair<BoundKind, std::string>> refused;
};

CurveSet build_curves(int d, double a, const DensityMatrix& sigma,
                      const std::vector<BoundKind>& kinds, int samples) {
  CurveSet set;
  set.d = d;
  set.a = a;
  set.sigma_entropy = von_neumann(spectrum(sigma));
  for (BoundKind k : kinds) {
    try {
      set.curves.push_back(sample_bound_curve(k, SwapParams(a), set.sigma_entropy, d, samples));
    } catch (const DomainError& e) {
      if (k != BoundKind::QubitOptimal) throw;
      set.refused.emplace_back(k, e.what());
    }
  }
  return set;
}

void write_curves_csv(std::ostream& os, const std::vector<CurveSet>& sets, const Common& c) {
  CsvWriter w(os, {"d", "a", "kind", "H0", "G", "certified"});
  for (const CurveSet& s : sets) {
    for (const BoundCurve& curve : s.curves) {
      for (const auto& [h0, gv] : curve.samples) {
        w.row(std::vector<std::string>{std::to_string(s.d), format_number(s.a),
                                       std::string(to_string(curve.kind)),
                                       format_number(unit(c, h0)), format_number(unit(c, gv)),
                                       curve.certified ? "1" : "0"});
      }
    }
  }
}

json curves_to_json(const std::vector<CurveSet>& sets, const Common& c) {
  json out = json::array();
  for (const CurveSet& s : sets) {
    json curves = json::array();
    for (const BoundCurve& curve : s.curves) {
      json h0s = json::array(), gs = json::array();
      for (const auto& [h0, gv] : curve.samples) {
        h0s.push_back(unit(c, h0));
        gs.push_back(unit(c, gv));
      }
      curves.push_back({{"kind", to_string(curve.kind)},
                        {"certified", curve.certified},
                        {"H0", std::move(h0s)},
                        {"G", std::move(gs)}});
    }
    json refused = json::array();
    for (const auto& [k, why] : s.refused) refused.push_back({{"kind", to_string(k)}, {"reason", why}});
    out.push_back({{"d", s.d},
                   {"a", s.a},
                   {"sigma_entropy", unit(c, s.sigma_entropy)},
                   {"curves", std::move(curves)},
                   {"refused", std::move(refused)}});
  }
  return out;
}

void emit_curves(const std::vector<CurveSet>& sets, const Common& c) {
  for (const CurveSet& s : sets) {
    for (const auto& [k, why] : s.refused) {
      std::fprintf(stderr, "note: %s refused for d=%d: %s\n", std::string(to_string(k)).c_str(),
                   s.d, why.c_str());
    }
  }
  if (c.format == "json") {
    emit(c, json{{"tool", "qepi"},
                 {"version", QEPI_VERSION},
                 {"units", c.bits ? "bits" : "nats"},
                 {"sets", curves_to_json(sets, c)}}
                    .dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_curves_csv(os, sets, c);
    emit(c, os.str());
  }
}

int run_bounds_curve(const CurveArgs& args) {
  const DensityMatrix sigma = parse_sigma_spec(args.sigma, args.dim);
  const int d = sigma.dim();
  if (d < 2) throw DomainError("dimension must be >= 2");
  emit_curves({build_curves(d, args.a, sigma, parse_kinds(args.kinds), args.samples)},
              args.common);
  return kOk;
}

// ---- figure-data --------------------------------------------------------

struct FigureArgs {
  std::string which;
  int samples = 0;
  Common common;
};

int run_figure(const FigureArgs& args) {
  const Common& c = args.common;
  std::ostringstream os;
  if (args.which == "fig1") {
    constexpr int K = 6;
    const int n = args.samples > 0 ? args.samples : 201;
    if (n < 2) throw DomainError("fig1 needs at least two samples per curve");
    json curves = json::array();
    std::optional<CsvWriter> w;
    if (c.format == "csv") w.emplace(os, std::vector<std::string>{"k", "x", "H", "L"});
    for (int k = 1; k < K; ++k) {
      json pts = json::array();
      for (int i = 0; i < n; ++i) {
        const double x = i + 1 == n ? 1.0 / K : (1.0 / K) * i / (n - 1);
        const TwoValuedDist q(K, k, x);
        const double h = q.entropy();
        const double l = q.second_moment();
        if (w) {
          w->row({static_cast<double>(k), x, h, l});
        } else {
          pts.push_back({x, h, l});
        }
      }
      if (!w) curves.push_back({{"k", k}, {"points_x_H_L", std::move(pts)}});
    }
    if (!w) os << json{{"figure", "fig1"}, {"K", K}, {"curves", std::move(curves)}}.dump(2) << "\n";
  } else if (args.which == "fig2") {
    const auto pts = parametric_gk_curve(args.samples > 0 ? args.samples : 1201);
    if (c.format == "csv") {
      CsvWriter w(os, {"y", "g", "k", "one_minus_k"});
      for (const GkPoint& p : pts) w.row({p.y, p.g, p.k, p.k_complement});
    } else {
      json arr = json::array();
      for (const GkPoint& p : pts) arr.push_back({{"y", p.y}, {"g", p.g}, {"k", p.k}, {"one_minus_k", p.k_complement}});
      os << json{{"figure", "fig2"}, {"points", std::move(arr)}}.dump(2) << "\n";
    }
  } else if (args.which == "fig3") {
    const int n = args.samples > 0 ? args.samples : 101;
    const std::vector<BoundKind> all(std::begin(kAllBoundKinds), std::end(kAllBoundKinds));
    std::vector<CurveSet> sets;
    for (int d : {2, 4}) sets.push_back(build_curves(d, 0.5, DensityMatrix::maximally_mixed(d), all, n));
    emit_curves(sets, c);
    return kOk;
  } else {
    throw UnknownFigure("unknown figure '" + args.which + "' (expected fig1, fig2 or fig3)");
  }
  emit(c, os.str());
  return kOk;
}

// ---- channel-apply ------------------------------------------------------

struct ApplyArgs {
  std::string rho;
  std::string sigma;
  double a = 0.5;
  Common common;
};

int run_channel_apply(const ApplyArgs& args) {
  const Common& c = args.common;
  const DensityMatrix rho = read_state_file(args.rho);
  const DensityMatrix sigma = parse_sigma_spec(args.sigma, rho.dim());
  const int d = rho.dim();
  const SwapParams p(args.a);
  const DensityMatrix out = boxplus_closed_form(rho, sigma, p);
  const Spectrum s_out = spectrum(out);
  const Spectrum s_rho = spectrum(rho);
  const Spectrum s_sigma = spectrum(sigma);

  CampaignConfig defaults;
  defaults.dims = {d};
  std::vector<std::pair<std::string, double>> values;
  for (const EntropyFunctional& f : registered_functionals(defaults, d)) {
    double v = f.evaluate(s_out);
    // Entropy-valued functionals rescale with --bits; EP and N are not entropies.
    if (f.kind != EntropyFunctional::Kind::EntropyPower &&
        f.kind != EntropyFunctional::Kind::PhotonNumber) {
      v = unit(c, v);
    }
    values.emplace_back(f.name(), v);
  }
  const double h_rho = von_neumann(s_rho);
  const double h_sigma = von_neumann(s_sigma);
  const double lin = bound_linear(h_rho, h_sigma, p.a());

  if (c.format == "json") {
    json funcs = json::object();
    for (const auto& [name, v] : values) funcs[name] = v;
    json spec(std::vector<double>(s_out.values().begin(), s_out.values().end()));
    emit(c, json{{"tool", "qepi"},
                 {"version", QEPI_VERSION},
                 {"a", p.a()},
                 {"output", state_to_json(out)},
                 {"spectrum", std::move(spec)},
                 {"functionals", std::move(funcs)},
                 {"linear_bound", unit(c, lin)},
                 {"linear_bound_holds", von_neumann(s_out) >= lin - kBoundThreshold}}
                    .dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  CsvWriter w(os, {"quantity", "row", "col", "re", "im"});
  const Matrix& m = out.matrix();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      w.row(std::vector<std::string>{"entry", std::to_string(i), std::to_string(j),
                                     format_number(m(i, j).real()), format_number(m(i, j).imag())});
    }
  }
  for (int i = 0; i < d; ++i) {
    w.row(std::vector<std::string>{"eigenvalue", std::to_string(i), "", format_number(s_out[i]), "0"});
  }
  for (const auto& [name, v] : values) {
    w.row(std::vector<std::string>{name, "", "", format_number(v), "0"});
  }
  w.row(std::vector<std::string>{"linear_bound", "", "", format_number(unit(c, lin)), "0"});
  emit(c, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-swap entropy inequalities: verification and data emission"};
  app.set_version_flag("--version", std::string(QEPI_VERSION));
  app.require_subcommand(1);

  VerifyArgs verify;
  verify.cfg.dims.clear();
  auto* v = app.add_subcommand("verify", "Seeded property campaign over random inputs");
  v->add_option("--dim", verify.cfg.dims, "Dimension (repeatable, default 2 3 4)")
      ->check(CLI::Range(2, 64));
  v->add_option("--trials", verify.cfg.trials, "Random triples per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--seed", verify.cfg.seed, "Base seed")->capture_default_str();
  v->add_option("--tolerance", verify.tolerance, "Single pass threshold for every check")
      ->check(CLI::PositiveNumber);
  v->add_option("--alpha", verify.cfg.alphas, "Renyi order (repeatable)");
  v->add_option("--a", verify.cfg.a_grid, "Swap parameters to cycle through (default uniform)");
  v->add_option("--ep-c", verify.ep_c, "Entropy power exponent (default 1/(log d)^2)");
  v->add_option("--pn-c", verify.pn_c, "Photon number exponent (default 1/(d-1))");
  v->add_flag("--force-range", verify.cfg.force_range,
              "Allow parameters outside the certified range; results are tagged uncertified");
  v->add_option("--lemma-grid", verify.cfg.lemma_grid, "Points per axis for the scalar check")
      ->capture_default_str();
  v->add_option("--inject-fault", verify.fault, "Test mode: corrupt the closed form")
      ->check(CLI::IsMember({"none", "sign-flip", "double-commutator"}));
  v->add_flag("--serial", verify.serial, "Use the serial reference path");
  add_common(v, verify.common, "json");

  std::vector<int> cmax_dims;
  Common cmax_common;
  auto* cm = app.add_subcommand("cmax", "Entropy-power thresholds per dimension");
  cm->add_option("--dim", cmax_dims, "Dimension (repeatable, default 2..16)")->check(CLI::Range(2, 1 << 20));
  add_common(cm, cmax_common, "csv");

  CurveArgs curve;
  auto* bc = app.add_subcommand("bounds-curve", "Sample output-entropy bound curves");
  bc->add_option("--dim", curve.dim, "Dimension (inferred from a sigma file)")->check(CLI::Range(2, 64));
  bc->add_option("--a", curve.a, "Swap parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  bc->add_option("--sigma", curve.sigma, "mixed | diag:v1,v2,... | file:PATH")->capture_default_str();
  bc->add_option("--kinds", curve.kinds, "all or a comma list of linear,entropy-power,photon-number,qubit-optimal")
      ->capture_default_str();
  bc->add_option("--samples", curve.samples, "Grid points over [0, log d]")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  add_common(bc, curve.common, "csv");

  FigureArgs fig;
  auto* fd = app.add_subcommand("figure-data", "Emit the data behind figures 1-3");
  fd->add_option("which", fig.which, "fig1 | fig2 | fig3")->required();
  fd->add_option("--samples", fig.samples, "Points per curve");
  add_common(fd, fig.common, "csv");

  ApplyArgs apply;
  auto* ca = app.add_subcommand("channel-apply", "Apply the rule to states read from JSON");
  ca->add_option("--rho", apply.rho, "State file")->required();
  ca->add_option("--sigma", apply.sigma, "mixed | diag:v1,v2,... | file:PATH")->required();
  ca->add_option("--a", apply.a, "Swap parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  add_common(ca, apply.common, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*v) {
      if (verify.cfg.dims.empty()) verify.cfg.dims = {2, 3, 4};
      return run_verify(verify, *v);
    }
    if (*cm) {
      if (cmax_dims.empty()) {
        for (int d = 2; d <= 16; ++d) cmax_dims.push_back(d);
      }
      return run_cmax(cmax_dims, cmax_common);
    }
    if (*bc) {
      if (!*bc->get_option("--dim") && !curve.sigma.starts_with("file:")) {
        throw ParseError("--dim is required unless --sigma names a file");
      }
      return run_bounds_curve(curve);
    }
    if (*fd) return run_figure(fig);
    if (*ca) return run_channel_apply(apply);
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumerical;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kNumerical;
  }
  return kUsage;
}
