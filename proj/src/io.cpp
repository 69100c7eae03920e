#include "qepi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qepi {

namespace {

// JSON has no infinities; a non-finite margin is written as null.
nlohmann::json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw BadSigmaSpec("cannot parse number '" + item + "' in sigma spec");
    }
    if (used != item.size()) throw BadSigmaSpec("trailing characters in '" + item + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json entries = nlohmann::json::array();
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"dim", rho.dim()}, {"entries", std::move(entries)}};
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ParseError("state JSON needs fields 'dim' and 'entries'");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
    throw ParseError("'dim' must be a positive integer");
  }
  const int d = j["dim"].get<int>();
  const nlohmann::json& e = j["entries"];
  if (!e.is_array() || e.size() != static_cast<std::size_t>(d) * d) {
    throw ParseError("'entries' must hold dim*dim [re, im] pairs");
  }
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const nlohmann::json& z = e[static_cast<std::size_t>(i) * d + k];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError("each entry must be a [re, im] pair of numbers");
      }
      m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return DensityMatrix::validate(m);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

DensityMatrix parse_sigma_spec(std::string_view spec, int d) {
  DensityMatrix sigma = DensityMatrix::maximally_mixed(1);
  if (spec == "mixed") {
    if (d < 1) throw BadSigmaSpec("'mixed' needs a dimension");
    return DensityMatrix::maximally_mixed(d);
  } else if (spec.starts_with("diag:")) {
    const std::vector<double> p = parse_number_list(spec.substr(5));
    try {
      sigma = DensityMatrix::diagonal(p);
    } catch (const ValidationError& e) {
      throw BadSigmaSpec(std::string("diagonal sigma is not a state: ") + e.what());
    }
  } else if (spec.starts_with("file:")) {
    sigma = read_state_file(std::string(spec.substr(5)));
  } else {
    throw BadSigmaSpec("sigma spec must be 'mixed', 'diag:v1,...' or 'file:PATH', got '" +
                       std::string(spec) + "'");
  }
  if (d > 0 && sigma.dim() != d) {
    throw DimensionMismatch("sigma has dimension " + std::to_string(sigma.dim()) + ", expected " +
                            std::to_string(d));
  }
  return sigma;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw LengthMismatch("CSV row width differs from header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    os_ << cells[i];
  }
  os_ << '\n';
}

nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j = {{"name", c.name},
                      {"dim", c.dim},
                      {"certified", c.certified},
                      {"samples", c.samples},
                      {"worst_margin", number_or_null(c.worst_margin)},
                      {"threshold", c.threshold},
                      {"passed", c.passed}};
  if (!c.certified) j["tag"] = "uncertified";
  if (c.worst_trial >= 0) {
    j["worst_trial"] = c.worst_trial;
    j["worst_seed"] = c.worst_seed;
  }
  return j;
}

nlohmann::json config_to_json(const CampaignConfig& cfg) {
  nlohmann::json j = {{"dims", cfg.dims},
                      {"trials", cfg.trials},
                      {"seed", cfg.seed},
                      {"alphas", cfg.alphas},
                      {"a_grid", cfg.a_grid},
                      {"force_range", cfg.force_range},
                      {"channel_agreement", cfg.channel_agreement},
                      {"lemma_grid", cfg.lemma_grid}};
  j["tolerance"] = cfg.tolerance ? nlohmann::json(*cfg.tolerance) : nlohmann::json(nullptr);
  if (cfg.ep_c) j["ep_c"] = *cfg.ep_c;
  if (cfg.pn_c) j["pn_c"] = *cfg.pn_c;
  if (cfg.fault != Fault::None) j["inject_fault"] = std::string(to_string(cfg.fault));
  return j;
}

nlohmann::json report_to_json(const CampaignReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) checks.push_back(check_to_json(c));
  nlohmann::json j = {{"tool", "qepi"},
                      {"version", QEPI_VERSION},
                      {"seed", report.config.seed},
                      {"config", config_to_json(report.config)},
                      {"checks", std::move(checks)},
                      {"passed", report.passed()}};
  if (const CheckResult* f = report.first_failure()) {
    j["first_failure"] = {{"name", f->name}, {"dim", f->dim}};
    if (f->worst_trial >= 0) {
      j["first_failure"]["trial"] = f->worst_trial;
      j["first_failure"]["seed"] = f->worst_seed;
    }
  }
  return j;
}

void write_report_csv(std::ostream& os, const CampaignReport& report) {
  CsvWriter w(os, {"check", "dim", "certified", "samples", "worst_margin", "threshold",
                   "worst_trial", "worst_seed", "passed"});
  for (const CheckResult& c : report.checks) {
    w.row(std::vector<std::string>{c.name, std::to_string(c.dim), c.certified ? "1" : "0",
                                   std::to_string(c.samples), format_number(c.worst_margin),
                                   format_number(c.threshold), std::to_string(c.worst_trial),
                                   std::to_string(c.worst_seed), c.passed ? "1" : "0"});
  }
}

}  // namespace qepi
