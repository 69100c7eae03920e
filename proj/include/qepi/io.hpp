#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qepi/campaign.hpp"

namespace qepi {

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double x);

/// {"dim": d, "entries": [[re, im], ...]} with entries row-major.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix read_state_file(const std::string& path);

/// "mixed", "diag:v1,v2,..." or "file:PATH". When d > 0 the parsed state must
/// have that dimension.
DensityMatrix parse_sigma_spec(std::string_view spec, int d);

/// Writes a header row then the data rows, comma separated.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
  std::size_t width_;
};

nlohmann::json check_to_json(const CheckResult& c);
nlohmann::json config_to_json(const CampaignConfig& cfg);
/// Embeds tool name, version, config, seed and every check. No timestamps,
/// so identical runs serialize identically.
nlohmann::json report_to_json(const CampaignReport& report);
void write_report_csv(std::ostream& os, const CampaignReport& report);

}  // namespace qepi
