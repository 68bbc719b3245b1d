#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hvol/andk.hpp"
#include "hvol/campaign.hpp"
#include "hvol/report.hpp"

namespace hvol {

inline constexpr const char* kToolName = "hvol";
inline constexpr const char* kToolVersion = "1.0.0";

/// Machine-readable result of one CLI command: a config echo plus every
/// report the command produced.  failCount() == 0 exactly when every
/// contained report holds, and the process exit status mirrors that.
struct ReportDocument {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<CampaignSummary> campaigns;
  std::vector<InequalityReport> checks;
  std::vector<ChainReport> chains;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();

  int passCount() const;
  int failCount() const;

  nlohmann::ordered_json toJson() const;
  std::string toCsv() const;
};

/// Serializes a JSON tree with every floating-point number printed via
/// "%.17g", so documents are reproducible byte for byte and every real
/// round-trips exactly.
std::string renderJson(const nlohmann::ordered_json& doc);

std::string renderDocument(const ReportDocument& doc, ReportFormat format);

nlohmann::ordered_json reportToJson(const InequalityReport& report);
nlohmann::ordered_json chainToJson(const ChainReport& chain);
nlohmann::ordered_json summaryToJson(const CampaignSummary& summary);

}  // namespace hvol
