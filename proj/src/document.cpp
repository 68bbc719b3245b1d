#include "hvol/document.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace hvol {

namespace {

using nlohmann::ordered_json;

std::string formatReal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void writeEscaped(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      case '\r': out << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x",
                        static_cast<unsigned>(c));
          out << buffer;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

void writeJson(std::ostream& out, const ordered_json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string childPad(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (value.type()) {
    case ordered_json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, child] : value.items()) {
        if (!first) {
          out << ",\n";
        }
        first = false;
        out << childPad;
        writeEscaped(out, key);
        out << ": ";
        writeJson(out, child, indent + 1);
      }
      out << '\n' << pad << '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& child : value) {
        if (!first) {
          out << ",\n";
        }
        first = false;
        out << childPad;
        writeJson(out, child, indent + 1);
      }
      out << '\n' << pad << ']';
      return;
    }
    case ordered_json::value_t::string:
      writeEscaped(out, value.get_ref<const std::string&>());
      return;
    case ordered_json::value_t::boolean:
      out << (value.get<bool>() ? "true" : "false");
      return;
    case ordered_json::value_t::number_integer:
      out << value.get<std::int64_t>();
      return;
    case ordered_json::value_t::number_unsigned:
      out << value.get<std::uint64_t>();
      return;
    case ordered_json::value_t::number_float:
      out << formatReal(value.get<double>());
      return;
    default:
      out << "null";
      return;
  }
}

void csvReportRow(std::ostream& out, const std::string& kind,
                  const InequalityReport& r) {
  out << kind << ',' << r.name << ',' << formatReal(r.lhs) << ','
      << formatReal(r.rhs) << ',' << formatReal(r.margin) << ','
      << formatReal(r.tolerance) << ',' << (r.holds ? "true" : "false")
      << ",,,\n";
}

}  // namespace

std::string renderJson(const ordered_json& doc) {
  std::ostringstream out;
  writeJson(out, doc, 0);
  out << '\n';
  return out.str();
}

ordered_json reportToJson(const InequalityReport& report) {
  ordered_json j = ordered_json::object();
  j["name"] = report.name;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["margin"] = report.margin;
  j["tolerance"] = report.tolerance;
  j["holds"] = report.holds;
  return j;
}

ordered_json chainToJson(const ChainReport& chain) {
  ordered_json j = ordered_json::object();
  j["players"] = chain.players;
  j["delta"] = chain.delta;
  j["ic_eta"] = chain.icEta;
  j["coordinate_volumes"] = chain.coordinateVolume;
  j["odd_volume"] = chain.oddVolume;
  j["even_volume"] = chain.evenVolume;
  ordered_json links = ordered_json::array();
  for (const InequalityReport& link : chain.infoLinks) {
    links.push_back(reportToJson(link));
  }
  j["info_links"] = std::move(links);
  j["tree_link"] = reportToJson(chain.treeLink);
  j["paste_link"] = reportToJson(chain.pasteLink);
  j["floor_link"] = reportToJson(chain.floorLink);
  j["final_link"] = reportToJson(chain.finalLink);
  j["all_hold"] = chain.allHold();
  return j;
}

ordered_json summaryToJson(const CampaignSummary& summary) {
  ordered_json j = ordered_json::object();
  j["family"] = summary.family;
  j["trials"] = summary.trials;
  j["failures"] = summary.failures;
  j["min_margin"] = summary.minMargin;
  j["worst_trial"] = summary.worstTrial;
  j["worst"] = reportToJson(summary.worst);
  return j;
}

int ReportDocument::passCount() const {
  int pass = 0;
  for (const CampaignSummary& c : campaigns) {
    pass += static_cast<int>(c.trials - c.failures);
  }
  for (const InequalityReport& r : checks) {
    pass += r.holds ? 1 : 0;
  }
  for (const ChainReport& chain : chains) {
    for (const InequalityReport& r : chain.infoLinks) {
      pass += r.holds ? 1 : 0;
    }
    pass += chain.treeLink.holds ? 1 : 0;
    pass += chain.pasteLink.holds ? 1 : 0;
    pass += chain.floorLink.holds ? 1 : 0;
    pass += chain.finalLink.holds ? 1 : 0;
  }
  return pass;
}

int ReportDocument::failCount() const {
  int failures = 0;
  for (const CampaignSummary& c : campaigns) {
    failures += static_cast<int>(c.failures);
  }
  for (const InequalityReport& r : checks) {
    failures += r.holds ? 0 : 1;
  }
  for (const ChainReport& chain : chains) {
    for (const InequalityReport& r : chain.infoLinks) {
      failures += r.holds ? 0 : 1;
    }
    failures += chain.treeLink.holds ? 0 : 1;
    failures += chain.pasteLink.holds ? 0 : 1;
    failures += chain.floorLink.holds ? 0 : 1;
    failures += chain.finalLink.holds ? 0 : 1;
  }
  return failures;
}

ordered_json ReportDocument::toJson() const {
  ordered_json doc = ordered_json::object();
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["config"] = config;
  if (!campaigns.empty()) {
    ordered_json list = ordered_json::array();
    for (const CampaignSummary& c : campaigns) {
      list.push_back(summaryToJson(c));
    }
    doc["campaigns"] = std::move(list);
  }
  if (!checks.empty()) {
    ordered_json list = ordered_json::array();
    for (const InequalityReport& r : checks) {
      list.push_back(reportToJson(r));
    }
    doc["checks"] = std::move(list);
  }
  if (!chains.empty()) {
    ordered_json list = ordered_json::array();
    for (const ChainReport& chain : chains) {
      list.push_back(chainToJson(chain));
    }
    doc["chains"] = std::move(list);
  }
  if (!extras.empty()) {
    doc["extras"] = extras;
  }
  ordered_json summary = ordered_json::object();
  summary["pass"] = passCount();
  summary["fail"] = failCount();
  doc["summary"] = std::move(summary);
  return doc;
}

std::string ReportDocument::toCsv() const {
  std::ostringstream out;
  out << "kind,name,lhs,rhs,margin,tolerance,holds,trials,failures,"
         "min_margin\n";
  for (const CampaignSummary& c : campaigns) {
    out << "campaign," << c.family << ',' << formatReal(c.worst.lhs) << ','
        << formatReal(c.worst.rhs) << ',' << formatReal(c.minMargin) << ','
        << formatReal(c.worst.tolerance) << ','
        << (c.allHold() ? "true" : "false") << ',' << c.trials << ','
        << c.failures << ',' << formatReal(c.minMargin) << '\n';
  }
  for (const InequalityReport& r : checks) {
    csvReportRow(out, "check", r);
  }
  for (const ChainReport& chain : chains) {
    const std::string prefix = "chain_k" + std::to_string(chain.players);
    for (const InequalityReport& r : chain.infoLinks) {
      InequalityReport named = r;
      named.name = prefix + "." + r.name;
      csvReportRow(out, "chain", named);
    }
    for (const InequalityReport* r :
         {&chain.treeLink, &chain.pasteLink, &chain.floorLink,
          &chain.finalLink}) {
      InequalityReport named = *r;
      named.name = prefix + "." + r->name;
      csvReportRow(out, "chain", named);
    }
  }
  return out.str();
}

std::string renderDocument(const ReportDocument& doc, ReportFormat format) {
  return format == ReportFormat::kJson ? renderJson(doc.toJson())
                                       : doc.toCsv();
}

}  // namespace hvol
