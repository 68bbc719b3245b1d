#pragma once

#include <optional>
#include <string>

#include "hvol/campaign.hpp"
#include "hvol/document.hpp"

namespace hvol {

/// Runs every inequality campaign (Hellinger nonnegativity, the AM-GM gap
/// bound in both forms, the mutual-information floor, symmetric difference,
/// the coordinate-sum tree bound, cut-and-paste with the factorization
/// identity, and the event-separation floor) at config.trials each.
ReportDocument cmdVerify(const CampaignConfig& config);

/// Full AND_k pipeline on the built-in protocol ("trivial") or a protocol
/// file: bound values, the lower-bound chain, and for k = 3 the
/// zero-information XOR suite.
ReportDocument cmdAndk(int players, const std::string& source,
                       double tolerance);

/// Inspects a protocol file: transcript distributions for one input or all
/// of them, the factorization identity, communication cost, and error /
/// information cost against optional truth-table and input-distribution
/// files.
ReportDocument cmdProtocol(const std::string& path, const std::string& input,
                           const std::optional<std::string>& zetaPath,
                           const std::optional<std::string>& truthPath,
                           double tolerance);

}  // namespace hvol
