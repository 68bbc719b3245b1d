#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hvol/report.hpp"

namespace hvol {

enum class ReportFormat { kJson, kCsv };

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  int kMin = 2;
  int kMax = 4;
  int depth = 8;
  double tolerance = 1e-9;
  ReportFormat format = ReportFormat::kJson;

  void validate() const;  // throws std::invalid_argument
};

/// Outcome of one seeded sampling campaign: every trial produces an
/// InequalityReport; the summary keeps the counts, the minimum margin, and
/// the full report of the worst trial.  Identical (seed, trials) always
/// reproduce the same summary, bit for bit.
struct CampaignSummary {
  std::string family;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double minMargin = 0.0;
  std::uint64_t worstTrial = 0;
  InequalityReport worst;

  bool allHold() const { return failures == 0; }
};

using TrialFn =
    std::function<InequalityReport(std::uint64_t trial, std::uint64_t seed)>;

CampaignSummary runCampaign(std::string family, std::uint64_t seed,
                            std::uint64_t trials, const TrialFn& fn);

// Campaigns over random inputs, one per verified inequality.  Sizes follow
// the callers: the CLI passes config.trials, the acceptance suite its pinned
// counts.

CampaignSummary campaignHellingerNonneg(std::uint64_t seed,
                                        std::uint64_t trials, int maxMembers,
                                        int maxOutcomes, double tolerance);

CampaignSummary campaignAmGmGap(std::uint64_t seed, std::uint64_t trials,
                                int maxOutcomes, double tolerance);

CampaignSummary campaignAmGmSequence(std::uint64_t seed, std::uint64_t trials,
                                     int maxLength, double tolerance);

CampaignSummary campaignMutualInfoLowerBound(std::uint64_t seed,
                                             std::uint64_t trials,
                                             int maxMembers, int maxOutcomes,
                                             double tolerance);

CampaignSummary campaignSymmetricDifference(std::uint64_t seed,
                                            std::uint64_t trials,
                                            int maxOutcomes, double tolerance);

CampaignSummary campaignSubsetTree(std::uint64_t seed, std::uint64_t trials,
                                   int kMin, int kMax, int maxDepth,
                                   double tolerance);

CampaignSummary campaignEventSeparation(std::uint64_t seed,
                                        std::uint64_t trials, int maxOutcomes,
                                        double tolerance);

/// One corpus of random protocols feeding three checks at once: the
/// cut-and-paste equality (within `tolerance`), the per-(input, transcript)
/// factorization product identity (within 1e-12), and information cost vs
/// communication cost (within `tolerance`).
struct ProtocolCampaign {
  CampaignSummary cutAndPaste;
  CampaignSummary factorization;
  CampaignSummary informationVsCommunication;
};

ProtocolCampaign campaignProtocols(std::uint64_t seed, std::uint64_t trials,
                                   int kMin, int kMax, int maxDepth,
                                   double tolerance);

}  // namespace hvol
