#include "hvol/campaign.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hvol/cube.hpp"
#include "hvol/hellinger.hpp"
#include "hvol/protocol.hpp"
#include "hvol/sampling.hpp"

namespace hvol {

void CampaignConfig::validate() const {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (kMin < 2 || kMax > 6 || kMin > kMax) {
    throw std::invalid_argument("k range must lie within [2, 6]");
  }
  if (depth < 0 || depth > 16) {
    throw std::invalid_argument("depth cap must lie within [0, 16]");
  }
}

CampaignSummary runCampaign(std::string family, std::uint64_t seed,
                            std::uint64_t trials, const TrialFn& fn) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  CampaignSummary summary;
  summary.family = std::move(family);
  summary.trials = trials;
  summary.minMargin = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    InequalityReport report = fn(t, seed);
    if (!report.holds) {
      ++summary.failures;
    }
    if (report.margin < summary.minMargin) {
      summary.minMargin = report.margin;
      summary.worstTrial = t;
      summary.worst = std::move(report);
    }
  }
  return summary;
}

CampaignSummary campaignHellingerNonneg(std::uint64_t seed,
                                        std::uint64_t trials, int maxMembers,
                                        int maxOutcomes, double tolerance) {
  return runCampaign(
      "hellinger_nonneg", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        const auto members = nextInt(rng, 2, maxMembers);
        const auto outcomes = nextInt(rng, 2, maxOutcomes);
        const double volume =
            hellingerVolume(randomFamily(rng, members, outcomes));
        return makeGeReport("hellinger_nonneg", volume, 0.0, tolerance);
      });
}

CampaignSummary campaignAmGmGap(std::uint64_t seed, std::uint64_t trials,
                                int maxOutcomes, double tolerance) {
  return runCampaign("am_gm_gap", seed, trials,
                     [&](std::uint64_t trial, std::uint64_t master) {
                       Rng rng = trialRng(master, trial);
                       const auto m = nextInt(rng, 2, maxOutcomes);
                       return checkAmGmGap(randomDistribution(rng, m),
                                           tolerance);
                     });
}

CampaignSummary campaignAmGmSequence(std::uint64_t seed, std::uint64_t trials,
                                     int maxLength, double tolerance) {
  return runCampaign(
      "am_gm_sequence", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        const auto m = nextInt(rng, 1, maxLength);
        Eigen::ArrayXd alpha(m);
        for (Eigen::Index i = 0; i < m; ++i) {
          alpha(i) = 16.0 * nextUnit(rng);  // arbitrary positive scale
        }
        if ((alpha <= 0.0).all()) {
          alpha(0) = 1.0;
        }
        return checkAmGmSequence(alpha, tolerance);
      });
}

CampaignSummary campaignMutualInfoLowerBound(std::uint64_t seed,
                                             std::uint64_t trials,
                                             int maxMembers, int maxOutcomes,
                                             double tolerance) {
  return runCampaign(
      "mutual_info_lower_bound", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        const auto members = nextInt(rng, 2, maxMembers);
        const auto outcomes = nextInt(rng, 2, maxOutcomes);
        return checkMutualInfoLowerBound(
            randomFamily(rng, members, outcomes), tolerance);
      });
}

CampaignSummary campaignSymmetricDifference(std::uint64_t seed,
                                            std::uint64_t trials,
                                            int maxOutcomes, double tolerance) {
  return runCampaign(
      "symmetric_difference", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        // |A| = |B| = |A delta B| = a with an overlap of a/2: lay the family
        // out as [0, 3a/2) with A the first a members, B the last a.
        const int a = 2 << nextInt(rng, 0, 2);  // 2, 4 or 8
        const auto outcomes = nextInt(rng, 2, maxOutcomes);
        const DistributionFamily family =
            randomFamily(rng, 3 * a / 2, outcomes);
        std::vector<int> setA(static_cast<std::size_t>(a));
        std::vector<int> setB(static_cast<std::size_t>(a));
        for (int i = 0; i < a; ++i) {
          setA[static_cast<std::size_t>(i)] = i;
          setB[static_cast<std::size_t>(i)] = a / 2 + i;
        }
        return checkSymmetricDifference(family, setA, setB, tolerance);
      });
}

CampaignSummary campaignSubsetTree(std::uint64_t seed, std::uint64_t trials,
                                   int kMin, int kMax, int maxDepth,
                                   double tolerance) {
  return runCampaign(
      "subset_tree_bound", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        const auto k = static_cast<int>(nextInt(rng, kMin, kMax));
        const ProtocolTree tree = randomProtocol(rng, k, maxDepth);
        const CubeIndex cube(k);
        // Random nonempty coordinate set; the full set [k] is the tree form
        // used by the AND_k chain.
        std::vector<int> coords;
        const auto mask = nextInt(rng, 1, (1 << k) - 1);
        for (int j = 0; j < k; ++j) {
          if ((mask >> j) & 1) {
            coords.push_back(j);
          }
        }
        return checkSubsetTreeBound(transcriptFamily(tree), cube, coords,
                                    tolerance);
      });
}

CampaignSummary campaignEventSeparation(std::uint64_t seed,
                                        std::uint64_t trials, int maxOutcomes,
                                        double tolerance) {
  return runCampaign(
      "event_separation_bound", seed, trials,
      [&](std::uint64_t trial, std::uint64_t master) {
        Rng rng = trialRng(master, trial);
        const auto members = nextInt(rng, 2, 8);
        const auto outcomes = nextInt(rng, 2, maxOutcomes);
        const double delta = 0.45 * nextUnit(rng);
        // Event T = a proper nonempty prefix of the outcomes.  The special
        // member concentrates at least 1 - delta inside T, the others at
        // most delta.
        const auto eventSize = nextInt(rng, 1, outcomes - 1);
        std::vector<int> event(static_cast<std::size_t>(eventSize));
        for (std::int64_t w = 0; w < eventSize; ++w) {
          event[static_cast<std::size_t>(w)] = static_cast<int>(w);
        }
        const int special = static_cast<int>(nextInt(rng, 0, members - 1));

        Eigen::MatrixXd matrix(members, outcomes);
        for (std::int64_t z = 0; z < members; ++z) {
          const double inside = z == special ? 1.0 - delta * nextUnit(rng)
                                             : delta * nextUnit(rng);
          Eigen::ArrayXd on = Eigen::ArrayXd::Zero(outcomes);
          Eigen::ArrayXd off = Eigen::ArrayXd::Zero(outcomes);
          double onSum = 0.0;
          double offSum = 0.0;
          for (std::int64_t w = 0; w < outcomes; ++w) {
            const double draw = nextUnit(rng);
            if (w < eventSize) {
              on(w) = draw;
              onSum += draw;
            } else {
              off(w) = draw;
              offSum += draw;
            }
          }
          Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(outcomes);
          if (onSum > 0.0) {
            mass += inside * on / onSum;
          } else {
            mass(0) = inside;
          }
          if (offSum > 0.0) {
            mass += (1.0 - inside) * off / offSum;
          } else {
            mass(eventSize) = 1.0 - inside;
          }
          matrix.row(z) = mass.matrix();
        }
        std::vector<int> subset(static_cast<std::size_t>(members));
        for (std::int64_t z = 0; z < members; ++z) {
          subset[static_cast<std::size_t>(z)] = static_cast<int>(z);
        }
        return checkEventSeparationBound(DistributionFamily({},
                                                            std::move(matrix)),
                                         subset, event, special, delta,
                                         tolerance);
      });
}

ProtocolCampaign campaignProtocols(std::uint64_t seed, std::uint64_t trials,
                                   int kMin, int kMax, int maxDepth,
                                   double tolerance) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  ProtocolCampaign campaign;
  auto begin = [&](CampaignSummary& s, const char* family) {
    s.family = family;
    s.trials = trials;
    s.minMargin = std::numeric_limits<double>::infinity();
  };
  begin(campaign.cutAndPaste, "cut_and_paste");
  begin(campaign.factorization, "factorization_product");
  begin(campaign.informationVsCommunication, "ic_le_cc");

  auto record = [](CampaignSummary& s, std::uint64_t trial,
                   InequalityReport report) {
    if (!report.holds) {
      ++s.failures;
    }
    if (report.margin < s.minMargin) {
      s.minMargin = report.margin;
      s.worstTrial = trial;
      s.worst = std::move(report);
    }
  };

  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = trialRng(seed, t);
    const auto k = static_cast<int>(nextInt(rng, kMin, kMax));
    const ProtocolTree tree = randomProtocol(rng, k, maxDepth);

    record(campaign.cutAndPaste, t, checkCutAndPaste(tree, tolerance));

    double worstFactorization = 0.0;
    for (std::int64_t z = 0; z < tree.space().count(); ++z) {
      worstFactorization =
          std::max(worstFactorization, factorizationMaxError(tree, z));
    }
    record(campaign.factorization, t,
           makeLeReport("factorization_product", worstFactorization, 0.0,
                        1e-12));

    const double ic = informationCost(
        tree, FiniteDistribution::uniform(tree.space().count()));
    record(campaign.informationVsCommunication, t,
           makeLeReport("ic_le_cc", ic,
                        static_cast<double>(communicationCost(tree)),
                        tolerance));
  }
  return campaign;
}

}  // namespace hvol
