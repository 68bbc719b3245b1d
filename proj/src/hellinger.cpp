#include "hvol/hellinger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hvol/info.hpp"

namespace hvol {

namespace {

// 1 - sum_w exp(mean of log masses), with any zero factor collapsing the
// term to exactly 0.  `rows` selects the participating members.
double volumeOfRows(const Eigen::MatrixXd& members,
                    std::span<const int> rows) {
  const auto m = static_cast<double>(rows.size());
  double total = 0.0;
  for (Eigen::Index w = 0; w < members.cols(); ++w) {
    double logSum = 0.0;
    bool zero = false;
    for (int r : rows) {
      const double p = members(r, w);
      if (p <= 0.0) {
        zero = true;
        break;
      }
      logSum += std::log(p);
    }
    if (!zero) {
      total += std::exp(logSum / m);
    }
  }
  return 1.0 - total;
}

std::vector<int> allRows(Eigen::Index n) {
  std::vector<int> rows(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = static_cast<int>(i);
  }
  return rows;
}

void checkSubset(const DistributionFamily& family, std::span<const int> subset,
                 const char* what) {
  if (subset.size() < 2) {
    std::ostringstream msg;
    msg << what << " needs at least 2 members, got " << subset.size();
    throw std::invalid_argument(msg.str());
  }
  for (int z : subset) {
    if (z < 0 || z >= family.members()) {
      std::ostringstream msg;
      msg << what << " index " << z << " outside family of size "
          << family.members();
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

int ceilLog2(unsigned long long n) {
  if (n == 0) {
    throw std::invalid_argument("ceilLog2(0)");
  }
  return static_cast<int>(std::bit_width(n - 1));
}

double hellingerVolume(std::span<const FiniteDistribution> dists) {
  if (dists.size() < 2) {
    throw std::invalid_argument("Hellinger volume needs at least 2 members");
  }
  const DistributionFamily family =
      DistributionFamily::fromDistributions({}, dists);
  return volumeOfRows(family.matrix(), allRows(family.members()));
}

double hellingerVolume(const DistributionFamily& family) {
  if (family.members() < 2) {
    throw std::invalid_argument("Hellinger volume needs at least 2 members");
  }
  return volumeOfRows(family.matrix(), allRows(family.members()));
}

double hellingerVolume(const DistributionFamily& family,
                       std::span<const int> subset) {
  checkSubset(family, subset, "subset");
  return volumeOfRows(family.matrix(), subset);
}

InequalityReport checkAmGmGap(const FiniteDistribution& p, double tolerance) {
  const Eigen::Index m = p.size();
  const double arithmetic = p.mass().sum() / static_cast<double>(m);
  double geometric = 0.0;
  if ((p.mass() > 0.0).all()) {
    geometric = std::exp(p.mass().log().sum() / static_cast<double>(m));
  }
  const double divergence =
      std::numbers::ln2 * klDivergence(p, FiniteDistribution::uniform(m));
  return makeGeReport("am_gm_gap", divergence, arithmetic - geometric,
                      tolerance);
}

InequalityReport checkAmGmSequence(const Eigen::ArrayXd& alpha,
                                   double tolerance) {
  if (alpha.size() == 0 || (alpha < 0.0).any()) {
    throw std::invalid_argument("sequence must be nonnegative");
  }
  const double sum = alpha.sum();
  if (!(sum > 0.0)) {
    throw std::invalid_argument("sequence must have positive sum");
  }
  const InequalityReport inner =
      checkAmGmGap(FiniteDistribution(alpha / sum), tolerance);
  // Both sides of the normalized bound scale linearly with the raw sum.
  InequalityReport report;
  report.name = "am_gm_sequence";
  report.lhs = sum * inner.rhs;     // A(alpha) - G(alpha)
  report.rhs = sum * inner.lhs;     // sum_j alpha_j ln(alpha_j / A(alpha))
  report.margin = report.rhs - report.lhs;
  report.tolerance = tolerance;
  report.holds = report.margin >= -tolerance;
  return report;
}

InequalityReport checkMutualInfoLowerBound(const DistributionFamily& channels,
                                           double tolerance) {
  const Eigen::Index m = channels.members();
  if (m < 2) {
    throw std::invalid_argument("need at least 2 channels");
  }
  const Eigen::MatrixXd joint = channels.matrix() / static_cast<double>(m);
  const double info = mutualInformation(JointDistribution(joint));
  const double volume = hellingerVolume(channels);
  const double floor =
      volume / (static_cast<double>(m) * std::numbers::ln2);
  return makeGeReport("mutual_info_lower_bound", info, floor, tolerance);
}

InequalityReport checkSymmetricDifference(const DistributionFamily& family,
                                          std::span<const int> setA,
                                          std::span<const int> setB,
                                          double tolerance) {
  checkSubset(family, setA, "set A");
  checkSubset(family, setB, "set B");
  std::vector<int> a(setA.begin(), setA.end());
  std::vector<int> b(setB.begin(), setB.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::vector<int> diff = CubeIndex::symmetricDifference(a, b);
  if (a.size() != b.size() || diff.size() != a.size()) {
    std::ostringstream msg;
    msg << "symmetric-difference check needs |A| = |B| = |A delta B|, got "
        << a.size() << ", " << b.size() << ", " << diff.size();
    throw std::invalid_argument(msg.str());
  }
  if (a.size() % 2 != 0) {
    throw std::invalid_argument("|A| must be even");
  }
  const double lhs =
      hellingerVolume(family, a) + hellingerVolume(family, b);
  const double rhs = hellingerVolume(family, diff) / 2.0;
  return makeGeReport("symmetric_difference", lhs, rhs, tolerance);
}

InequalityReport checkSubsetTreeBound(const DistributionFamily& family,
                                      const CubeIndex& cube,
                                      std::span<const int> coords,
                                      double tolerance) {
  if (family.members() != cube.size()) {
    std::ostringstream msg;
    msg << "family has " << family.members() << " members, cube needs "
        << cube.size();
    throw std::invalid_argument(msg.str());
  }
  if (coords.empty()) {
    throw std::invalid_argument("coordinate set must be nonempty");
  }
  double coordinateSum = 0.0;
  for (int j : coords) {
    coordinateSum += hellingerVolume(family, cube.bitZeroSubset(j));
  }
  const std::vector<int> odd = cube.oddZeroSubset(coords);
  const double scaled =
      hellingerVolume(family, odd) /
      static_cast<double>(1 << ceilLog2(coords.size()));
  return makeGeReport("subset_tree_bound", coordinateSum, scaled, tolerance);
}

InequalityReport checkEventSeparationBound(const DistributionFamily& family,
                                           std::span<const int> subset,
                                           std::span<const int> eventOutcomes,
                                           int specialMember, double delta,
                                           double tolerance) {
  checkSubset(family, subset, "subset");
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw std::invalid_argument("delta must lie in [0, 1/2]");
  }
  if (std::find(subset.begin(), subset.end(), specialMember) == subset.end()) {
    throw std::invalid_argument("special member must belong to the subset");
  }
  for (int w : eventOutcomes) {
    if (w < 0 || w >= family.outcomes()) {
      throw std::invalid_argument("event outcome out of range");
    }
  }
  constexpr double kHypothesisSlack = 1e-9;
  for (int z : subset) {
    double onEvent = 0.0;
    for (int w : eventOutcomes) {
      onEvent += family.matrix()(z, w);
    }
    if (z == specialMember) {
      if (onEvent < 1.0 - delta - kHypothesisSlack) {
        std::ostringstream msg;
        msg << "member " << family.label(z) << " has event mass " << onEvent
            << " < 1 - delta = " << 1.0 - delta;
        throw HypothesisError(msg.str());
      }
    } else if (onEvent > delta + kHypothesisSlack) {
      std::ostringstream msg;
      msg << "member " << family.label(z) << " has event mass " << onEvent
          << " > delta = " << delta;
      throw HypothesisError(msg.str());
    }
  }
  const auto t = static_cast<double>(subset.size());
  const double floor =
      (2.0 - 4.0 * std::sqrt(delta * (1.0 - delta))) / t;
  return makeGeReport("event_separation_bound",
                      hellingerVolume(family, subset), floor, tolerance);
}

}  // namespace hvol
