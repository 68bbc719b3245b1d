#include "hvol/family.hpp"

#include <stdexcept>
#include <utility>

namespace hvol {

DistributionFamily::DistributionFamily(std::vector<std::string> labels,
                                       Eigen::MatrixXd members)
    : labels_(std::move(labels)), members_(std::move(members)) {
  if (members_.rows() == 0) {
    throw std::invalid_argument("family must be nonempty");
  }
  if (labels_.empty()) {
    labels_.reserve(members_.rows());
    for (Eigen::Index i = 0; i < members_.rows(); ++i) {
      labels_.push_back(std::to_string(i));
    }
  }
  if (static_cast<Eigen::Index>(labels_.size()) != members_.rows()) {
    throw std::invalid_argument("one label per member required");
  }
  // Validate (and renormalize) every row through FiniteDistribution.
  for (Eigen::Index i = 0; i < members_.rows(); ++i) {
    FiniteDistribution row(members_.row(i).transpose().array());
    members_.row(i) = row.mass().matrix().transpose();
  }
}

DistributionFamily DistributionFamily::fromDistributions(
    std::vector<std::string> labels,
    std::span<const FiniteDistribution> members) {
  if (members.empty()) {
    throw std::invalid_argument("family must be nonempty");
  }
  const Eigen::Index outcomes = members[0].size();
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(members.size()), outcomes);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != outcomes) {
      throw std::invalid_argument(
          "family members must share one outcome set");
    }
    matrix.row(static_cast<Eigen::Index>(i)) =
        members[i].mass().matrix().transpose();
  }
  return DistributionFamily(std::move(labels), std::move(matrix));
}

FiniteDistribution DistributionFamily::member(Eigen::Index i) const {
  return FiniteDistribution(members_.row(i).transpose().array());
}

}  // namespace hvol
