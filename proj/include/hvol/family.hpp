#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

#include "hvol/distribution.hpp"

namespace hvol {

/// An indexed collection of distributions over one common outcome set,
/// stored as a dense matrix with one member per row.
class DistributionFamily {
 public:
  DistributionFamily(std::vector<std::string> labels, Eigen::MatrixXd members);

  static DistributionFamily fromDistributions(
      std::vector<std::string> labels,
      std::span<const FiniteDistribution> members);

  Eigen::Index members() const { return members_.rows(); }
  Eigen::Index outcomes() const { return members_.cols(); }
  const Eigen::MatrixXd& matrix() const { return members_; }
  const std::string& label(Eigen::Index i) const { return labels_[i]; }

  FiniteDistribution member(Eigen::Index i) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd members_;  // row z = member P_z
};

}  // namespace hvol
