#pragma once

#include <Eigen/Core>

#include <span>
#include <string>

namespace hvol {

/// Probability mass function over a finite, ordered outcome set.
///
/// Outcomes are identified by their position 0..size()-1; callers keep any
/// richer labels on the side.  Construction enforces the two invariants every
/// downstream computation relies on: all masses nonnegative, and the total
/// mass equal to 1.  Raw vectors whose sum is within 1e-6 of 1 are silently
/// renormalized (float drift from long product chains); anything further off
/// is rejected as a genuine bug.
class FiniteDistribution {
 public:
  static constexpr double kRenormalizeWindow = 1e-6;
  static constexpr double kMassTolerance = 1e-9;

  explicit FiniteDistribution(Eigen::ArrayXd mass);

  static FiniteDistribution uniform(Eigen::Index n);
  static FiniteDistribution pointMass(Eigen::Index n, Eigen::Index at);

  Eigen::Index size() const { return mass_.size(); }
  double operator()(Eigen::Index i) const { return mass_(i); }
  const Eigen::ArrayXd& mass() const { return mass_; }

 private:
  Eigen::ArrayXd mass_;
};

/// Joint distribution of a pair (X, Y); rows index values of X, columns
/// values of Y.  Same mass invariants as FiniteDistribution, and both
/// marginals are valid distributions.
class JointDistribution {
 public:
  explicit JointDistribution(Eigen::MatrixXd mass);

  Eigen::Index rows() const { return mass_.rows(); }
  Eigen::Index cols() const { return mass_.cols(); }
  const Eigen::MatrixXd& mass() const { return mass_; }

  FiniteDistribution marginalRows() const;  // distribution of X
  FiniteDistribution marginalCols() const;  // distribution of Y

 private:
  Eigen::MatrixXd mass_;
};

/// Product distribution over the Cartesian product of the factors' outcome
/// sets, enumerated lexicographically with the first factor most significant.
FiniteDistribution productSpace(std::span<const FiniteDistribution> factors);

}  // namespace hvol
