#include "hvol/distribution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvol {

namespace {

void checkMassVector(const double* data, Eigen::Index n, double& sum) {
  if (n <= 0) {
    throw std::invalid_argument("distribution needs at least one outcome");
  }
  sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = data[i];
    if (!(m >= 0.0)) {  // also rejects NaN
      std::ostringstream msg;
      msg << "mass at outcome " << i << " is " << m << ", expected >= 0";
      throw std::invalid_argument(msg.str());
    }
    sum += m;
  }
}

}  // namespace

FiniteDistribution::FiniteDistribution(Eigen::ArrayXd mass)
    : mass_(std::move(mass)) {
  double sum = 0.0;
  checkMassVector(mass_.data(), mass_.size(), sum);
  if (sum != 1.0) {
    if (std::abs(sum - 1.0) > kRenormalizeWindow) {
      std::ostringstream msg;
      msg << "masses sum to " << sum << ", more than " << kRenormalizeWindow
          << " away from 1";
      throw std::invalid_argument(msg.str());
    }
    mass_ /= sum;
  }
}

FiniteDistribution FiniteDistribution::uniform(Eigen::Index n) {
  return FiniteDistribution(
      Eigen::ArrayXd::Constant(n, 1.0 / static_cast<double>(n)));
}

FiniteDistribution FiniteDistribution::pointMass(Eigen::Index n,
                                                 Eigen::Index at) {
  if (at < 0 || at >= n) {
    throw std::invalid_argument("point mass outcome out of range");
  }
  Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(n);
  mass(at) = 1.0;
  return FiniteDistribution(std::move(mass));
}

JointDistribution::JointDistribution(Eigen::MatrixXd mass)
    : mass_(std::move(mass)) {
  double sum = 0.0;
  checkMassVector(mass_.data(), mass_.size(), sum);
  if (sum != 1.0) {
    if (std::abs(sum - 1.0) > FiniteDistribution::kRenormalizeWindow) {
      std::ostringstream msg;
      msg << "joint masses sum to " << sum;
      throw std::invalid_argument(msg.str());
    }
    mass_ /= sum;
  }
}

FiniteDistribution JointDistribution::marginalRows() const {
  return FiniteDistribution(mass_.rowwise().sum().array());
}

FiniteDistribution JointDistribution::marginalCols() const {
  return FiniteDistribution(mass_.colwise().sum().transpose().array());
}

FiniteDistribution productSpace(std::span<const FiniteDistribution> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product of zero distributions");
  }
  Eigen::ArrayXd mass = factors[0].mass();
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const Eigen::ArrayXd& next = factors[j].mass();
    Eigen::ArrayXd combined(mass.size() * next.size());
    for (Eigen::Index a = 0; a < mass.size(); ++a) {
      combined.segment(a * next.size(), next.size()) = mass(a) * next;
    }
    mass = std::move(combined);
  }
  return FiniteDistribution(std::move(mass));
}

}  // namespace hvol
