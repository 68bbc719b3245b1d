#include "hvol/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hvol {

namespace {

// p log2 p with the 0 log 0 = 0 convention.
inline double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropyOf(const double* mass, Eigen::Index n) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    h -= xlog2x(mass[i]);
  }
  return h;
}

}  // namespace

double entropy(const FiniteDistribution& p) {
  return entropyOf(p.mass().data(), p.size());
}

double jointEntropy(const JointDistribution& j) {
  return entropyOf(j.mass().data(), j.mass().size());
}

double conditionalEntropy(const JointDistribution& j) {
  const Eigen::MatrixXd& mass = j.mass();
  double h = 0.0;
  for (Eigen::Index y = 0; y < mass.cols(); ++y) {
    const double py = mass.col(y).sum();
    if (py <= 0.0) {
      continue;
    }
    double hy = 0.0;
    for (Eigen::Index x = 0; x < mass.rows(); ++x) {
      hy -= xlog2x(mass(x, y) / py);
    }
    h += py * hy;
  }
  return h;
}

double mutualInformation(const JointDistribution& j) {
  return entropy(j.marginalRows()) - conditionalEntropy(j);
}

double klDivergence(const FiniteDistribution& p, const FiniteDistribution& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("relative entropy needs a common outcome set");
  }
  double d = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double pi = p(i);
    if (pi <= 0.0) {
      continue;
    }
    if (q(i) <= 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    d += pi * std::log2(pi / q(i));
  }
  return d;
}

}  // namespace hvol
