#pragma once

#include <Eigen/Core>

#include <span>

#include "hvol/cube.hpp"
#include "hvol/distribution.hpp"
#include "hvol/family.hpp"
#include "hvol/report.hpp"

namespace hvol {

/// Thrown when the separation hypothesis of checkEventSeparationBound does
/// not hold, i.e. the certificate simply does not apply to the family.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// m-dimensional Hellinger volume 1 - sum_w (prod_j p_j(w))^(1/m) of m >= 2
/// distributions over a common outcome set.  The m = 2 case is the squared
/// Hellinger distance.  Geometric means are taken in the log domain, with any
/// zero factor short-circuiting the term to exactly 0.
double hellingerVolume(std::span<const FiniteDistribution> dists);

/// Hellinger volume of the whole family.
double hellingerVolume(const DistributionFamily& family);

/// Hellinger volume of the sub-family selected by `subset` (|subset| >= 2).
double hellingerVolume(const DistributionFamily& family,
                       std::span<const int> subset);

/// Gap bound between the arithmetic and geometric mean of a distribution p
/// over [m]:  A(p) - G(p) <= ln2 * D(p || uniform).  The report's lhs is the
/// divergence side, rhs the gap, so margin = lhs - rhs.
InequalityReport checkAmGmGap(const FiniteDistribution& p, double tolerance);

/// Same bound for an arbitrary nonnegative sequence alpha with sum > 0:
/// A(alpha) - G(alpha) <= sum_j alpha_j ln(alpha_j / A(alpha)).  Delegates to
/// checkAmGmGap on the normalized sequence.  lhs is the gap, rhs the entropy
/// sum, margin = rhs - lhs.
InequalityReport checkAmGmSequence(const Eigen::ArrayXd& alpha,
                                   double tolerance);

/// For channels {P_1..P_m} and Z uniform on [m]:
///   I(Z; Phi(Z)) >= h_m(P_1..P_m) / (m ln 2).
InequalityReport checkMutualInfoLowerBound(const DistributionFamily& channels,
                                           double tolerance);

/// Weak-triangle analogue for subset volumes:  psi(A) + psi(B) >=
/// psi(A delta B) / 2, for subsets with |A| = |B| = |A delta B| (which forces
/// |A| even and |A ^ B| = |A| / 2; both are validated).
InequalityReport checkSymmetricDifference(const DistributionFamily& family,
                                          std::span<const int> setA,
                                          std::span<const int> setB,
                                          double tolerance);

/// For a family indexed by {0,1}^k and a nonempty coordinate set s:
///   sum_{j in s} psi(I_j) >= psi(I_s) / 2^ceil(log2 |s|).
/// With s = [k] the right side is psi(I_OZ) / 2^ceil(log2 k).
InequalityReport checkSubsetTreeBound(const DistributionFamily& family,
                                      const CubeIndex& cube,
                                      std::span<const int> coords,
                                      double tolerance);

/// Volume floor for a family separated by an event: if some member v of A
/// (|A| = t >= 2) has P_v(T) >= 1 - delta while every other member u in A has
/// P_u(T) <= delta, for delta in [0, 1/2], then
///   psi(A) >= (2 - 4 sqrt(delta (1 - delta))) / t.
/// Throws HypothesisError when the separation premise fails (checked with a
/// 1e-9 slack).
InequalityReport checkEventSeparationBound(const DistributionFamily& family,
                                           std::span<const int> subset,
                                           std::span<const int> eventOutcomes,
                                           int specialMember, double delta,
                                           double tolerance);

/// ceil(log2 n) computed over integers; n >= 1.
int ceilLog2(unsigned long long n);

}  // namespace hvol
