#pragma once

#include "hvol/distribution.hpp"

namespace hvol {

/// Shannon entropy -sum p(x) log2 p(x), in bits, with 0 log 0 = 0.
double entropy(const FiniteDistribution& p);

/// Entropy of the pair (X, Y) viewed as a single variable, in bits.
double jointEntropy(const JointDistribution& j);

/// H(X | Y) = sum_y Pr[Y=y] H(X | Y=y), in bits.
double conditionalEntropy(const JointDistribution& j);

/// I(X; Y) = H(X) - H(X | Y), in bits.
double mutualInformation(const JointDistribution& j);

/// Relative entropy D(p || q) = sum p(x) log2(p(x)/q(x)), in bits.
/// Returns +infinity when p(x) > 0 on some outcome with q(x) = 0; terms with
/// p(x) = 0 contribute nothing.  Throws if the outcome sets differ.
double klDivergence(const FiniteDistribution& p, const FiniteDistribution& q);

}  // namespace hvol
