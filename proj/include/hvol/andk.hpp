#pragma once

#include <vector>

#include "hvol/distribution.hpp"
#include "hvol/family.hpp"
#include "hvol/protocol.hpp"
#include "hvol/report.hpp"

namespace hvol {

/// Truth table of AND_k over the cube enumeration: 1 on the all-ones input,
/// 0 elsewhere.
std::vector<int> andTruthTable(int players);

/// The collection {zeta_1..zeta_k}: zeta_j is uniform over the 2^(k-1) cube
/// inputs whose j-th bit is 0.  Every member is supported on zeroes of AND_k,
/// and under each member the k coordinates are independent.
std::vector<FiniteDistribution> etaCollection(int players);

/// Closed-form floor on the average information cost of delta-error AND_k
/// protocols:  log2(e) * (1 - 2 sqrt(delta (1 - delta))) / (k^2 4^(k-1)).
/// Throws for delta >= 1/2, where the bound degenerates.
double andLowerBound(int players, double delta);

/// Cost achieved by the see-a-zero protocol: H(1/2^(k-1)) / k bits, where H
/// is the binary entropy.
double andUpperBound(int players);

/// The zero-error AND_k protocol in which players 1..k announce in turn
/// whether they see a 0 among the other inputs, stopping at the first yes.
/// The single all-no path ends in a leaf outputting 1; every other leaf
/// outputs 0.
ProtocolTree trivialAndProtocol(int players);

/// The lower-bound argument for one concrete AND_k protocol, link by link:
///   1. per player j: I(Z;transcript) under zeta_j >= psi(I_j)/(2^(k-1) ln2)
///   2. sum_j psi(I_j) >= psi(I_OZ) / 2^ceil(log2 k)
///   3. psi(I_OZ) = psi(I_EZ)
///   4. psi(I_EZ) >= (2 - 4 sqrt(delta(1-delta))) / 2^(k-1)
///   final: IC_eta >= log2(e) (1 - 2 sqrt(delta(1-delta))) / (k^2 4^(k-1))
/// delta is the protocol's exact worst-case error, never a caller guess.
struct ChainReport {
  int players = 0;
  double delta = 0.0;
  double icEta = 0.0;
  std::vector<double> coordinateVolume;  // psi(I_j)
  double oddVolume = 0.0;
  double evenVolume = 0.0;
  std::vector<InequalityReport> infoLinks;  // link 1, one per player
  InequalityReport treeLink;                // link 2
  InequalityReport pasteLink;               // link 3
  InequalityReport floorLink;               // link 4
  InequalityReport finalLink;

  bool allHold() const;
};

/// Runs the whole chain on a protocol over {0,1}^k.  Throws if the protocol's
/// exact error is >= 1/2 (link 4's hypothesis cannot be met).  If every link
/// holds, the final inequality is asserted to hold as well; they are
/// arithmetically entangled, so a mismatch means a computation bug.
ChainReport verifyLowerBoundChain(const ProtocolTree& tree, double tolerance);

/// Three-player XOR protocol with randomness on the foreheads.  Player j's
/// forehead carries (x_j, a_j, b_j), encoded as symbol x*4 + a*2 + b in an
/// alphabet of size 8.  Player 1 broadcasts a_2^a_3 if x_2 = x_3 = 1 and
/// a_2^b_3 otherwise; players 2 and 3 act under the cyclic shift 1->2->3->1
/// of that rule.  Output is 1 iff the three broadcast bits XOR to 0.
///
/// The shift convention lives entirely in this constructor; swapping in a
/// different reading of "the other players behave analogously" means editing
/// only the three message lambdas here.
ProtocolTree xorForeheadProtocol();

/// View of an extended (input x randomness) protocol through uniform forehead
/// randomness: per original input x in {0,1}^3, the transcript distribution
/// marginalized over all 64 assignments of (a_1..a_3, b_1..b_3), plus the
/// resulting acceptance probability Pr[output = 1].
struct ForeheadMarginal {
  DistributionFamily transcripts;  // indexed by x, lexicographic
  Eigen::ArrayXd acceptance;
};

ForeheadMarginal xorForeheadMarginal(const ProtocolTree& extended);

/// Worst-case error of the extended protocol against AND_3 on the original
/// inputs, with the randomness marginalized out.
double xorMarginalErrorVsAnd(const ProtocolTree& extended);

/// I(X; transcript) with X drawn from `zeta` over the original inputs and
/// the transcript marginalized over forehead randomness; the report holds iff
/// the protocol reveals nothing (information at most 1e-12).  Throws if zeta
/// puts mass on the all-ones input.
InequalityReport zeroInformationCheck(const ProtocolTree& extended,
                                      const FiniteDistribution& zeta);

}  // namespace hvol
