#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hvol/distribution.hpp"
#include "hvol/family.hpp"
#include "hvol/report.hpp"

namespace hvol {

/// Input tuples z = (z_1..z_k) for k players with per-player alphabets.
/// Tuples are enumerated lexicographically, player 1 most significant.
class InputSpace {
 public:
  explicit InputSpace(std::vector<int> alphabets);

  static InputSpace cube(int players);  // all alphabets of size 2

  int players() const { return static_cast<int>(alphabets_.size()); }
  int alphabet(int player) const { return alphabets_[player]; }
  const std::vector<int>& alphabets() const { return alphabets_; }
  bool isCube() const;

  std::int64_t count() const { return count_; }

  std::vector<int> tuple(std::int64_t index) const;
  std::int64_t index(std::span<const int> tuple) const;
  std::string tupleLabel(std::int64_t index) const;  // "z_1,z_2,...,z_k"

  /// Number of distinct views z^{-j} of player j.
  std::int64_t visibleCount(int player) const;

  /// Index of the view z^{-j} within the reduced space, enumerated in player
  /// order with player j skipped.
  std::int64_t visibleIndex(std::int64_t input, int player) const;

  /// Same index computed from the reduced tuple itself (k - 1 symbols in
  /// player order, player j skipped).
  std::int64_t visibleIndexOfReduced(std::span<const int> reduced,
                                     int player) const;

  std::string visibleLabel(std::int64_t visibleIdx, int player) const;

 private:
  std::vector<int> alphabets_;
  std::vector<std::int64_t> strides_;
  std::int64_t count_ = 0;
};

/// A k-player private-coin number-on-the-forehead protocol as a rooted binary
/// tree.  Each internal node names the speaking player j and carries, for
/// every view z^{-j} the speaker can see, the probability of broadcasting
/// bit 1.  A transcript is the full root-to-leaf bit string; the protocol's
/// output is a bit attached to the leaf.  Message rules can only depend on
/// the view by construction, since a rule's domain is the reduced tuple.
///
/// Trees are validated on construction and immutable afterwards, so every
/// operation below is a pure function safe to call concurrently.
class ProtocolTree {
 public:
  struct Node {
    int speaker = -1;           // -1 marks a leaf
    std::vector<double> pOne;   // indexed by visibleIndex(z, speaker)
    int zero = -1;              // child after broadcasting 0
    int one = -1;               // child after broadcasting 1
    int output = -1;            // leaf output bit

    bool isLeaf() const { return speaker < 0; }
    static Node leaf(int output);
    static Node internal(int speaker, std::vector<double> pOne, int zero,
                         int one);
  };

  ProtocolTree(InputSpace space, std::vector<Node> nodes, int root = 0);

  const InputSpace& space() const { return space_; }
  int root() const { return root_; }
  int nodeCount() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }

  int leafCount() const { return static_cast<int>(leaves_.size()); }
  const std::vector<int>& leaves() const { return leaves_; }  // DFS order
  int leafDepth(int leafPos) const { return leafDepths_[leafPos]; }
  const std::string& transcriptLabel(int leafPos) const {
    return transcripts_[leafPos];
  }
  int depth() const { return depth_; }

  /// Path of leaf `leafPos` as (node id, broadcast bit) pairs, root first.
  const std::vector<std::pair<int, int>>& leafPath(int leafPos) const {
    return leafPaths_[leafPos];
  }

 private:
  InputSpace space_;
  std::vector<Node> nodes_;
  int root_;
  std::vector<int> leaves_;
  std::vector<int> leafDepths_;
  std::vector<std::string> transcripts_;
  std::vector<std::vector<std::pair<int, int>>> leafPaths_;
  int depth_ = 0;
};

/// The leaf transcripts of a protocol together with their distribution under
/// one fixed input.
struct TranscriptDistribution {
  std::vector<std::string> transcripts;  // in DFS leaf order
  FiniteDistribution dist;
};

/// Per-player factorization of a transcript distribution: factors(j, w) is
/// q_j(w; z^{-j}), the product over path nodes spoken by player j of the
/// chosen-bit probability.  The row-wise product over all players reproduces
/// Pr[transcript = w] exactly.
struct Factorization {
  Eigen::MatrixXd factors;  // players x leaves
};

/// Checks all structural invariants and that every node's message rule covers
/// every visible view with a probability in [0,1].  Throws with a diagnostic
/// naming the offending node and view.  Construction already runs this; the
/// free function exists for protocols arriving from files or foreign code.
void validateProtocol(const ProtocolTree& tree);

/// Exact leaf-mass vector of the transcript on input `input`: the product of
/// conditional bit probabilities along each root-to-leaf path.
FiniteDistribution transcriptMasses(const ProtocolTree& tree,
                                    std::int64_t input);

TranscriptDistribution transcriptDistribution(const ProtocolTree& tree,
                                              std::int64_t input);

/// The collection {P_z} over all inputs z.  Rejects enumerations with
/// leafCount * inputCount > 2^24.
DistributionFamily transcriptFamily(const ProtocolTree& tree);

Factorization factorize(const ProtocolTree& tree, std::int64_t input);

/// Largest deviation |prod_j q_j(w; z^{-j}) - Pr[transcript = w]| over all
/// transcripts, for one input.
double factorizationMaxError(const ProtocolTree& tree, std::int64_t input);

/// Communication cost: maximum transcript length in bits.
int communicationCost(const ProtocolTree& tree);

/// Worst-case error against a truth table defined on every input:
/// max_z Pr[output != truth(z)].
double errorProbability(const ProtocolTree& tree, std::span<const int> truth);

/// Information cost I(Z; transcript) in bits with Z drawn from `inputDist`.
double informationCost(const ProtocolTree& tree,
                       const FiniteDistribution& inputDist);

/// Average information cost over a collection of input distributions.
double informationCostEta(const ProtocolTree& tree,
                          std::span<const FiniteDistribution> collection);

/// Cut-and-paste equality for protocol transcript families over {0,1}^k:
/// psi(I_OZ) = psi(I_EZ).  This is an equality report, not an inequality.
InequalityReport checkCutAndPaste(const ProtocolTree& tree, double tolerance);

}  // namespace hvol
