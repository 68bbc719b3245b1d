#pragma once

#include <span>
#include <string>
#include <vector>

namespace hvol {

/// Combinatorics of the Boolean cube {0,1}^k for k players.
///
/// Inputs are enumerated lexicographically with player 1's bit most
/// significant, so input index i encodes bit(i, j) = (i >> (k-1-j)) & 1 for
/// 0-based player j.  The derived subsets below are what the volume
/// inequalities quantify over.
class CubeIndex {
 public:
  explicit CubeIndex(int players);

  int players() const { return players_; }
  int size() const { return 1 << players_; }

  /// z_j of the input with the given index (players 0-based).
  int bit(int input, int player) const;
  int zeroCount(int input) const;
  std::string label(int input) const;  // e.g. "011" for k = 3

  /// Inputs whose j-th coordinate is zero (0-based player).
  std::vector<int> bitZeroSubset(int player) const;

  /// Inputs with an odd number of zeros among the given coordinates.
  std::vector<int> oddZeroSubset(std::span<const int> coords) const;

  std::vector<int> oddZeroInputs() const;   // odd number of zeros overall
  std::vector<int> evenZeroInputs() const;  // complement of the above

  int allOnesInput() const { return size() - 1; }

  /// Symmetric difference of two sorted index sets.
  static std::vector<int> symmetricDifference(std::span<const int> a,
                                              std::span<const int> b);

 private:
  int players_;
};

}  // namespace hvol
