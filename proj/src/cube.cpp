#include "hvol/cube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hvol {

CubeIndex::CubeIndex(int players) : players_(players) {
  if (players < 2 || players > 24) {
    throw std::invalid_argument("player count must be in [2, 24]");
  }
}

int CubeIndex::bit(int input, int player) const {
  return (input >> (players_ - 1 - player)) & 1;
}

int CubeIndex::zeroCount(int input) const {
  const unsigned ones = static_cast<unsigned>(input) & ((1u << players_) - 1);
  return players_ - std::popcount(ones);
}

std::string CubeIndex::label(int input) const {
  std::string s(players_, '0');
  for (int j = 0; j < players_; ++j) {
    s[j] = bit(input, j) ? '1' : '0';
  }
  return s;
}

std::vector<int> CubeIndex::bitZeroSubset(int player) const {
  if (player < 0 || player >= players_) {
    throw std::invalid_argument("player out of range");
  }
  std::vector<int> set;
  set.reserve(size() / 2);
  for (int z = 0; z < size(); ++z) {
    if (bit(z, player) == 0) {
      set.push_back(z);
    }
  }
  return set;
}

std::vector<int> CubeIndex::oddZeroSubset(std::span<const int> coords) const {
  if (coords.empty()) {
    throw std::invalid_argument("coordinate set must be nonempty");
  }
  for (int j : coords) {
    if (j < 0 || j >= players_) {
      throw std::invalid_argument("coordinate out of range");
    }
  }
  std::vector<int> set;
  for (int z = 0; z < size(); ++z) {
    int zeros = 0;
    for (int j : coords) {
      zeros += 1 - bit(z, j);
    }
    if (zeros % 2 == 1) {
      set.push_back(z);
    }
  }
  return set;
}

std::vector<int> CubeIndex::oddZeroInputs() const {
  std::vector<int> set;
  set.reserve(size() / 2);
  for (int z = 0; z < size(); ++z) {
    if (zeroCount(z) % 2 == 1) {
      set.push_back(z);
    }
  }
  return set;
}

std::vector<int> CubeIndex::evenZeroInputs() const {
  std::vector<int> set;
  set.reserve(size() / 2);
  for (int z = 0; z < size(); ++z) {
    if (zeroCount(z) % 2 == 0) {
      set.push_back(z);
    }
  }
  return set;
}

std::vector<int> CubeIndex::symmetricDifference(std::span<const int> a,
                                                std::span<const int> b) {
  std::vector<int> result;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(result));
  return result;
}

}  // namespace hvol
