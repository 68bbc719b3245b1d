#include "hvol/andk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hvol/cube.hpp"
#include "hvol/hellinger.hpp"
#include "hvol/info.hpp"

namespace hvol {

namespace {

void requirePlayers(int players) {
  if (players < 2) {
    throw std::invalid_argument("AND_k needs at least 2 players");
  }
}

}  // namespace

std::vector<int> andTruthTable(int players) {
  requirePlayers(players);
  std::vector<int> truth(static_cast<std::size_t>(1) << players, 0);
  truth.back() = 1;  // all-ones is the last input in lexicographic order
  return truth;
}

std::vector<FiniteDistribution> etaCollection(int players) {
  requirePlayers(players);
  const CubeIndex cube(players);
  std::vector<FiniteDistribution> collection;
  collection.reserve(static_cast<std::size_t>(players));
  for (int j = 0; j < players; ++j) {
    Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(cube.size());
    for (int z : cube.bitZeroSubset(j)) {
      mass(z) = 1.0;
    }
    mass /= static_cast<double>(cube.size() / 2);
    collection.emplace_back(std::move(mass));
  }
  return collection;
}

double andLowerBound(int players, double delta) {
  requirePlayers(players);
  if (!(delta >= 0.0)) {
    throw std::invalid_argument("delta must be nonnegative");
  }
  if (delta >= 0.5) {
    std::ostringstream msg;
    msg << "lower bound degenerates at delta = " << delta << " >= 1/2";
    throw std::domain_error(msg.str());
  }
  const double shrink = 1.0 - 2.0 * std::sqrt(delta * (1.0 - delta));
  const double denom = static_cast<double>(players) *
                       static_cast<double>(players) *
                       std::ldexp(1.0, 2 * (players - 1));
  return std::numbers::log2e * shrink / denom;
}

double andUpperBound(int players) {
  requirePlayers(players);
  const double q = std::ldexp(1.0, -(players - 1));
  const double binaryEntropy =
      q * static_cast<double>(players - 1) - (1.0 - q) * std::log2(1.0 - q);
  return binaryEntropy / static_cast<double>(players);
}

ProtocolTree trivialAndProtocol(int players) {
  requirePlayers(players);
  const InputSpace space = InputSpace::cube(players);
  std::vector<ProtocolTree::Node> nodes;

  // Player j's bit is deterministic: 1 exactly when some visible coordinate
  // is 0, i.e. for every view except the all-ones one (the last view in
  // lexicographic order).
  auto seeAZeroRule = [&](int speaker) {
    std::vector<double> rule(
        static_cast<std::size_t>(space.visibleCount(speaker)), 1.0);
    rule.back() = 0.0;
    return rule;
  };

  // Chain: a "zero" broadcast hands off to the next player; the first "one"
  // broadcast ends with output 0, and the all-zero path ends with output 1.
  nodes.push_back(ProtocolTree::Node::leaf(1));
  int nextOnZero = 0;
  for (int j = players - 1; j >= 0; --j) {
    nodes.push_back(ProtocolTree::Node::leaf(0));
    const int rejectLeaf = static_cast<int>(nodes.size()) - 1;
    nodes.push_back(ProtocolTree::Node::internal(j, seeAZeroRule(j),
                                                 nextOnZero, rejectLeaf));
    nextOnZero = static_cast<int>(nodes.size()) - 1;
  }
  return ProtocolTree(space, std::move(nodes), nextOnZero);
}

bool ChainReport::allHold() const {
  const bool info = std::all_of(infoLinks.begin(), infoLinks.end(),
                                [](const InequalityReport& r) {
                                  return r.holds;
                                });
  return info && treeLink.holds && pasteLink.holds && floorLink.holds &&
         finalLink.holds;
}

ChainReport verifyLowerBoundChain(const ProtocolTree& tree, double tolerance) {
  if (!tree.space().isCube()) {
    throw std::invalid_argument("the chain applies to protocols over {0,1}^k");
  }
  const int k = tree.space().players();
  const CubeIndex cube(k);

  ChainReport chain;
  chain.players = k;
  chain.delta = errorProbability(tree, andTruthTable(k));
  if (chain.delta >= 0.5) {
    std::ostringstream msg;
    msg << "protocol has worst-case error " << chain.delta
        << " >= 1/2; the volume floor has no certificate";
    throw std::domain_error(msg.str());
  }

  const DistributionFamily family = transcriptFamily(tree);
  const std::vector<FiniteDistribution> eta = etaCollection(k);
  chain.icEta = informationCostEta(tree, eta);

  const double leafScale = std::ldexp(1.0, k - 1);  // 2^(k-1)
  double coordinateSum = 0.0;
  for (int j = 0; j < k; ++j) {
    const double volume = hellingerVolume(family, cube.bitZeroSubset(j));
    chain.coordinateVolume.push_back(volume);
    coordinateSum += volume;
    chain.infoLinks.push_back(
        makeGeReport("info_vs_volume_p" + std::to_string(j + 1),
                     informationCost(tree, eta[j]),
                     volume / (leafScale * std::numbers::ln2), tolerance));
  }

  chain.oddVolume = hellingerVolume(family, cube.oddZeroInputs());
  chain.evenVolume = hellingerVolume(family, cube.evenZeroInputs());
  chain.treeLink = makeGeReport(
      "volume_tree", coordinateSum,
      chain.oddVolume / static_cast<double>(
                            1 << ceilLog2(static_cast<unsigned>(k))),
      tolerance);
  chain.pasteLink =
      makeEqReport("cut_and_paste", chain.oddVolume, chain.evenVolume,
                   tolerance);

  // Volume floor with A = I_EZ, t = 2^(k-1), T = accepting transcripts and
  // v the all-ones input; delta is the protocol's exact worst-case error.
  std::vector<int> accepting;
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    if (tree.node(tree.leaves()[leaf]).output == 1) {
      accepting.push_back(leaf);
    }
  }
  chain.floorLink = checkEventSeparationBound(
      family, cube.evenZeroInputs(), accepting, cube.allOnesInput(),
      chain.delta, tolerance);
  chain.floorLink.name = "volume_floor";

  chain.finalLink = makeGeReport("ic_eta_vs_bound", chain.icEta,
                                 andLowerBound(k, chain.delta), tolerance);

  if (!chain.finalLink.holds &&
      std::all_of(chain.infoLinks.begin(), chain.infoLinks.end(),
                  [](const InequalityReport& r) { return r.holds; }) &&
      chain.treeLink.holds && chain.pasteLink.holds &&
      chain.floorLink.holds) {
    throw std::logic_error(
        "every chain link holds but the final bound fails; the links imply "
        "the bound, so a computation is inconsistent");
  }
  return chain;
}

namespace {

constexpr int kXorPlayers = 3;
constexpr int kXorAlphabet = 8;  // symbol = x * 4 + a * 2 + b

int symX(int s) { return s >> 2; }
int symA(int s) { return (s >> 1) & 1; }
int symB(int s) { return s & 1; }

}  // namespace

ProtocolTree xorForeheadProtocol() {
  const InputSpace space(std::vector<int>(kXorPlayers, kXorAlphabet));

  // Message rules; (first, second) are the visible symbols in player order.
  // Player 1 sees (s2, s3), player 2 sees (s1, s3), player 3 sees (s1, s2).
  // The cyclic-shift reading of the protocol: player 1 sends a2^a3 when
  // x2 = x3 = 1 and a2^b3 otherwise; player 2 sends a3^a1 / a3^b1 on
  // x3 = x1 = 1; player 3 sends a1^a2 / a1^b2 on x1 = x2 = 1.
  const auto rules = std::vector<int (*)(int, int)>{
      [](int s2, int s3) {
        return (symX(s2) & symX(s3)) ? symA(s2) ^ symA(s3)
                                     : symA(s2) ^ symB(s3);
      },
      [](int s1, int s3) {
        return (symX(s3) & symX(s1)) ? symA(s3) ^ symA(s1)
                                     : symA(s3) ^ symB(s1);
      },
      [](int s1, int s2) {
        return (symX(s1) & symX(s2)) ? symA(s1) ^ symA(s2)
                                     : symA(s1) ^ symB(s2);
      }};

  std::vector<std::vector<double>> ruleTables;
  for (int j = 0; j < kXorPlayers; ++j) {
    std::vector<double> table(
        static_cast<std::size_t>(space.visibleCount(j)));
    for (int first = 0; first < kXorAlphabet; ++first) {
      for (int second = 0; second < kXorAlphabet; ++second) {
        table[static_cast<std::size_t>(first * kXorAlphabet + second)] =
            static_cast<double>(rules[j](first, second));
      }
    }
    ruleTables.push_back(std::move(table));
  }

  std::vector<ProtocolTree::Node> nodes;
  auto build = [&](auto&& self, int depth, int parity) -> int {
    if (depth == kXorPlayers) {
      nodes.push_back(ProtocolTree::Node::leaf(parity == 0 ? 1 : 0));
    } else {
      const int zero = self(self, depth + 1, parity);
      const int one = self(self, depth + 1, parity ^ 1);
      nodes.push_back(ProtocolTree::Node::internal(depth, ruleTables[depth],
                                                   zero, one));
    }
    return static_cast<int>(nodes.size()) - 1;
  };
  const int root = build(build, 0, 0);
  return ProtocolTree(space, std::move(nodes), root);
}

ForeheadMarginal xorForeheadMarginal(const ProtocolTree& extended) {
  if (extended.space().players() != kXorPlayers ||
      extended.space().alphabets() !=
          std::vector<int>(kXorPlayers, kXorAlphabet)) {
    throw std::invalid_argument(
        "expected a 3-player protocol over (input x 2 random bits) symbols");
  }
  const CubeIndex cube(kXorPlayers);
  Eigen::MatrixXd members =
      Eigen::MatrixXd::Zero(cube.size(), extended.leafCount());
  std::vector<std::string> labels;
  for (int x = 0; x < cube.size(); ++x) {
    labels.push_back(cube.label(x));
    for (int random = 0; random < 64; ++random) {
      std::vector<int> symbols(kXorPlayers);
      for (int j = 0; j < kXorPlayers; ++j) {
        const int a = (random >> (2 * j)) & 1;
        const int b = (random >> (2 * j + 1)) & 1;
        symbols[j] = cube.bit(x, j) * 4 + a * 2 + b;
      }
      members.row(x) +=
          transcriptMasses(extended, extended.space().index(symbols))
              .mass()
              .matrix()
              .transpose();
    }
    members.row(x) /= 64.0;
  }

  Eigen::ArrayXd acceptance = Eigen::ArrayXd::Zero(cube.size());
  for (int leaf = 0; leaf < extended.leafCount(); ++leaf) {
    if (extended.node(extended.leaves()[leaf]).output == 1) {
      acceptance += members.col(leaf).array();
    }
  }
  return {DistributionFamily(std::move(labels), std::move(members)),
          std::move(acceptance)};
}

double xorMarginalErrorVsAnd(const ProtocolTree& extended) {
  const ForeheadMarginal marginal = xorForeheadMarginal(extended);
  const CubeIndex cube(kXorPlayers);
  double worst = 0.0;
  for (int x = 0; x < cube.size(); ++x) {
    const double wrong = x == cube.allOnesInput()
                             ? 1.0 - marginal.acceptance(x)
                             : marginal.acceptance(x);
    worst = std::max(worst, wrong);
  }
  return worst;
}

InequalityReport zeroInformationCheck(const ProtocolTree& extended,
                                      const FiniteDistribution& zeta) {
  const ForeheadMarginal marginal = xorForeheadMarginal(extended);
  const CubeIndex cube(kXorPlayers);
  if (zeta.size() != cube.size()) {
    throw std::invalid_argument(
        "zeta must be a distribution over the 8 original inputs");
  }
  if (zeta(cube.allOnesInput()) > 0.0) {
    throw std::invalid_argument(
        "zeta must be supported on the zeroes of AND_3");
  }
  Eigen::MatrixXd joint = marginal.transcripts.matrix();
  for (int x = 0; x < cube.size(); ++x) {
    joint.row(x) *= zeta(x);
  }
  const double info = mutualInformation(JointDistribution(std::move(joint)));
  return makeLeReport("zero_information", info, 0.0, 1e-12);
}

}  // namespace hvol
