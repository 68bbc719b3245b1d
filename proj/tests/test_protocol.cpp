#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hvol/andk.hpp"
#include "hvol/cube.hpp"
#include "hvol/hellinger.hpp"
#include "hvol/info.hpp"
#include "hvol/protocol.hpp"
#include "hvol/rng.hpp"
#include "hvol/sampling.hpp"

using hvol::FiniteDistribution;
using hvol::InputSpace;
using hvol::ProtocolTree;
using Node = hvol::ProtocolTree::Node;

namespace {

// Single broadcast by player `speaker` with the given rule, leaves 0 / 1.
ProtocolTree oneBitProtocol(InputSpace space, int speaker,
                            std::vector<double> rule) {
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::leaf(1));
  nodes.push_back(Node::internal(speaker, std::move(rule), 0, 1));
  return ProtocolTree(std::move(space), std::move(nodes), 2);
}

}  // namespace

TEST_CASE("input space enumeration is lexicographic") {
  const InputSpace space({2, 3, 2});
  CHECK(space.count() == 12);
  CHECK(space.tuple(0) == std::vector<int>{0, 0, 0});
  CHECK(space.tuple(1) == std::vector<int>{0, 0, 1});
  CHECK(space.tuple(2) == std::vector<int>{0, 1, 0});
  CHECK(space.tuple(11) == std::vector<int>{1, 2, 1});
  for (std::int64_t z = 0; z < space.count(); ++z) {
    CHECK(space.index(space.tuple(z)) == z);
  }
  CHECK(space.tupleLabel(5) == "0,2,1");
  const std::vector<int> bad = {0, 3, 0};
  CHECK_THROWS_AS(space.index(bad), std::invalid_argument);
  const std::vector<int> shortTuple = {0, 1};
  CHECK_THROWS_AS(space.index(shortTuple), std::invalid_argument);
}

TEST_CASE("visible views drop exactly the speaker's coordinate") {
  const InputSpace space({2, 3, 2});
  for (std::int64_t z = 0; z < space.count(); ++z) {
    const std::vector<int> t = space.tuple(z);
    for (int j = 0; j < 3; ++j) {
      std::vector<int> reduced;
      for (int i = 0; i < 3; ++i) {
        if (i != j) {
          reduced.push_back(t[i]);
        }
      }
      CHECK(space.visibleIndex(z, j) ==
            space.visibleIndexOfReduced(reduced, j));
    }
    // Two inputs differing only in coordinate j share the view z^{-j}.
  }
  CHECK(space.visibleCount(1) == 4);
  CHECK(space.visibleLabel(space.visibleIndex(5, 1), 1) == "0,1");
}

TEST_CASE("a single leaf is a valid zero-cost protocol") {
  std::vector<Node> nodes = {Node::leaf(1)};
  const ProtocolTree tree(InputSpace::cube(2), std::move(nodes), 0);
  CHECK(hvol::communicationCost(tree) == 0);
  CHECK(tree.leafCount() == 1);
  const FiniteDistribution masses = hvol::transcriptMasses(tree, 0);
  CHECK(masses(0) == 1.0);
}

TEST_CASE("validation rejects out-of-range probabilities with diagnostics") {
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::leaf(1));
  nodes.push_back(Node::internal(0, {0.4, 1.3}, 0, 1));
  try {
    const ProtocolTree tree(InputSpace::cube(2), std::move(nodes), 2);
    FAIL("expected validation to throw");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("1.3") != std::string::npos);
    CHECK(what.find("view") != std::string::npos);
  }
}

TEST_CASE("validation rejects undersized message rules") {
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::leaf(1));
  nodes.push_back(Node::internal(0, {0.4}, 0, 1));  // needs 2 views
  CHECK_THROWS_AS(
      (ProtocolTree{InputSpace::cube(2), std::move(nodes), 2}),
      std::invalid_argument);
}

TEST_CASE("validation rejects shared subtrees") {
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::internal(0, {0.5, 0.5}, 0, 0));  // both edges to 0
  CHECK_THROWS_AS((ProtocolTree{InputSpace::cube(2), std::move(nodes), 1}),
                  std::invalid_argument);
}

TEST_CASE("the trivial AND protocol validates") {
  const ProtocolTree tree = hvol::trivialAndProtocol(3);
  CHECK_NOTHROW(hvol::validateProtocol(tree));
}

TEST_CASE("deterministic protocols give point-mass transcripts") {
  const ProtocolTree tree = hvol::trivialAndProtocol(3);
  for (std::int64_t z = 0; z < tree.space().count(); ++z) {
    const FiniteDistribution masses = hvol::transcriptMasses(tree, z);
    int support = 0;
    for (Eigen::Index w = 0; w < masses.size(); ++w) {
      if (masses(w) > 0.0) {
        ++support;
        CHECK(masses(w) == 1.0);
      }
    }
    CHECK(support == 1);
  }
}

TEST_CASE("a fair coin broadcast is uniform regardless of input") {
  const ProtocolTree tree =
      oneBitProtocol(InputSpace::cube(2), 0, {0.5, 0.5});
  for (std::int64_t z = 0; z < 4; ++z) {
    const FiniteDistribution masses = hvol::transcriptMasses(tree, z);
    CHECK(masses(0) == 0.5);
    CHECK(masses(1) == 0.5);
  }
}

TEST_CASE("depth-two transcript masses multiply along each path") {
  // Broadcast-one probabilities 0.7 at the root, 0.4 at both children;
  // leaves in path order carry (0.3*0.6, 0.3*0.4, 0.7*0.6, 0.7*0.4).
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));  // 00
  nodes.push_back(Node::leaf(0));  // 01
  nodes.push_back(Node::internal(1, {0.4, 0.4}, 0, 1));
  nodes.push_back(Node::leaf(1));  // 10
  nodes.push_back(Node::leaf(1));  // 11
  nodes.push_back(Node::internal(1, {0.4, 0.4}, 3, 4));
  nodes.push_back(Node::internal(0, {0.7, 0.7}, 2, 5));
  const ProtocolTree tree(InputSpace::cube(2), std::move(nodes), 6);
  const FiniteDistribution masses = hvol::transcriptMasses(tree, 0);
  const double expected[4] = {0.18, 0.12, 0.42, 0.28};
  for (int w = 0; w < 4; ++w) {
    CHECK(std::abs(masses(w) - expected[w]) <= 1e-12);
  }
  CHECK(tree.transcriptLabel(0) == "00");
  CHECK(tree.transcriptLabel(3) == "11");
}

TEST_CASE("transcript masses always sum to one") {
  hvol::Rng rng = hvol::trialRng(51, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<int>(hvol::nextInt(rng, 2, 4));
    const ProtocolTree tree = hvol::randomProtocol(rng, k, 8);
    for (std::int64_t z = 0; z < tree.space().count(); ++z) {
      CHECK(std::abs(hvol::transcriptMasses(tree, z).mass().sum() - 1.0) <=
            1e-12);
    }
  }
}

TEST_CASE("constant protocols give identical transcript families") {
  const ProtocolTree tree =
      oneBitProtocol(InputSpace::cube(2), 0, {0.25, 0.25});
  const hvol::DistributionFamily family = hvol::transcriptFamily(tree);
  for (Eigen::Index z = 1; z < family.members(); ++z) {
    CHECK(((family.matrix().row(z) - family.matrix().row(0)).cwiseAbs()
               .maxCoeff()) == 0.0);
  }
}

TEST_CASE("announcing the other player's bit depends only on that bit") {
  // Player 1 broadcasts z_2.  Views of player 0 over the cube: (z_2) in
  // {0, 1}, so the rule is the identity on the view.
  const ProtocolTree tree =
      oneBitProtocol(InputSpace::cube(2), 0, {0.0, 1.0});
  const hvol::DistributionFamily family = hvol::transcriptFamily(tree);
  // Inputs 00, 01, 10, 11: transcript depends on z_2 only.
  CHECK(family.matrix()(0, 0) == 1.0);  // z = 00 -> broadcast 0
  CHECK(family.matrix()(2, 0) == 1.0);  // z = 10 -> broadcast 0
  CHECK(family.matrix()(1, 1) == 1.0);  // z = 01 -> broadcast 1
  CHECK(family.matrix()(3, 1) == 1.0);  // z = 11 -> broadcast 1
}

TEST_CASE("random k=3 protocols produce eight members over the leaf set") {
  hvol::Rng rng = hvol::trialRng(52, 0);
  const ProtocolTree tree = hvol::randomProtocol(rng, 3, 4);
  const hvol::DistributionFamily family = hvol::transcriptFamily(tree);
  CHECK(family.members() == 8);
  CHECK(family.outcomes() == tree.leafCount());
  CHECK(tree.leafCount() <= 16);
}

TEST_CASE("factorization: a lone speaker carries the whole product") {
  const ProtocolTree tree =
      oneBitProtocol(InputSpace::cube(3), 0, {0.2, 0.4, 0.6, 0.8});
  for (std::int64_t z = 0; z < tree.space().count(); ++z) {
    const hvol::Factorization f = hvol::factorize(tree, z);
    const FiniteDistribution masses = hvol::transcriptMasses(tree, z);
    for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
      CHECK(f.factors(0, leaf) == masses(leaf));
      CHECK(f.factors(1, leaf) == 1.0);
      CHECK(f.factors(2, leaf) == 1.0);
    }
  }
}

TEST_CASE("factorization of deterministic protocols is zero-one valued") {
  const ProtocolTree tree = hvol::trivialAndProtocol(3);
  for (std::int64_t z = 0; z < tree.space().count(); ++z) {
    const hvol::Factorization f = hvol::factorize(tree, z);
    for (Eigen::Index j = 0; j < f.factors.rows(); ++j) {
      for (Eigen::Index w = 0; w < f.factors.cols(); ++w) {
        const double q = f.factors(j, w);
        CHECK((q == 0.0 || q == 1.0));
      }
    }
  }
}

TEST_CASE("factorization product identity on random protocols") {
  hvol::Rng rng = hvol::trialRng(53, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = static_cast<int>(hvol::nextInt(rng, 2, 4));
    const ProtocolTree tree = hvol::randomProtocol(rng, k, 6);
    for (std::int64_t z = 0; z < tree.space().count(); ++z) {
      CHECK(hvol::factorizationMaxError(tree, z) <= 1e-12);
    }
  }
}

TEST_CASE("communication cost is the maximum leaf depth") {
  std::vector<Node> nodes = {Node::leaf(0)};
  const ProtocolTree leafOnly(InputSpace::cube(2), std::move(nodes), 0);
  CHECK(hvol::communicationCost(leafOnly) == 0);

  hvol::Rng rng = hvol::trialRng(54, 0);
  const ProtocolTree full = hvol::randomProtocol(rng, 2, 3, 0.0);
  CHECK(hvol::communicationCost(full) == 3);

  for (int k = 2; k <= 5; ++k) {
    CHECK(hvol::communicationCost(hvol::trivialAndProtocol(k)) <= k);
  }
}

TEST_CASE("error probability of exact and constant protocols") {
  const std::vector<int> truth = hvol::andTruthTable(3);
  CHECK(hvol::errorProbability(hvol::trivialAndProtocol(3), truth) == 0.0);

  std::vector<Node> nodes = {Node::leaf(1)};
  const ProtocolTree constant(InputSpace::cube(3), std::move(nodes), 0);
  CHECK(hvol::errorProbability(constant, truth) == 1.0);

  const std::vector<int> wrongSize(4, 0);
  CHECK_THROWS_AS(hvol::errorProbability(constant, wrongSize),
                  std::invalid_argument);
}

TEST_CASE("information cost of constant and identity protocols") {
  const ProtocolTree constant =
      oneBitProtocol(InputSpace::cube(2), 0, {0.5, 0.5});
  CHECK(std::abs(hvol::informationCost(
            constant, FiniteDistribution::uniform(4))) <= 1e-12);

  // Both players announce the other's bit: the transcript determines z, so
  // the cost is log2(4) = 2 bits under the uniform prior.
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::leaf(0));
  nodes.push_back(Node::internal(1, {0.0, 1.0}, 0, 1));
  nodes.push_back(Node::leaf(1));
  nodes.push_back(Node::leaf(1));
  nodes.push_back(Node::internal(1, {0.0, 1.0}, 3, 4));
  nodes.push_back(Node::internal(0, {0.0, 1.0}, 2, 5));
  const ProtocolTree identity(InputSpace::cube(2), std::move(nodes), 6);
  CHECK(hvol::informationCost(identity, FiniteDistribution::uniform(4)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("information cost of the trivial AND_3 protocol under zeta_1") {
  const ProtocolTree tree = hvol::trivialAndProtocol(3);
  const std::vector<FiniteDistribution> eta = hvol::etaCollection(3);
  CHECK(hvol::informationCost(tree, eta[0]) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));  // H(1/4)
  CHECK(std::abs(hvol::informationCost(tree, eta[1])) <= 1e-12);
  CHECK(std::abs(hvol::informationCost(tree, eta[2])) <= 1e-12);
}

TEST_CASE("average information cost over a collection") {
  const ProtocolTree two = hvol::trivialAndProtocol(2);
  const std::vector<FiniteDistribution> etaTwo = hvol::etaCollection(2);
  CHECK(hvol::informationCostEta(two, etaTwo) ==
        doctest::Approx(0.5).epsilon(1e-12));

  const ProtocolTree three = hvol::trivialAndProtocol(3);
  const std::vector<FiniteDistribution> etaThree = hvol::etaCollection(3);
  CHECK(hvol::informationCostEta(three, etaThree) ==
        doctest::Approx(0.2704260414863776).epsilon(1e-12));

  const ProtocolTree constant =
      oneBitProtocol(InputSpace::cube(2), 0, {0.5, 0.5});
  CHECK(std::abs(hvol::informationCostEta(constant, etaTwo)) <= 1e-12);
}

TEST_CASE("information cost never exceeds communication cost") {
  hvol::Rng rng = hvol::trialRng(55, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<int>(hvol::nextInt(rng, 2, 4));
    const ProtocolTree tree = hvol::randomProtocol(rng, k, 8);
    const double ic = hvol::informationCost(
        tree, FiniteDistribution::uniform(tree.space().count()));
    CHECK(ic <= hvol::communicationCost(tree) + 1e-9);
    CHECK(ic >= -1e-12);
  }
}

TEST_CASE("cut-and-paste equality") {
  const ProtocolTree constant =
      oneBitProtocol(InputSpace::cube(2), 0, {0.5, 0.5});
  const auto flat = hvol::checkCutAndPaste(constant, 1e-9);
  CHECK(flat.holds);
  CHECK(flat.lhs == 0.0);
  CHECK(flat.rhs == 0.0);

  hvol::Rng rng = hvol::trialRng(56, 0);
  // Deterministic k = 2 corpus: all 16 rule combinations of two one-bit
  // announcements plus random deterministic deeper trees.
  for (int trial = 0; trial < 100; ++trial) {
    ProtocolTree tree = hvol::randomProtocol(rng, 2, 5);
    std::vector<Node> rounded;
    for (int i = 0; i < tree.nodeCount(); ++i) {
      Node node = tree.node(i);
      for (double& p : node.pOne) {
        p = p < 0.5 ? 0.0 : 1.0;
      }
      rounded.push_back(std::move(node));
    }
    const ProtocolTree deterministic(tree.space(), std::move(rounded),
                                     tree.root());
    const auto report = hvol::checkCutAndPaste(deterministic, 1e-12);
    CHECK(report.holds);
  }

  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<int>(hvol::nextInt(rng, 2, 4));
    const ProtocolTree tree = hvol::randomProtocol(rng, k, 8);
    CHECK(hvol::checkCutAndPaste(tree, 1e-9).holds);
  }

  const InputSpace nonCube({2, 3});
  const ProtocolTree odd = oneBitProtocol(nonCube, 0, {0.5, 0.5, 0.5});
  CHECK_THROWS_AS(hvol::checkCutAndPaste(odd, 1e-9), std::invalid_argument);
}

TEST_CASE("oversized enumerations are rejected") {
  // 17 transcripts x 2^20 inputs crosses the 2^24 guardrail.
  const InputSpace space({1024, 1024});
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(0));
  int below = 0;
  for (int depth = 0; depth < 16; ++depth) {
    nodes.push_back(Node::leaf(1));
    const int leaf = static_cast<int>(nodes.size()) - 1;
    nodes.push_back(Node::internal(
        0, std::vector<double>(1024, 0.5), below, leaf));
    below = static_cast<int>(nodes.size()) - 1;
  }
  const ProtocolTree chain(space, std::move(nodes), below);
  CHECK(chain.leafCount() == 17);
  CHECK_THROWS_AS(hvol::transcriptFamily(chain), std::invalid_argument);
  CHECK_THROWS_AS(
      hvol::informationCost(chain,
                            FiniteDistribution::uniform(space.count())),
      std::invalid_argument);
  // Single-input queries stay within the budget.
  CHECK_NOTHROW(hvol::transcriptMasses(chain, 0));
}

TEST_CASE("volume inequalities hold on protocol transcript families") {
  hvol::Rng rng = hvol::trialRng(58, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = static_cast<int>(hvol::nextInt(rng, 2, 4));
    const ProtocolTree tree = hvol::randomProtocol(rng, k, 8);
    const hvol::DistributionFamily family = hvol::transcriptFamily(tree);
    CHECK(hvol::checkMutualInfoLowerBound(family, 1e-9).holds);
    const hvol::CubeIndex cube(k);
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      all[static_cast<std::size_t>(j)] = j;
    }
    CHECK(hvol::checkSubsetTreeBound(family, cube, all, 1e-9).holds);
  }
}

TEST_CASE("random protocols are reproducible from their seed") {
  hvol::Rng a = hvol::trialRng(57, 3);
  hvol::Rng b = hvol::trialRng(57, 3);
  const ProtocolTree first = hvol::randomProtocol(a, 3, 6);
  const ProtocolTree second = hvol::randomProtocol(b, 3, 6);
  REQUIRE(first.nodeCount() == second.nodeCount());
  const hvol::DistributionFamily fa = hvol::transcriptFamily(first);
  const hvol::DistributionFamily fb = hvol::transcriptFamily(second);
  CHECK((fa.matrix() - fb.matrix()).cwiseAbs().maxCoeff() == 0.0);
}
