#include "hvol/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hvol {

FiniteDistribution randomDistribution(Rng& rng, Eigen::Index outcomes) {
  if (outcomes < 1) {
    throw std::invalid_argument("need at least one outcome");
  }
  Eigen::ArrayXd mass(outcomes);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < outcomes; ++i) {
    mass(i) = nextUnit(rng);
    sum += mass(i);
  }
  if (sum <= 0.0) {
    return FiniteDistribution::uniform(outcomes);  // astronomically unlikely
  }
  return FiniteDistribution(mass / sum);
}

DistributionFamily randomFamily(Rng& rng, Eigen::Index members,
                                Eigen::Index outcomes) {
  Eigen::MatrixXd matrix(members, outcomes);
  for (Eigen::Index z = 0; z < members; ++z) {
    matrix.row(z) = randomDistribution(rng, outcomes).mass().matrix();
  }
  return DistributionFamily({}, std::move(matrix));
}

ProtocolTree randomProtocol(Rng& rng, int players, int maxDepth,
                            double leafChance) {
  const InputSpace space = InputSpace::cube(players);
  std::vector<ProtocolTree::Node> nodes;
  auto build = [&](auto&& self, int depth) -> int {
    const bool leaf =
        depth >= maxDepth || (depth > 0 && nextUnit(rng) < leafChance);
    if (leaf) {
      nodes.push_back(ProtocolTree::Node::leaf(nextBit(rng) ? 1 : 0));
    } else {
      const int speaker = static_cast<int>(nextInt(rng, 0, players - 1));
      std::vector<double> rule(
          static_cast<std::size_t>(space.visibleCount(speaker)));
      for (double& p : rule) {
        p = nextUnit(rng);
      }
      const int zero = self(self, depth + 1);
      const int one = self(self, depth + 1);
      nodes.push_back(
          ProtocolTree::Node::internal(speaker, std::move(rule), zero, one));
    }
    return static_cast<int>(nodes.size()) - 1;
  };
  const int root = build(build, 0);
  return ProtocolTree(space, std::move(nodes), root);
}

ProtocolTree perturbProtocol(Rng& rng, const ProtocolTree& tree,
                             double amplitude) {
  std::vector<ProtocolTree::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(tree.nodeCount()));
  for (int i = 0; i < tree.nodeCount(); ++i) {
    ProtocolTree::Node node = tree.node(i);
    for (double& p : node.pOne) {
      p = std::clamp(p + amplitude * (2.0 * nextUnit(rng) - 1.0), 0.0, 1.0);
    }
    nodes.push_back(std::move(node));
  }
  return ProtocolTree(tree.space(), std::move(nodes), tree.root());
}

}  // namespace hvol
