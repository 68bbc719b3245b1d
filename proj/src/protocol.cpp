#include "hvol/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hvol/cube.hpp"
#include "hvol/hellinger.hpp"
#include "hvol/info.hpp"

namespace hvol {

namespace {

// Every transcript x input pair of an enumeration must fit this budget.
constexpr std::int64_t kEnumerationLimit = std::int64_t{1} << 24;

void checkEnumerationSize(const ProtocolTree& tree, const char* what) {
  const std::int64_t work =
      static_cast<std::int64_t>(tree.leafCount()) * tree.space().count();
  if (work > kEnumerationLimit) {
    std::ostringstream msg;
    msg << what << " would enumerate " << work
        << " (transcript, input) pairs; limit is " << kEnumerationLimit;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

InputSpace::InputSpace(std::vector<int> alphabets)
    : alphabets_(std::move(alphabets)) {
  if (alphabets_.size() < 2) {
    throw std::invalid_argument("need at least 2 players");
  }
  count_ = 1;
  for (int n : alphabets_) {
    if (n < 1) {
      throw std::invalid_argument("alphabet sizes must be positive");
    }
    if (count_ > kEnumerationLimit / n) {
      throw std::invalid_argument("input space too large to enumerate");
    }
    count_ *= n;
  }
  // Lexicographic enumeration: player 1 most significant.
  strides_.assign(alphabets_.size(), 1);
  for (int j = players() - 2; j >= 0; --j) {
    strides_[j] = strides_[j + 1] * alphabets_[j + 1];
  }
}

InputSpace InputSpace::cube(int players) {
  return InputSpace(std::vector<int>(static_cast<std::size_t>(players), 2));
}

bool InputSpace::isCube() const {
  return std::all_of(alphabets_.begin(), alphabets_.end(),
                     [](int n) { return n == 2; });
}

std::vector<int> InputSpace::tuple(std::int64_t index) const {
  if (index < 0 || index >= count_) {
    throw std::invalid_argument("input index out of range");
  }
  std::vector<int> t(alphabets_.size());
  for (int j = 0; j < players(); ++j) {
    t[j] = static_cast<int>((index / strides_[j]) % alphabets_[j]);
  }
  return t;
}

std::int64_t InputSpace::index(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != players()) {
    std::ostringstream msg;
    msg << "tuple has " << tuple.size() << " symbols, expected " << players();
    throw std::invalid_argument(msg.str());
  }
  std::int64_t idx = 0;
  for (int j = 0; j < players(); ++j) {
    if (tuple[j] < 0 || tuple[j] >= alphabets_[j]) {
      std::ostringstream msg;
      msg << "symbol " << tuple[j] << " out of range for player " << j + 1;
      throw std::invalid_argument(msg.str());
    }
    idx += tuple[j] * strides_[j];
  }
  return idx;
}

std::string InputSpace::tupleLabel(std::int64_t index) const {
  const std::vector<int> t = tuple(index);
  std::string label;
  for (int j = 0; j < players(); ++j) {
    if (j > 0) {
      label += ',';
    }
    label += std::to_string(t[j]);
  }
  return label;
}

std::int64_t InputSpace::visibleCount(int player) const {
  return count_ / alphabets_[player];
}

std::int64_t InputSpace::visibleIndex(std::int64_t input, int player) const {
  std::int64_t idx = 0;
  for (int j = 0; j < players(); ++j) {
    if (j == player) {
      continue;
    }
    idx = idx * alphabets_[j] +
          static_cast<int>((input / strides_[j]) % alphabets_[j]);
  }
  return idx;
}

std::int64_t InputSpace::visibleIndexOfReduced(std::span<const int> reduced,
                                               int player) const {
  if (static_cast<int>(reduced.size()) != players() - 1) {
    std::ostringstream msg;
    msg << "view has " << reduced.size() << " symbols, expected "
        << players() - 1;
    throw std::invalid_argument(msg.str());
  }
  std::int64_t idx = 0;
  std::size_t pos = 0;
  for (int j = 0; j < players(); ++j) {
    if (j == player) {
      continue;
    }
    const int symbol = reduced[pos++];
    if (symbol < 0 || symbol >= alphabets_[j]) {
      std::ostringstream msg;
      msg << "symbol " << symbol << " out of range for player " << j + 1;
      throw std::invalid_argument(msg.str());
    }
    idx = idx * alphabets_[j] + symbol;
  }
  return idx;
}

std::string InputSpace::visibleLabel(std::int64_t visibleIdx,
                                     int player) const {
  std::vector<int> symbols;
  for (int j = players() - 1; j >= 0; --j) {
    if (j == player) {
      continue;
    }
    symbols.push_back(static_cast<int>(visibleIdx % alphabets_[j]));
    visibleIdx /= alphabets_[j];
  }
  std::reverse(symbols.begin(), symbols.end());
  std::string label;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) {
      label += ',';
    }
    label += std::to_string(symbols[i]);
  }
  return label;
}

ProtocolTree::Node ProtocolTree::Node::leaf(int output) {
  Node n;
  n.output = output;
  return n;
}

ProtocolTree::Node ProtocolTree::Node::internal(int speaker,
                                                std::vector<double> pOne,
                                                int zero, int one) {
  Node n;
  n.speaker = speaker;
  n.pOne = std::move(pOne);
  n.zero = zero;
  n.one = one;
  return n;
}

ProtocolTree::ProtocolTree(InputSpace space, std::vector<Node> nodes, int root)
    : space_(std::move(space)), nodes_(std::move(nodes)), root_(root) {
  if (root_ < 0 || root_ >= nodeCount()) {
    throw std::invalid_argument("root node out of range");
  }
  // One DFS pass (zero branch first) checks the structure, collects leaves
  // in path order, and freezes transcripts and per-leaf paths.
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::pair<int, int>> path;
  std::string bits;

  auto describe = [&](int id) {
    std::ostringstream msg;
    msg << "node " << id << " (path \"" << (bits.empty() ? "root" : bits)
        << "\")";
    return msg.str();
  };

  auto visit = [&](auto&& self, int id) -> void {
    if (id < 0 || id >= nodeCount()) {
      throw std::invalid_argument("child reference out of range at " +
                                  describe(id));
    }
    if (seen[id]) {
      throw std::invalid_argument(describe(id) + " reached twice; not a tree");
    }
    seen[id] = 1;
    const Node& n = nodes_[id];
    if (n.isLeaf()) {
      if (n.output != 0 && n.output != 1) {
        throw std::invalid_argument("leaf output must be 0 or 1 at " +
                                    describe(id));
      }
      leaves_.push_back(id);
      leafDepths_.push_back(static_cast<int>(path.size()));
      transcripts_.push_back(bits);
      leafPaths_.push_back(path);
      depth_ = std::max(depth_, static_cast<int>(path.size()));
      return;
    }
    if (n.speaker < 0 || n.speaker >= space_.players()) {
      throw std::invalid_argument("speaker out of range at " + describe(id));
    }
    const auto views = static_cast<std::size_t>(space_.visibleCount(n.speaker));
    if (n.pOne.size() != views) {
      std::ostringstream msg;
      msg << "message rule at " << describe(id) << " covers " << n.pOne.size()
          << " views, expected " << views;
      throw std::invalid_argument(msg.str());
    }
    for (std::size_t v = 0; v < views; ++v) {
      const double p = n.pOne[v];
      if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << "probability " << p << " outside [0,1] at " << describe(id)
            << ", view " << space_.visibleLabel(static_cast<std::int64_t>(v),
                                                n.speaker);
        throw std::invalid_argument(msg.str());
      }
    }
    for (int bit = 0; bit <= 1; ++bit) {
      path.emplace_back(id, bit);
      bits.push_back(bit ? '1' : '0');
      self(self, bit ? n.one : n.zero);
      bits.pop_back();
      path.pop_back();
    }
  };
  visit(visit, root_);
}

void validateProtocol(const ProtocolTree& tree) {
  // Construction already established every invariant; rebuilding from the
  // raw pieces re-runs the full check for protocols of foreign origin.
  std::vector<ProtocolTree::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(tree.nodeCount()));
  for (int i = 0; i < tree.nodeCount(); ++i) {
    nodes.push_back(tree.node(i));
  }
  ProtocolTree rebuilt(tree.space(), std::move(nodes), tree.root());
  (void)rebuilt;
}

FiniteDistribution transcriptMasses(const ProtocolTree& tree,
                                    std::int64_t input) {
  if (input < 0 || input >= tree.space().count()) {
    throw std::invalid_argument("input index out of range");
  }
  Eigen::ArrayXd mass(tree.leafCount());
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    double p = 1.0;
    for (const auto& [id, bit] : tree.leafPath(leaf)) {
      const ProtocolTree::Node& n = tree.node(id);
      const double pOne =
          n.pOne[static_cast<std::size_t>(
              tree.space().visibleIndex(input, n.speaker))];
      p *= bit ? pOne : 1.0 - pOne;
    }
    mass(leaf) = p;
  }
  return FiniteDistribution(std::move(mass));
}

TranscriptDistribution transcriptDistribution(const ProtocolTree& tree,
                                              std::int64_t input) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(tree.leafCount()));
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    labels.push_back(tree.transcriptLabel(leaf));
  }
  return {std::move(labels), transcriptMasses(tree, input)};
}

DistributionFamily transcriptFamily(const ProtocolTree& tree) {
  checkEnumerationSize(tree, "transcript family");
  const std::int64_t inputs = tree.space().count();
  Eigen::MatrixXd members(inputs, tree.leafCount());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(inputs));
  for (std::int64_t z = 0; z < inputs; ++z) {
    members.row(z) = transcriptMasses(tree, z).mass().matrix().transpose();
    labels.push_back(tree.space().tupleLabel(z));
  }
  return DistributionFamily(std::move(labels), std::move(members));
}

Factorization factorize(const ProtocolTree& tree, std::int64_t input) {
  if (input < 0 || input >= tree.space().count()) {
    throw std::invalid_argument("input index out of range");
  }
  Eigen::MatrixXd factors =
      Eigen::MatrixXd::Ones(tree.space().players(), tree.leafCount());
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    for (const auto& [id, bit] : tree.leafPath(leaf)) {
      const ProtocolTree::Node& n = tree.node(id);
      const double pOne =
          n.pOne[static_cast<std::size_t>(
              tree.space().visibleIndex(input, n.speaker))];
      factors(n.speaker, leaf) *= bit ? pOne : 1.0 - pOne;
    }
  }
  return {std::move(factors)};
}

double factorizationMaxError(const ProtocolTree& tree, std::int64_t input) {
  const Factorization f = factorize(tree, input);
  const FiniteDistribution masses = transcriptMasses(tree, input);
  double worst = 0.0;
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    const double product = f.factors.col(leaf).prod();
    worst = std::max(worst, std::abs(product - masses(leaf)));
  }
  return worst;
}

int communicationCost(const ProtocolTree& tree) { return tree.depth(); }

double errorProbability(const ProtocolTree& tree,
                        std::span<const int> truth) {
  if (static_cast<std::int64_t>(truth.size()) != tree.space().count()) {
    throw std::invalid_argument("truth table must cover every input");
  }
  checkEnumerationSize(tree, "error probability");
  double worst = 0.0;
  for (std::int64_t z = 0; z < tree.space().count(); ++z) {
    const FiniteDistribution masses = transcriptMasses(tree, z);
    double wrong = 0.0;
    for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
      if (tree.node(tree.leaves()[leaf]).output != truth[z]) {
        wrong += masses(leaf);
      }
    }
    worst = std::max(worst, wrong);
  }
  return worst;
}

double informationCost(const ProtocolTree& tree,
                       const FiniteDistribution& inputDist) {
  if (inputDist.size() != tree.space().count()) {
    throw std::invalid_argument(
        "input distribution must live on the protocol's input space");
  }
  checkEnumerationSize(tree, "information cost");
  Eigen::MatrixXd joint(tree.space().count(),
                        static_cast<Eigen::Index>(tree.leafCount()));
  for (std::int64_t z = 0; z < tree.space().count(); ++z) {
    joint.row(z) = inputDist(z) *
                   transcriptMasses(tree, z).mass().matrix().transpose();
  }
  return mutualInformation(JointDistribution(std::move(joint)));
}

double informationCostEta(const ProtocolTree& tree,
                          std::span<const FiniteDistribution> collection) {
  if (collection.empty()) {
    throw std::invalid_argument("collection must be nonempty");
  }
  double total = 0.0;
  for (const FiniteDistribution& zeta : collection) {
    total += informationCost(tree, zeta);
  }
  return total / static_cast<double>(collection.size());
}

InequalityReport checkCutAndPaste(const ProtocolTree& tree, double tolerance) {
  if (!tree.space().isCube()) {
    throw std::invalid_argument(
        "cut-and-paste applies to protocols over {0,1}^k");
  }
  const CubeIndex cube(tree.space().players());
  const DistributionFamily family = transcriptFamily(tree);
  const double odd = hellingerVolume(family, cube.oddZeroInputs());
  const double even = hellingerVolume(family, cube.evenZeroInputs());
  return makeEqReport("cut_and_paste", odd, even, tolerance);
}

}  // namespace hvol
