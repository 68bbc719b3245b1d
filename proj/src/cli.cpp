#include "hvol/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hvol/andk.hpp"
#include "hvol/cube.hpp"
#include "hvol/hellinger.hpp"
#include "hvol/protocol_io.hpp"
#include "hvol/rng.hpp"

namespace hvol {

namespace {

using nlohmann::ordered_json;

ordered_json echoConfig(const CampaignConfig& config) {
  ordered_json echo = ordered_json::object();
  echo["seed"] = config.seed;
  echo["trials"] = config.trials;
  echo["k_min"] = config.kMin;
  echo["k_max"] = config.kMax;
  echo["depth"] = config.depth;
  echo["tolerance"] = config.tolerance;
  echo["format"] = config.format == ReportFormat::kJson ? "json" : "csv";
  return echo;
}

// Each campaign family runs on its own derived master seed, so families
// never share trial streams.
std::uint64_t familySeed(const CampaignConfig& config, std::uint64_t ordinal) {
  return deriveSeed(config.seed, 1000 + ordinal);
}

}  // namespace

ReportDocument cmdVerify(const CampaignConfig& config) {
  config.validate();
  ReportDocument doc;
  doc.config = echoConfig(config);

  const auto trials = config.trials;
  const double tol = config.tolerance;
  doc.campaigns.push_back(
      campaignHellingerNonneg(familySeed(config, 0), trials, 8, 16, tol));
  doc.campaigns.push_back(
      campaignAmGmGap(familySeed(config, 1), trials, 32, tol));
  doc.campaigns.push_back(
      campaignAmGmSequence(familySeed(config, 2), trials, 32, tol));
  doc.campaigns.push_back(
      campaignMutualInfoLowerBound(familySeed(config, 3), trials, 8, 16, tol));
  doc.campaigns.push_back(
      campaignSymmetricDifference(familySeed(config, 4), trials, 16, tol));
  doc.campaigns.push_back(campaignSubsetTree(familySeed(config, 5), trials,
                                             config.kMin, config.kMax,
                                             config.depth, tol));
  const ProtocolCampaign protocols =
      campaignProtocols(familySeed(config, 6), trials, config.kMin,
                        config.kMax, config.depth, tol);
  doc.campaigns.push_back(protocols.cutAndPaste);
  doc.campaigns.push_back(protocols.factorization);
  doc.campaigns.push_back(protocols.informationVsCommunication);
  doc.campaigns.push_back(
      campaignEventSeparation(familySeed(config, 7), trials, 16, tol));
  return doc;
}

ReportDocument cmdAndk(int players, const std::string& source,
                       double tolerance) {
  const bool builtin = source.empty() || source == "trivial";
  if (builtin && (players < 2 || players > 5)) {
    throw std::invalid_argument("built-in AND_k supports k in [2, 5]");
  }
  const ProtocolTree tree =
      builtin ? trivialAndProtocol(players) : loadProtocol(source);
  if (!tree.space().isCube()) {
    throw std::invalid_argument("AND_k expects a protocol over {0,1}^k");
  }
  const int k = tree.space().players();

  ReportDocument doc;
  doc.config["command"] = "andk";
  doc.config["k"] = k;
  doc.config["source"] = builtin ? "trivial" : source;
  doc.config["tolerance"] = tolerance;

  ChainReport chain = verifyLowerBoundChain(tree, tolerance);
  doc.extras["delta"] = chain.delta;
  doc.extras["ic_eta"] = chain.icEta;
  doc.extras["upper_bound"] = andUpperBound(k);
  doc.extras["lower_bound"] = andLowerBound(k, chain.delta);
  doc.extras["communication_cost"] = communicationCost(tree);

  if (builtin) {
    // The see-a-zero protocol achieves its stated cost exactly.
    doc.checks.push_back(makeEqReport("ic_eta_matches_upper_bound",
                                      chain.icEta, andUpperBound(k),
                                      tolerance));
  }
  doc.chains.push_back(std::move(chain));

  if (k == 3) {
    const ProtocolTree xorTree = xorForeheadProtocol();
    const ForeheadMarginal marginal = xorForeheadMarginal(xorTree);
    const CubeIndex cube(3);

    doc.checks.push_back(makeEqReport(
        "xor_allones_acceptance", marginal.acceptance(cube.allOnesInput()),
        1.0, 0.0));
    double accDev = 0.0;
    double massDev = 0.0;
    for (int x = 0; x < cube.size(); ++x) {
      if (x == cube.allOnesInput()) {
        continue;
      }
      accDev = std::max(accDev, std::abs(marginal.acceptance(x) - 0.5));
      for (Eigen::Index w = 0; w < marginal.transcripts.outcomes(); ++w) {
        massDev = std::max(
            massDev, std::abs(marginal.transcripts.matrix()(x, w) - 0.125));
      }
    }
    doc.checks.push_back(
        makeLeReport("xor_zero_acceptance_deviation", accDev, 0.0, 0.0));
    doc.checks.push_back(
        makeLeReport("xor_marginal_uniform_deviation", massDev, 0.0, 0.0));
    doc.checks.push_back(makeEqReport(
        "xor_error_vs_and", xorMarginalErrorVsAnd(xorTree), 0.5, 0.0));

    Eigen::ArrayXd zeroes = Eigen::ArrayXd::Constant(cube.size(), 1.0 / 7.0);
    zeroes(cube.allOnesInput()) = 0.0;
    InequalityReport uniformZeroes =
        zeroInformationCheck(xorTree, FiniteDistribution(zeroes));
    uniformZeroes.name = "zero_information_uniform_zeroes";
    doc.checks.push_back(std::move(uniformZeroes));

    InequalityReport etaOne =
        zeroInformationCheck(xorTree, etaCollection(3)[0]);
    etaOne.name = "zero_information_eta1";
    doc.checks.push_back(std::move(etaOne));
  }
  return doc;
}

ReportDocument cmdProtocol(const std::string& path, const std::string& input,
                           const std::optional<std::string>& zetaPath,
                           const std::optional<std::string>& truthPath,
                           double tolerance) {
  const ProtocolTree tree = loadProtocol(path);
  const InputSpace& space = tree.space();

  ReportDocument doc;
  doc.config["command"] = "protocol";
  doc.config["file"] = path;
  doc.config["input"] = input;
  doc.config["tolerance"] = tolerance;

  doc.extras["players"] = space.players();
  doc.extras["alphabets"] = space.alphabets();
  doc.extras["communication_cost"] = communicationCost(tree);
  doc.extras["transcript_count"] = tree.leafCount();

  std::vector<std::int64_t> selected;
  if (input == "--all" || input == "all") {
    for (std::int64_t z = 0; z < space.count(); ++z) {
      selected.push_back(z);
    }
  } else {
    std::vector<int> tuple;
    std::string part;
    std::istringstream in(input);
    while (std::getline(in, part, ',')) {
      std::size_t used = 0;
      const int symbol = std::stoi(part, &used);
      if (used != part.size()) {
        throw std::invalid_argument("bad symbol \"" + part +
                                    "\" in input tuple");
      }
      tuple.push_back(symbol);
    }
    selected.push_back(space.index(tuple));
  }

  ordered_json outputs = ordered_json::object();
  for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
    outputs[tree.transcriptLabel(leaf)] =
        tree.node(tree.leaves()[leaf]).output;
  }
  doc.extras["outputs"] = std::move(outputs);

  ordered_json transcripts = ordered_json::object();
  double worstFactorization = 0.0;
  for (std::int64_t z : selected) {
    const FiniteDistribution masses = transcriptMasses(tree, z);
    ordered_json table = ordered_json::object();
    for (int leaf = 0; leaf < tree.leafCount(); ++leaf) {
      table[tree.transcriptLabel(leaf)] = masses(leaf);
    }
    transcripts[space.tupleLabel(z)] = std::move(table);
    worstFactorization =
        std::max(worstFactorization, factorizationMaxError(tree, z));
  }
  doc.extras["transcripts"] = std::move(transcripts);
  doc.checks.push_back(makeLeReport("factorization_product",
                                    worstFactorization, 0.0, 1e-12));

  if (truthPath) {
    const std::vector<int> truth = loadTruthTable(*truthPath, space);
    doc.extras["error_probability"] = errorProbability(tree, truth);
  }
  if (zetaPath) {
    const FiniteDistribution zeta = loadInputDistribution(*zetaPath, space);
    const double ic = informationCost(tree, zeta);
    doc.extras["information_cost"] = ic;
    doc.checks.push_back(makeLeReport(
        "ic_le_cc", ic, static_cast<double>(communicationCost(tree)),
        tolerance));
  }
  return doc;
}

}  // namespace hvol
