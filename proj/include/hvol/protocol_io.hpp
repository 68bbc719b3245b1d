#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hvol/distribution.hpp"
#include "hvol/protocol.hpp"

namespace hvol {

/// Protocol file format (JSON):
///   { "players": k,
///     "alphabets": [n_1..n_k],
///     "tree": node }
/// where an internal node is
///   { "speaker": j,            // 1-based
///     "p_one": { "<view>": p, ... },
///     "zero": node, "one": node }
/// and a leaf is { "output": 0 | 1 }.  A view key is the speaker's visible
/// tuple z^{-j} as comma-joined symbol indices in player order with player j
/// skipped, e.g. "0,1" for k = 3.  Every view must be present; missing or
/// unknown keys are errors, and probabilities must be JSON numbers in [0,1].
ProtocolTree parseProtocol(const nlohmann::json& doc);
ProtocolTree loadProtocol(const std::string& path);

nlohmann::ordered_json protocolToJson(const ProtocolTree& tree);
void saveProtocol(const ProtocolTree& tree, const std::string& path);

/// Input-distribution file: JSON object mapping input tuples (comma-joined,
/// e.g. "0,1,1") to probabilities.  Unlisted inputs get mass 0.
FiniteDistribution parseInputDistribution(const nlohmann::json& doc,
                                          const InputSpace& space);
FiniteDistribution loadInputDistribution(const std::string& path,
                                         const InputSpace& space);

/// Truth-table file: same key syntax, values 0 or 1, every input required.
std::vector<int> parseTruthTable(const nlohmann::json& doc,
                                 const InputSpace& space);
std::vector<int> loadTruthTable(const std::string& path,
                                const InputSpace& space);

}  // namespace hvol
