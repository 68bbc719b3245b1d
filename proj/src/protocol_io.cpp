#include "hvol/protocol_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hvol {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("protocol file: " + where + ": " + what);
}

nlohmann::json readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  // nlohmann reports line/column positions for syntax errors.
  return json::parse(in);
}

int parseNode(const json& node, const InputSpace& space,
              std::vector<ProtocolTree::Node>& nodes,
              const std::string& where) {
  if (!node.is_object()) {
    fail(where, "node must be an object");
  }
  if (node.contains("output")) {
    for (const auto& [key, value] : node.items()) {
      if (key != "output") {
        fail(where, "leaf carries unexpected field \"" + key + "\"");
      }
      (void)value;
    }
    if (!node["output"].is_number_integer()) {
      fail(where, "output must be 0 or 1");
    }
    const int out = node["output"].get<int>();
    if (out != 0 && out != 1) {
      fail(where, "output must be 0 or 1");
    }
    nodes.push_back(ProtocolTree::Node::leaf(out));
    return static_cast<int>(nodes.size()) - 1;
  }

  for (const char* field : {"speaker", "p_one", "zero", "one"}) {
    if (!node.contains(field)) {
      fail(where, std::string("missing field \"") + field + "\"");
    }
  }
  for (const auto& [key, value] : node.items()) {
    if (key != "speaker" && key != "p_one" && key != "zero" && key != "one") {
      fail(where, "unexpected field \"" + key + "\"");
    }
    (void)value;
  }
  if (!node["speaker"].is_number_integer()) {
    fail(where, "speaker must be an integer");
  }
  const int speaker = node["speaker"].get<int>() - 1;  // file is 1-based
  if (speaker < 0 || speaker >= space.players()) {
    fail(where, "speaker " + std::to_string(speaker + 1) + " out of range");
  }

  const json& table = node["p_one"];
  if (!table.is_object()) {
    fail(where, "p_one must map views to probabilities");
  }
  const auto views = static_cast<std::size_t>(space.visibleCount(speaker));
  std::vector<double> rule(views);
  std::vector<char> present(views, 0);
  for (const auto& [key, value] : table.items()) {
    std::vector<int> reduced;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        std::size_t used = 0;
        const int symbol = std::stoi(part, &used);
        if (used != part.size()) {
          throw std::invalid_argument(part);
        }
        reduced.push_back(symbol);
      } catch (const std::exception&) {
        fail(where, "bad symbol \"" + part + "\" in p_one key \"" + key +
                        "\"");
      }
    }
    std::int64_t view = -1;
    try {
      view = space.visibleIndexOfReduced(reduced, speaker);
    } catch (const std::exception& e) {
      fail(where, "p_one key \"" + key + "\" is not a view of speaker " +
                      std::to_string(speaker + 1) + " (" + e.what() + ")");
    }
    if (!value.is_number()) {
      fail(where, "probability for view \"" + key +
                      "\" must be a decimal literal");
    }
    rule[static_cast<std::size_t>(view)] = value.get<double>();
    present[static_cast<std::size_t>(view)] = 1;
  }
  for (std::size_t v = 0; v < views; ++v) {
    if (!present[v]) {
      fail(where, "p_one is missing view \"" +
                      space.visibleLabel(static_cast<std::int64_t>(v),
                                         speaker) +
                      "\"");
    }
  }

  const int zero = parseNode(node["zero"], space, nodes, where + ".zero");
  const int one = parseNode(node["one"], space, nodes, where + ".one");
  nodes.push_back(
      ProtocolTree::Node::internal(speaker, std::move(rule), zero, one));
  return static_cast<int>(nodes.size()) - 1;
}

std::vector<int> parseTupleKey(const std::string& key,
                               const InputSpace& space,
                               const std::string& where) {
  std::vector<int> tuple;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const int symbol = std::stoi(part, &used);
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
      tuple.push_back(symbol);
    } catch (const std::exception&) {
      fail(where, "bad symbol \"" + part + "\" in key \"" + key + "\"");
    }
  }
  if (static_cast<int>(tuple.size()) != space.players()) {
    fail(where, "key \"" + key + "\" has " + std::to_string(tuple.size()) +
                    " symbols, expected " + std::to_string(space.players()));
  }
  return tuple;
}

}  // namespace

ProtocolTree parseProtocol(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("players") ||
      !doc.contains("alphabets") || !doc.contains("tree")) {
    fail("top level", "expected fields players, alphabets, tree");
  }
  if (!doc["players"].is_number_integer()) {
    fail("players", "must be an integer");
  }
  const int players = doc["players"].get<int>();
  if (!doc["alphabets"].is_array() ||
      static_cast<int>(doc["alphabets"].size()) != players) {
    fail("alphabets", "must list one size per player");
  }
  std::vector<int> alphabets;
  for (const auto& entry : doc["alphabets"]) {
    if (!entry.is_number_integer() || entry.get<int>() < 1) {
      fail("alphabets", "sizes must be positive integers");
    }
    alphabets.push_back(entry.get<int>());
  }
  InputSpace space(std::move(alphabets));
  std::vector<ProtocolTree::Node> nodes;
  const int root = parseNode(doc["tree"], space, nodes, "tree");
  return ProtocolTree(std::move(space), std::move(nodes), root);
}

ProtocolTree loadProtocol(const std::string& path) {
  return parseProtocol(readFile(path));
}

nlohmann::ordered_json protocolToJson(const ProtocolTree& tree) {
  const InputSpace& space = tree.space();
  auto emit = [&](auto&& self, int id) -> nlohmann::ordered_json {
    const ProtocolTree::Node& node = tree.node(id);
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    if (node.isLeaf()) {
      out["output"] = node.output;
      return out;
    }
    out["speaker"] = node.speaker + 1;
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < node.pOne.size(); ++v) {
      table[space.visibleLabel(static_cast<std::int64_t>(v), node.speaker)] =
          node.pOne[v];
    }
    out["p_one"] = std::move(table);
    out["zero"] = self(self, node.zero);
    out["one"] = self(self, node.one);
    return out;
  };
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["players"] = space.players();
  doc["alphabets"] = space.alphabets();
  doc["tree"] = emit(emit, tree.root());
  return doc;
}

void saveProtocol(const ProtocolTree& tree, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << protocolToJson(tree).dump(2) << '\n';
}

FiniteDistribution parseInputDistribution(const nlohmann::json& doc,
                                          const InputSpace& space) {
  if (!doc.is_object()) {
    fail("input distribution", "expected an object of tuple -> probability");
  }
  Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(space.count());
  for (const auto& [key, value] : doc.items()) {
    const std::vector<int> tuple =
        parseTupleKey(key, space, "input distribution");
    if (!value.is_number()) {
      fail("input distribution", "probability for \"" + key +
                                     "\" must be a decimal literal");
    }
    mass(space.index(tuple)) = value.get<double>();
  }
  return FiniteDistribution(std::move(mass));
}

FiniteDistribution loadInputDistribution(const std::string& path,
                                         const InputSpace& space) {
  return parseInputDistribution(readFile(path), space);
}

std::vector<int> parseTruthTable(const nlohmann::json& doc,
                                 const InputSpace& space) {
  if (!doc.is_object()) {
    fail("truth table", "expected an object of tuple -> bit");
  }
  std::vector<int> truth(static_cast<std::size_t>(space.count()), -1);
  for (const auto& [key, value] : doc.items()) {
    const std::vector<int> tuple = parseTupleKey(key, space, "truth table");
    if (!value.is_number_integer() ||
        (value.get<int>() != 0 && value.get<int>() != 1)) {
      fail("truth table", "value for \"" + key + "\" must be 0 or 1");
    }
    truth[static_cast<std::size_t>(space.index(tuple))] = value.get<int>();
  }
  for (std::int64_t z = 0; z < space.count(); ++z) {
    if (truth[static_cast<std::size_t>(z)] < 0) {
      fail("truth table", "missing input \"" + space.tupleLabel(z) + "\"");
    }
  }
  return truth;
}

std::vector<int> loadTruthTable(const std::string& path,
                                const InputSpace& space) {
  return parseTruthTable(readFile(path), space);
}

}  // namespace hvol
