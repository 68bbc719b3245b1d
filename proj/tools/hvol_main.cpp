#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hvol/cli.hpp"

namespace {

int emit(const hvol::ReportDocument& doc, hvol::ReportFormat format,
         const std::string& outPath) {
  const std::string rendered = hvol::renderDocument(doc, format);
  if (outPath.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(outPath);
    if (!out) {
      std::cerr << "error: cannot write " << outPath << "\n";
      return 2;
    }
    out << rendered;
  }
  return doc.failCount() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hellinger-volume toolbox and number-on-the-forehead protocol "
               "simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  hvol::CampaignConfig config;
  std::string format = "json";
  std::string outPath;
  app.add_option("--seed", config.seed, "master RNG seed")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "trials per campaign")
      ->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "inequality tolerance")
      ->capture_default_str();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", outPath, "write the report to a file");

  auto* verify = app.add_subcommand(
      "verify", "run the seeded inequality campaigns");
  verify->add_option("--k", config.kMax,
                     "largest player count for protocol campaigns")
      ->capture_default_str();
  verify->add_option("--depth", config.depth,
                     "depth cap for random protocols")
      ->capture_default_str();

  auto* andk = app.add_subcommand(
      "andk", "verify the AND_k bound chain on a protocol");
  int players = 3;
  std::string source = "trivial";
  andk->add_option("--k", players, "player count (built-in protocol)")
      ->capture_default_str();
  andk->add_option("--protocol", source,
                   "\"trivial\" or a protocol file path")
      ->capture_default_str();

  auto* protocol = app.add_subcommand(
      "protocol", "inspect a protocol file");
  std::string protocolPath;
  std::string input = "--all";
  std::optional<std::string> zetaPath;
  std::optional<std::string> truthPath;
  protocol->add_option("file", protocolPath, "protocol file")->required();
  protocol->add_option("--input", input,
                       "input tuple (comma-joined) or --all")
      ->capture_default_str();
  protocol->add_option("--zeta", zetaPath,
                       "input-distribution file for information cost");
  protocol->add_option("--truth", truthPath,
                       "truth-table file for error probability");

  CLI11_PARSE(app, argc, argv);

  const hvol::ReportFormat reportFormat =
      format == "csv" ? hvol::ReportFormat::kCsv : hvol::ReportFormat::kJson;
  config.format = reportFormat;

  try {
    if (app.got_subcommand(verify)) {
      return emit(hvol::cmdVerify(config), reportFormat, outPath);
    }
    if (app.got_subcommand(andk)) {
      return emit(hvol::cmdAndk(players, source, config.tolerance),
                  reportFormat, outPath);
    }
    return emit(hvol::cmdProtocol(protocolPath, input, zetaPath, truthPath,
                                  config.tolerance),
                reportFormat, outPath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
