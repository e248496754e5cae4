// evidist: evidence distances, Dempster combination and sweep reproduction.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "evidist/commands.hpp"

namespace cli = evidist::cli;

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer evidence distances and combination"};
  app.require_subcommand(1);

  std::string file, first, second, metric_name = "generalized", scenario_name;
  std::string out_path;
  evidist::DistanceParams params;
  bool verbose = false;

  auto* distance = app.add_subcommand("distance", "Distance between two BPAs of a document");
  distance->add_option("file", file, "BPA document")->required();
  distance->add_option("bpa1", first)->required();
  distance->add_option("bpa2", second)->required();
  distance->add_option("--metric", metric_name, "jousselme | sunberg | generalized")
      ->check(CLI::IsMember({"jousselme", "sunberg", "generalized"}))
      ->capture_default_str();
  distance->add_option("--alpha", params.alpha, "Jaccard weight of the generalized metric")
      ->capture_default_str();
  distance->add_option("--k", params.hausdorff_k, "Hausdorff tuning constant K")->capture_default_str();

  auto* combine = app.add_subcommand("combine", "Combine two BPAs with Dempster's rule");
  combine->add_option("file", file, "BPA document")->required();
  combine->add_option("bpa1", first)->required();
  combine->add_option("bpa2", second)->required();
  combine->add_option("-o,--output", out_path, "Output document (default: stdout)");

  auto* sweep = app.add_subcommand("sweep", "Run a built-in sweep and write CSV");
  sweep->add_option("scenario", scenario_name, "shifted | growing")
      ->required()
      ->check(CLI::IsMember({"shifted", "growing"}));
  sweep->add_option("--alpha", params.alpha)->capture_default_str();
  sweep->add_option("--k", params.hausdorff_k)->capture_default_str();
  sweep->add_option("-o,--output", out_path, "CSV output path")->required();
  sweep->add_flag("-v,--verbose", verbose, "Report negative-clamp events");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (*distance) {
    return cli::cmd_distance(file, first, second, *cli::parse_metric(metric_name), params, std::cout,
                             std::cerr);
  }
  if (*combine) {
    std::optional<std::filesystem::path> target;
    if (!out_path.empty()) target = out_path;
    return cli::cmd_combine(file, first, second, target, std::cout, std::cerr);
  }
  return cli::cmd_sweep(*cli::parse_sweep_kind(scenario_name), params, out_path, verbose, std::cout,
                        std::cerr);
}
