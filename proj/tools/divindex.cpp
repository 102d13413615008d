// divindex: segregation, diversity and inequality indexes for grouped
// population data.
//
//   divindex compute   region.csv [--index divergence ...] [--base 2|e|M]
//   divindex decompose region.csv [--district-col district_id]
//   divindex sweep     --overall 0.75,0.25 [--steps 101]
//   divindex correlate a.csv b.csv ... [--pair divergence,information_theory]

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "divindex/commands.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  using divindex::RunConfig;

  CLI::App app{"Segregation, diversity and inequality indexes for grouped population data"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string base_text = "2";
  std::string format_text;
  std::string pair_text;
  std::string dissimilarity_pair;
  std::string overall_text;
  std::vector<std::string> index_list;
  std::string groups_text;
  std::string weights_path;
  std::string out_dir;
  double radius = -1.0;

  auto add_common = [&](CLI::App* sub, bool region_input) {
    sub->add_option("--base", base_text, "Logarithm base: 2, e or M (number of groups)")
        ->check(CLI::IsMember({"2", "e", "M"}));
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_dir, "Write the report into this directory");
    sub->add_flag("--pretty", cfg.pretty, "Print a rounded presentation table");
    if (!region_input) return;
    sub->add_option("--groups", groups_text,
                    "Group subset/merge spec, e.g. White,Black or Minority=Black+Hispanic,White");
    sub->add_option("--district-col", cfg.district_column, "District column name")
        ->default_val("district_id");
    sub->add_option("--radius", radius, "Uniform-kernel radius for spatial weighting")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--weights", weights_path,
                    "Weight triplet CSV (row_unit_id,col_unit_id,weight)");
  };

  auto* compute = app.add_subcommand("compute", "Overall and local index values for one region");
  compute->add_option("input", cfg.inputs, "Region CSV")->required();
  compute->add_option("--index", index_list,
                      "entropy, divergence, information_theory, dissimilarity (default: all)")
      ->delimiter(',');
  compute->add_option("--pair", dissimilarity_pair,
                      "Also report the two-group Dissimilarity Index for A,B");
  add_common(compute, true);

  auto* decompose =
      app.add_subcommand("decompose", "Between/within-district decomposition for one region");
  decompose->add_option("input", cfg.inputs, "Region CSV with a district column")->required();
  decompose->add_option("--index", index_list,
                        "divergence, information_theory (default: both)")
      ->delimiter(',');
  add_common(decompose, true);

  auto* sweep = app.add_subcommand("sweep", "Local D_i and H_i over two-group local shares");
  sweep->add_option("--overall", overall_text, "Overall composition p1,p2")->required();
  sweep->add_option("--steps", cfg.sweep_steps, "Number of evenly spaced samples")
      ->default_val(101);
  add_common(sweep, false);

  auto* correlate =
      app.add_subcommand("correlate", "Local and cross-region correlations across regions");
  correlate->add_option("inputs", cfg.inputs, "Region CSVs, one per region")->required();
  correlate->add_option("--pair", pair_text,
                        "Series pair, e.g. divergence,information_theory or "
                        "divergence,dissimilarity")
      ->default_val("divergence,information_theory");
  add_common(correlate, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? divindex::kExitOk : divindex::kExitUsage;
  }

  auto usage = [](const std::string& message) {
    std::cerr << "{\"error\":\"UsageError\",\"message\":\"" << message
              << "\",\"source\":null}\n";
    return divindex::kExitUsage;
  };

  cfg.base = *divindex::LogBase::parse(base_text);
  if (!format_text.empty()) {
    cfg.format = format_text == "csv" ? divindex::OutputFormat::Csv : divindex::OutputFormat::Json;
  }
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!groups_text.empty()) cfg.groups = groups_text;
  if (!weights_path.empty()) cfg.weights = weights_path;
  if (radius >= 0.0) cfg.radius = radius;
  cfg.indexes = index_list;

  if (!dissimilarity_pair.empty()) {
    const auto parts = split_commas(dissimilarity_pair);
    if (parts.size() != 2) return usage("--pair expects two group labels A,B");
    cfg.dissimilarity_pair = std::make_pair(parts[0], parts[1]);
  }
  if (!overall_text.empty()) {
    for (const auto& part : split_commas(overall_text)) {
      try {
        cfg.sweep_overall.push_back(std::stod(part));
      } catch (const std::exception&) {
        return usage("--overall expects comma-separated proportions");
      }
    }
  }
  if (correlate->parsed()) {
    const auto parts = split_commas(pair_text);
    const auto first = parts.size() == 2 ? divindex::parse_local_series(parts[0]) : std::nullopt;
    const auto second = parts.size() == 2 ? divindex::parse_local_series(parts[1]) : std::nullopt;
    if (!first || !second) return usage("--pair expects two series names");
    cfg.pair = {*first, *second};
  }

  if (compute->parsed()) return divindex::run_compute(cfg, std::cout, std::cerr);
  if (decompose->parsed()) return divindex::run_decompose(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return divindex::run_sweep(cfg, std::cout, std::cerr);
  return divindex::run_correlate(cfg, std::cout, std::cerr);
}
