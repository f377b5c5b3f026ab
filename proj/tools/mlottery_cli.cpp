// Copyright 2026 The mlottery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// mlottery command line:
//
//   mlottery run --config <path> [--seed N]... [--out DIR] [--methods a,b,c] [--dataset-size N]
//   mlottery compare-iia --small <report.json> --large <report.json> --shared R,B
//   mlottery solve --profile <path>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "mlottery.hpp"

namespace {

using namespace mlottery;

int run(const std::string& config_path, const std::vector<std::uint64_t>& seeds,
        const std::string& out, const std::vector<std::string>& methods, std::size_t dataset_size) {
  ExperimentConfig config = read_config(config_path);
  if (!seeds.empty()) config.seeds = seeds;
  if (!methods.empty()) config.methods = methods;
  if (dataset_size > 0) config.dataset_size = dataset_size;
  if (!out.empty()) config.output_dir = out;
  if (config.output_dir.empty()) config.output_dir = "out";

  const ExperimentReport report = run_experiment(config);
  const ReportDigest d = digest(report);
  std::cout << "wrote " << config.output_dir << " (config " << report.config_hash.substr(0, 12)
            << ")\n";
  for (std::size_t i = 0; i < d.methods.size(); ++i) {
    std::cout << "  " << d.methods[i] << ": " << lottery_to_json(d.lotteries[i]).dump() << '\n';
  }
  return 0;
}

int compare(const std::string& small, const std::string& large, const std::vector<std::string>& shared,
            double tolerance) {
  const auto result =
      compare_iia(read_report_digest(small), read_report_digest(large), shared, tolerance);
  std::cout << iia_to_json(result).dump(2) << '\n';
  return 0;
}

int solve(const std::string& profile_path) {
  const PopulationFile population = read_population(profile_path);
  const auto summary = summarize_population(population.profile);
  const auto& alts = population.profile.alternatives();
  const auto certificate = verify_maximality(summary.margins, summary.maximal_lottery);
  Json j;
  j["maximal_lottery"] = lottery_to_json(summary.maximal_lottery);
  j["worst_column_payoff"] = round_sig12(certificate.worst_column_payoff);
  j["condorcet_winner"] =
      summary.condorcet_winner ? Json(alts.label(*summary.condorcet_winner)) : Json();
  j["majority_winners"] = Json::array();
  for (AltIndex a : summary.majority_winners) j["majority_winners"].push_back(alts.label(a));
  j["smith_set"] = Json::array();
  for (AltIndex a : summary.smith_set) j["smith_set"].push_back(alts.label(a));
  for (std::size_t a = 0; a < alts.size(); ++a) {
    j["borda"][alts.label(a)] = weight_to_json(summary.borda[a]);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal lotteries and preference aggregation experiments"};
  app.require_subcommand(1);

  std::string config_path, out;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> methods;
  std::size_t dataset_size = 0;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment config");
  run_cmd->add_option("--config", config_path, "Experiment config JSON")->required();
  run_cmd->add_option("--seed", seeds, "Seed (repeatable; replaces the config's seeds)");
  run_cmd->add_option("--out", out, "Output directory");
  run_cmd->add_option("--methods", methods, "Comma-separated methods")->delimiter(',');
  run_cmd->add_option("--dataset-size", dataset_size, "Comparisons per seed")
      ->check(CLI::PositiveNumber);

  std::string small, large;
  std::vector<std::string> shared;
  double tolerance = 0.05;
  auto* iia_cmd = app.add_subcommand("compare-iia", "Compare two reports on shared alternatives");
  iia_cmd->add_option("--small", small, "report.json of the smaller population")->required();
  iia_cmd->add_option("--large", large, "report.json of the larger population")->required();
  iia_cmd->add_option("--shared", shared, "Shared alternatives")->delimiter(',')->required();
  iia_cmd->add_option("--tolerance", tolerance, "Conditional-odds tolerance");

  std::string profile_path;
  auto* solve_cmd = app.add_subcommand("solve", "Exact maximal lottery of a profile");
  solve_cmd->add_option("--profile", profile_path, "Population JSON")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run(config_path, seeds, out, methods, dataset_size);
    if (*iia_cmd) return compare(small, large, shared, tolerance);
    if (*solve_cmd) return solve(profile_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
