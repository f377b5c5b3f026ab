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

// End-to-end experiments: population -> sampled comparisons -> aggregation
// methods -> axiom verdicts -> report files. Verdicts are data; nothing here
// fails because a method violates an axiom.

#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlottery/btl.hpp"
#include "mlottery/dataset.hpp"
#include "mlottery/io.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/selfplay.hpp"
#include "mlottery/solver.hpp"
#include "mlottery/voting.hpp"

namespace mlottery {

inline constexpr const char* kToolVersion = "0.1.0";

inline const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods{"borda", "btl_softmax", "maximal_lottery_lp",
                                                "spo", "random_dictatorship"};
  return methods;
}

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

struct ExperimentConfig {
  std::string population_path;
  std::size_t dataset_size = 2048;
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::string> methods = known_methods();
  SpoConfig spo;  // seed is overridden per run
  BtlFitOptions btl;
  double beta = kInfiniteBeta;
  // A lottery "selects" an alternative when it gives it at least this mass.
  double verdict_threshold = 0.9;
  // Max L∞ distance to the population's maximal lottery for the cycle verdict;
  // about the 99.7% quantile of the sampling spread at 2048 comparisons.
  double cycle_tolerance = 0.1;
  std::string prompt_id = "prompt-0";
  std::string output_dir;  // empty: do not write files
};

inline void validate(const ExperimentConfig& config) {
  if (config.dataset_size == 0) throw std::invalid_argument("config: dataset_size must be >= 1");
  if (config.seeds.empty()) throw std::invalid_argument("config: no seeds");
  if (config.methods.empty()) throw std::invalid_argument("config: no methods");
  for (const auto& m : config.methods) {
    const auto& known = known_methods();
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw std::invalid_argument("config: unknown method '" + m + "'");
    }
  }
  if (!std::filesystem::exists(config.population_path)) {
    throw std::invalid_argument("config: population file '" + config.population_path +
                                "' does not exist");
  }
}

namespace detail {

inline Json beta_to_json(double beta) {
  return std::isinf(beta) ? Json("inf") : Json(beta);
}

inline double beta_from_json(const Json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity")) {
    return kInfiniteBeta;
  }
  return j.get<double>();
}

}  // namespace detail

// Relative population paths resolve against `base_dir`.
inline ExperimentConfig config_from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
  ExperimentConfig c;
  try {
    std::filesystem::path population = j.at("population").get<std::string>();
    c.population_path = (population.is_absolute() ? population : base_dir / population).string();
    c.dataset_size = j.value("dataset_size", c.dataset_size);
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("methods")) c.methods = j.at("methods").get<std::vector<std::string>>();
    if (j.contains("spo")) {
      const auto& s = j.at("spo");
      c.spo.k = s.value("k", c.spo.k);
      c.spo.iterations = s.value("iterations", c.spo.iterations);
      c.spo.step_size = s.value("step_size", c.spo.step_size);
      c.spo.batch = s.value("batch", c.spo.batch);
      c.spo.exploration = s.value("exploration", c.spo.exploration);
      c.spo.log_stride = s.value("log_stride", c.spo.log_stride);
    }
    if (j.contains("btl")) {
      const auto& b = j.at("btl");
      if (b.contains("beta")) c.beta = detail::beta_from_json(b.at("beta"));
      c.btl.tolerance = b.value("tolerance", c.btl.tolerance);
      c.btl.max_iterations = b.value("max_iterations", c.btl.max_iterations);
      c.btl.learning_rate = b.value("learning_rate", c.btl.learning_rate);
    }
    c.verdict_threshold = j.value("verdict_threshold", c.verdict_threshold);
    c.cycle_tolerance = j.value("cycle_tolerance", c.cycle_tolerance);
    c.prompt_id = j.value("prompt_id", c.prompt_id);
    if (j.contains("output_dir")) {
      std::filesystem::path out = j.at("output_dir").get<std::string>();
      c.output_dir = (out.is_absolute() ? out : base_dir / out).string();
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

inline ExperimentConfig read_config(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return config_from_json(j, std::filesystem::path(path).parent_path());
}

// Settings that determine the results; paths are left out so that a run is
// identified by what it computes, not where its files live.
inline Json settings_to_json(const ExperimentConfig& c) {
  Json j;
  j["dataset_size"] = c.dataset_size;
  j["seeds"] = c.seeds;
  j["methods"] = c.methods;
  j["spo"] = {{"k", c.spo.k},
              {"iterations", c.spo.iterations},
              {"step_size", c.spo.step_size},
              {"batch", c.spo.batch},
              {"exploration", c.spo.exploration},
              {"log_stride", c.spo.log_stride}};
  j["btl"] = {{"beta", detail::beta_to_json(c.beta)},
              {"tolerance", c.btl.tolerance},
              {"max_iterations", c.btl.max_iterations},
              {"learning_rate", c.btl.learning_rate}};
  j["verdict_threshold"] = c.verdict_threshold;
  j["cycle_tolerance"] = c.cycle_tolerance;
  j["prompt_id"] = c.prompt_id;
  return j;
}

struct MethodResult {
  std::string method;
  Lottery lottery;
  Json details;
  SelfPlayTrace trace;  // one row for non-iterative methods
};

struct SeedRun {
  std::uint64_t seed = 0;
  ComparisonDataset dataset;
  PairwiseCounts counts;
  SelectionMatrix selection;
  std::vector<MethodResult> methods;
  Json verdicts;
};

/// What the exact population implies, for verdicts.
struct PopulationSummary {
  std::vector<AltIndex> majority_winners;
  std::optional<AltIndex> condorcet_winner;
  std::vector<AltIndex> smith_set;
  std::vector<Weight> borda;
  Lottery maximal_lottery;
  MarginMatrix margins;
};

inline PopulationSummary summarize_population(const PreferenceProfile& profile) {
  const auto counts = pairwise_counts(profile);
  auto margins = margin_matrix(counts);
  return {majority_winners(profile), condorcet_winner(counts), smith_set(counts),
          borda_scores(counts).scores, maximal_lottery_lp(margins), std::move(margins)};
}

struct ExperimentReport {
  ExperimentConfig config;
  PopulationFile population;
  PopulationSummary summary;
  std::string config_hash;
  std::vector<SeedRun> runs;

  const AlternativeSet& alternatives() const { return population.profile.alternatives(); }
};

namespace detail {

inline SelfPlayTrace single_row_trace(std::uint64_t seed, const Lottery& lottery) {
  std::vector<double> p(lottery.probabilities().begin(), lottery.probabilities().end());
  return {seed, {TraceRow{0, p, p, {}}}};
}

// Point mass on the best score, uniform over exact ties.
inline Lottery argmax_lottery(const AlternativeSet& alternatives, const std::vector<Weight>& scores) {
  const Weight best = *std::max_element(scores.begin(), scores.end());
  std::vector<double> mass(scores.size());
  for (std::size_t a = 0; a < scores.size(); ++a) mass[a] = scores[a] == best ? 1.0 : 0.0;
  return Lottery::from_masses(alternatives, std::move(mass));
}

inline Json labels_json(const AlternativeSet& alternatives, const std::vector<AltIndex>& items) {
  Json j = Json::array();
  for (AltIndex a : items) j.push_back(alternatives.label(a));
  return j;
}

inline MethodResult run_method(const std::string& method, const ExperimentConfig& config,
                               const PreferenceProfile& population, const PairwiseCounts& counts,
                               const SelectionMatrix& selection, std::uint64_t seed) {
  const AlternativeSet& alts = counts.alternatives();
  if (method == "borda") {
    // Per-pair win rates summed; equals normalized Borda on complete counts.
    std::vector<Weight> scores(alts.size(), Weight(0));
    for (std::size_t a = 0; a < alts.size(); ++a) {
      for (std::size_t b = 0; b < alts.size(); ++b) {
        if (a != b) scores[a] += (*selection.exact())(a, b);
      }
    }
    Lottery lottery = argmax_lottery(alts, scores);
    Json details;
    for (std::size_t a = 0; a < alts.size(); ++a) {
      details["scores"][alts.label(a)] = round_sig12(to_double(scores[a]));
    }
    auto trace = single_row_trace(seed, lottery);
    return {method, std::move(lottery), std::move(details), std::move(trace)};
  }
  if (method == "btl_softmax") {
    auto [rewards, diag] = fit_btl(counts, config.btl);
    Lottery lottery = softmax_policy(rewards, config.beta);
    Json details;
    details["rewards"] = rewards_to_json(rewards);
    details["beta"] = beta_to_json(config.beta);
    details["converged"] = diag.converged;
    details["capped"] = diag.capped;
    details["iterations"] = diag.iterations_used;
    details["gradient_norm"] = diag.final_gradient_norm;
    details["borda_order_agrees"] = check_borda_equivalence(rewards, counts);
    auto trace = single_row_trace(seed, lottery);
    return {method, std::move(lottery), std::move(details), std::move(trace)};
  }
  if (method == "maximal_lottery_lp") {
    const MatrixD margins = selection.margins();
    Lottery lottery = maximal_lottery_lp(alts, margins);
    const auto report = verify_maximality(margins, lottery, kExactEpsilon);
    Json details;
    details["worst_column_payoff"] = report.worst_column_payoff;
    details["is_maximal"] = report.is_maximal;
    auto trace = single_row_trace(seed, lottery);
    return {method, std::move(lottery), std::move(details), std::move(trace)};
  }
  if (method == "spo") {
    SpoConfig spo = config.spo;
    spo.seed = seed;
    auto [mixture, trace] = spo_run(selection, spo);
    Json details;
    details["final_policy"] = lottery_to_json(
        Lottery(alts, trace.rows.back().policy));
    details["worst_column_payoff"] =
        verify_maximality(selection.margins(), mixture, kIterativeEpsilon).worst_column_payoff;
    return {method, std::move(mixture), std::move(details), std::move(trace)};
  }
  if (method == "random_dictatorship") {
    // Needs rankings, so it draws from the population rather than the sample.
    Lottery lottery = random_dictatorship(population);
    auto trace = single_row_trace(seed, lottery);
    return {method, std::move(lottery), Json::object(), std::move(trace)};
  }
  throw std::invalid_argument("unknown method '" + method + "'");
}

inline std::string verdict(bool applicable, bool satisfied) {
  if (!applicable) return "not_applicable";
  return satisfied ? "satisfied" : "violated";
}

inline Json method_verdicts(const Lottery& lottery, const PopulationSummary& summary,
                            const ExperimentConfig& config) {
  Json j;
  const auto& winners = summary.majority_winners;
  j["majority"] = verdict(!winners.empty(),
                          !winners.empty() && lottery[winners.front()] >= config.verdict_threshold);
  const auto& cw = summary.condorcet_winner;
  j["condorcet"] = verdict(cw.has_value(), cw && lottery[*cw] >= config.verdict_threshold);
  j["cycle_uniformity"] =
      verdict(!cw.has_value(),
              !cw && linf_distance(lottery, summary.maximal_lottery) <= config.cycle_tolerance);
  return j;
}

inline SeedRun run_seed(const ExperimentConfig& config, const PopulationFile& population,
                        const PopulationSummary& summary, std::uint64_t seed) {
  auto dataset = sample_dataset(population.profile, config.dataset_size, seed, config.prompt_id);
  auto counts = empirical_counts(dataset);
  auto selection = selection_matrix(counts);
  std::vector<MethodResult> methods;
  Json verdicts;
  for (const auto& name : config.methods) {
    try {
      methods.push_back(run_method(name, config, population.profile, counts, selection, seed));
    } catch (const std::exception& e) {
      throw std::runtime_error("seed " + std::to_string(seed) + ", method " + name + ": " +
                               e.what());
    }
    verdicts[name] = method_verdicts(methods.back().lottery, summary, config);
  }
  return {seed, std::move(dataset), std::move(counts), std::move(selection), std::move(methods),
          std::move(verdicts)};
}

}  // namespace detail

std::vector<std::string> emit_report(const ExperimentReport& report,
                                     const std::filesystem::path& directory);

/// Runs every configured method for every seed (seeds in parallel, each on its
/// own RNG substreams). Writes the report files when output_dir is set.
inline ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  PopulationFile population = read_population(config.population_path);
  PopulationSummary summary = summarize_population(population.profile);

  const std::string hash = sha256_hex(settings_to_json(config).dump() +
                                      population_to_json(population).dump());

  std::vector<std::future<SeedRun>> workers;
  workers.reserve(config.seeds.size());
  for (std::uint64_t seed : config.seeds) {
    workers.push_back(std::async(std::launch::async, [&config, &population, &summary, seed] {
      return detail::run_seed(config, population, summary, seed);
    }));
  }
  std::vector<SeedRun> runs;
  for (auto& w : workers) runs.push_back(w.get());

  ExperimentReport report{config, std::move(population), std::move(summary), hash, std::move(runs)};
  if (!config.output_dir.empty()) emit_report(report, config.output_dir);
  return report;
}

/// Mean lottery per method over seeds.
struct ReportDigest {
  AlternativeSet alternatives;
  std::vector<std::string> methods;
  std::vector<Lottery> lotteries;

  const Lottery& lottery(const std::string& method) const {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (methods[i] == method) return lotteries[i];
    }
    throw std::invalid_argument("report has no method '" + method + "'");
  }
};

inline ReportDigest digest(const ExperimentReport& report) {
  ReportDigest d{report.alternatives(), report.config.methods, {}};
  const std::size_t m = report.alternatives().size();
  for (std::size_t i = 0; i < report.config.methods.size(); ++i) {
    std::vector<double> mean(m, 0.0);
    for (const auto& run : report.runs) {
      for (std::size_t a = 0; a < m; ++a) mean[a] += run.methods[i].lottery[a];
    }
    d.lotteries.push_back(Lottery::from_masses(report.alternatives(), std::move(mean)));
  }
  return d;
}

inline Json report_to_json(const ExperimentReport& report) {
  const auto& alts = report.alternatives();
  const std::size_t m = alts.size();
  Json j;
  j["tool"] = "mlottery";
  j["version"] = kToolVersion;
  j["config_hash"] = report.config_hash;
  j["settings"] = settings_to_json(report.config);
  j["alternatives"] = alts.labels();
  j["population"] = population_to_json(report.population);

  const auto& s = report.summary;
  Json pop;
  pop["majority_winners"] = detail::labels_json(alts, s.majority_winners);
  pop["majority_ambiguous"] = s.majority_winners.size() > 1;
  pop["condorcet_winner"] = s.condorcet_winner ? Json(alts.label(*s.condorcet_winner)) : Json();
  pop["smith_set"] = detail::labels_json(alts, s.smith_set);
  for (std::size_t a = 0; a < m; ++a) pop["borda"][alts.label(a)] = weight_to_json(s.borda[a]);
  Json margins = Json::array();
  for (std::size_t a = 0; a < m; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m; ++b) row.push_back(weight_to_json(s.margins(a, b)));
    margins.push_back(std::move(row));
  }
  pop["margins"] = std::move(margins);
  pop["maximal_lottery"] = lottery_to_json(s.maximal_lottery);
  j["population_summary"] = std::move(pop);

  j["runs"] = Json::array();
  for (const auto& run : report.runs) {
    Json r;
    r["seed"] = run.seed;
    Json strict = Json::array(), totals = Json::array();
    for (std::size_t a = 0; a < m; ++a) {
      Json srow = Json::array(), trow = Json::array();
      for (std::size_t b = 0; b < m; ++b) {
        srow.push_back(weight_to_json(run.counts.n(a, b)));
        trow.push_back(weight_to_json(run.counts.pair_total(a, b)));
      }
      strict.push_back(std::move(srow));
      totals.push_back(std::move(trow));
    }
    r["counts"] = {{"strict", std::move(strict)}, {"pair_totals", std::move(totals)}};
    Json selection = Json::array();
    for (std::size_t a = 0; a < m; ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < m; ++b) row.push_back(round_sig12(run.selection(a, b)));
      selection.push_back(std::move(row));
    }
    r["selection"] = std::move(selection);
    for (const auto& method : run.methods) {
      Json entry;
      entry["lottery"] = lottery_to_json(method.lottery);
      entry["details"] = method.details;
      r["methods"][method.method] = std::move(entry);
    }
    r["verdicts"] = run.verdicts;
    j["runs"].push_back(std::move(r));
  }

  const auto d = digest(report);
  for (std::size_t i = 0; i < d.methods.size(); ++i) {
    j["summary"][d.methods[i]] = {
        {"mean_lottery", lottery_to_json(d.lotteries[i])},
        {"argmax", alts.label(d.lotteries[i].argmax())}};
  }
  return j;
}

inline ReportDigest digest_from_json(const Json& j) {
  try {
    AlternativeSet alts(j.at("alternatives").get<std::vector<std::string>>());
    ReportDigest d{alts, {}, {}};
    for (const auto& [method, entry] : j.at("summary").items()) {
      d.methods.push_back(method);
      d.lotteries.push_back(lottery_from_json(alts, entry.at("mean_lottery")));
    }
    return d;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
}

inline ReportDigest read_report_digest(const std::string& path) {
  try {
    return digest_from_json(Json::parse(read_text_file(path)));
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

struct IiaMethodVerdict {
  std::string method;
  AltIndex argmax_small = 0;  // indices into the shared list
  AltIndex argmax_large = 0;
  bool flip = false;
  // max over shared pairs {a,b} of |π_s(a|{a,b}) − π_l(a|{a,b})|, where
  // π(a|{a,b}) = π(a)/(π(a)+π(b)) and 1/2 when both are zero.
  double conditional_shift = 0.0;
  bool stable = false;
};

struct IiaComparison {
  std::vector<std::string> shared;
  double tolerance = 0.05;
  std::vector<IiaMethodVerdict> methods;
};

/// For each method present in both reports: does restricting attention to
/// the shared alternatives give the same winner, and the same pairwise odds?
inline IiaComparison compare_iia(const ReportDigest& small, const ReportDigest& large,
                                 const std::vector<std::string>& shared, double tolerance = 0.05) {
  if (shared.empty()) throw std::invalid_argument("compare_iia: no shared alternatives");
  for (const auto& label : shared) {
    if (!small.alternatives.find(label) || !large.alternatives.find(label)) {
      throw std::invalid_argument("compare_iia: shared alternative '" + label +
                                  "' is missing from a report");
    }
  }
  IiaComparison out{shared, tolerance, {}};
  for (const auto& method : small.methods) {
    if (std::find(large.methods.begin(), large.methods.end(), method) == large.methods.end()) {
      continue;
    }
    const Lottery& ps = small.lottery(method);
    const Lottery& pl = large.lottery(method);
    auto restricted = [&](const ReportDigest& d, const Lottery& p) {
      std::vector<double> out;
      for (const auto& label : shared) out.push_back(p[d.alternatives.index(label)]);
      return out;
    };
    const auto rs = restricted(small, ps);
    const auto rl = restricted(large, pl);
    IiaMethodVerdict v;
    v.method = method;
    v.argmax_small = static_cast<AltIndex>(std::max_element(rs.begin(), rs.end()) - rs.begin());
    v.argmax_large = static_cast<AltIndex>(std::max_element(rl.begin(), rl.end()) - rl.begin());
    v.flip = v.argmax_small != v.argmax_large;
    auto conditional = [](double a, double b) { return a + b > 0.0 ? a / (a + b) : 0.5; };
    for (std::size_t a = 0; a < shared.size(); ++a) {
      for (std::size_t b = a + 1; b < shared.size(); ++b) {
        v.conditional_shift = std::max(
            v.conditional_shift, std::abs(conditional(rs[a], rs[b]) - conditional(rl[a], rl[b])));
      }
    }
    v.stable = !v.flip && v.conditional_shift <= tolerance;
    out.methods.push_back(v);
  }
  return out;
}

inline Json iia_to_json(const IiaComparison& c) {
  Json j;
  j["shared"] = c.shared;
  j["tolerance"] = c.tolerance;
  for (const auto& v : c.methods) {
    j["methods"][v.method] = {{"argmax_small", c.shared[v.argmax_small]},
                              {"argmax_large", c.shared[v.argmax_large]},
                              {"flip", v.flip},
                              {"conditional_shift", round_sig12(v.conditional_shift)},
                              {"stable", v.stable}};
  }
  return j;
}

/// Writes report.json, counts.csv, dataset_seed<S>.csv, trace_<method>_seed<S>.csv
/// and manifest.txt (SHA-256 of every other file). Returns the manifest lines.
inline std::vector<std::string> emit_report(const ExperimentReport& report,
                                            const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create '" + directory.string() + "': " + ec.message());

  std::map<std::string, std::string> files;
  files["report.json"] = report_to_json(report).dump(2) + "\n";

  std::ostringstream counts;
  counts << "seed,preferred,rejected,count,pair_total\n";
  const auto& alts = report.alternatives();
  for (const auto& run : report.runs) {
    for (std::size_t a = 0; a < alts.size(); ++a) {
      for (std::size_t b = 0; b < alts.size(); ++b) {
        if (a == b) continue;
        counts << run.seed << ',' << alts.label(a) << ',' << alts.label(b) << ','
               << format_weight(run.counts.n(a, b)) << ','
               << format_weight(run.counts.pair_total(a, b)) << '\n';
      }
    }
    std::ostringstream dataset;
    write_dataset_csv(run.dataset, dataset);
    files["dataset_seed" + std::to_string(run.seed) + ".csv"] = dataset.str();
    for (const auto& method : run.methods) {
      std::ostringstream trace;
      write_trace_csv(method.trace, alts, trace);
      files["trace_" + method.method + "_seed" + std::to_string(run.seed) + ".csv"] = trace.str();
    }
  }
  files["counts.csv"] = counts.str();

  std::vector<std::string> manifest;
  std::string manifest_text;
  for (const auto& [name, content] : files) {
    const fs::path path = directory / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    manifest.push_back(sha256_hex(content) + "  " + name);
    manifest_text += manifest.back() + "\n";
  }
  std::ofstream out(directory / "manifest.txt", std::ios::binary);
  out << manifest_text;
  if (!out) throw std::runtime_error("cannot write '" + (directory / "manifest.txt").string() + "'");
  return manifest;
}

}  // namespace mlottery
