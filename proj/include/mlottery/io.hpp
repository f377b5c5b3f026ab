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

// File formats.
//
//   population  JSON  {"alternatives": [..], "groups": [{"ranking": [..], "weight": w}],
//                      "prompt": "..." (optional, metadata only)}
//               w is an integer, a decimal (read exactly), or a string "p/q".
//   dataset     CSV   prompt_id,preferred,rejected   (labels, LF endings)
//   lottery     JSON  {label: probability}, 12 significant digits
//   rewards     JSON  {label: reward}
//   trace       CSV   iteration,alternative,policy_prob,mixture_prob

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlottery/btl.hpp"
#include "mlottery/dataset.hpp"
#include "mlottery/lottery.hpp"
#include "mlottery/profile.hpp"
#include "mlottery/selfplay.hpp"
#include "mlottery/weight.hpp"

namespace mlottery {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rounds to 12 significant digits; the JSON writer then prints the shortest
// representation of the rounded value.
inline double round_sig12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format_sig12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline Json weight_to_json(const Weight& w) {
  if (w.denominator() == 1) return Json(w.numerator());
  return Json(format_weight(w));
}

inline Weight weight_from_json(const Json& j) {
  if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
  if (j.is_number_float()) {
    // Shortest round-trip text is what the author wrote for any ordinary decimal.
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    if (ec != std::errc{}) throw FormatError("weight: cannot format number");
    return parse_weight(std::string_view(buf, static_cast<std::size_t>(end - buf)));
  }
  if (j.is_string()) return parse_weight(j.get<std::string>());
  throw FormatError("weight must be a number or a \"p/q\" string");
}

struct PopulationFile {
  PreferenceProfile profile;
  std::optional<std::string> prompt;
};

inline PopulationFile population_from_json(const Json& j) {
  try {
    AlternativeSet alternatives(j.at("alternatives").get<std::vector<std::string>>());
    std::vector<RankingGroup> groups;
    for (const auto& g : j.at("groups")) {
      RankingGroup group{{}, weight_from_json(g.at("weight"))};
      for (const auto& label : g.at("ranking")) {
        group.ranking.push_back(alternatives.index(label.get<std::string>()));
      }
      groups.push_back(std::move(group));
    }
    std::optional<std::string> prompt;
    if (j.contains("prompt")) prompt = j.at("prompt").get<std::string>();
    return {PreferenceProfile(std::move(alternatives), std::move(groups)), std::move(prompt)};
  } catch (const Json::exception& e) {
    throw FormatError(std::string("population: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("population: ") + e.what());
  }
}

inline Json population_to_json(const PopulationFile& population) {
  const auto& profile = population.profile;
  Json j;
  j["alternatives"] = profile.alternatives().labels();
  j["groups"] = Json::array();
  for (const auto& g : profile.groups()) {
    Json group;
    Json ranking = Json::array();
    for (AltIndex a : g.ranking) ranking.push_back(profile.alternatives().label(a));
    group["ranking"] = std::move(ranking);
    group["weight"] = weight_to_json(g.weight);
    j["groups"].push_back(std::move(group));
  }
  if (population.prompt) j["prompt"] = *population.prompt;
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PopulationFile read_population(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  try {
    return population_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline Json lottery_to_json(const Lottery& lottery) {
  Json j = Json::object();
  for (std::size_t a = 0; a < lottery.size(); ++a) {
    j[lottery.alternatives().label(a)] = round_sig12(lottery[a]);
  }
  return j;
}

inline Lottery lottery_from_json(const AlternativeSet& alternatives, const Json& j) {
  std::vector<double> p(alternatives.size(), 0.0);
  for (const auto& [label, value] : j.items()) p[alternatives.index(label)] = value.get<double>();
  return Lottery(alternatives, std::move(p));
}

inline Json rewards_to_json(const RewardVector& rewards) {
  Json j = Json::object();
  for (std::size_t a = 0; a < rewards.values.size(); ++a) {
    j[rewards.alternatives.label(a)] = round_sig12(rewards.values[a]);
  }
  return j;
}

namespace detail {

inline void check_csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") != std::string::npos) {
    throw FormatError("CSV field may not contain commas, quotes or newlines: '" + field + "'");
  }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

inline void write_dataset_csv(const ComparisonDataset& data, std::ostream& out) {
  out << "prompt_id,preferred,rejected\n";
  for (const auto& r : data.records()) {
    detail::check_csv_field(r.prompt_id);
    out << r.prompt_id << ',' << data.alternatives().label(r.preferred) << ','
        << data.alternatives().label(r.rejected) << '\n';
  }
}

// Labels must belong to `alternatives`. Errors name the 1-based line.
inline ComparisonDataset read_dataset_csv(std::istream& in, const AlternativeSet& alternatives) {
  std::string line;
  std::size_t line_no = 0;
  auto strip = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  if (!std::getline(in, line)) throw FormatError("dataset: missing header");
  ++line_no;
  strip(line);
  if (line != "prompt_id,preferred,rejected") {
    throw FormatError("dataset: expected header 'prompt_id,preferred,rejected'");
  }
  std::vector<ComparisonRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    strip(line);
    if (line.empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 3) {
      throw FormatError("dataset line " + std::to_string(line_no) + ": expected 3 fields");
    }
    auto preferred = alternatives.find(fields[1]);
    auto rejected = alternatives.find(fields[2]);
    if (!preferred || !rejected) {
      throw FormatError("dataset line " + std::to_string(line_no) + ": unknown alternative");
    }
    if (*preferred == *rejected) {
      throw FormatError("dataset line " + std::to_string(line_no) + ": preferred equals rejected");
    }
    records.push_back({fields[0], *preferred, *rejected});
  }
  return ComparisonDataset(alternatives, std::move(records));
}

inline void write_trace_csv(const SelfPlayTrace& trace, const AlternativeSet& alternatives,
                            std::ostream& out) {
  out << "iteration,alternative,policy_prob,mixture_prob\n";
  for (const auto& row : trace.rows) {
    for (std::size_t a = 0; a < alternatives.size(); ++a) {
      detail::check_csv_field(alternatives.label(a));
      out << row.iteration << ',' << alternatives.label(a) << ',' << format_sig12(row.policy[a])
          << ',' << format_sig12(row.mixture[a]) << '\n';
    }
  }
}

}  // namespace mlottery
