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


#include <gtest/gtest.h>

#include <sstream>

#include "mlottery.hpp"
#include "test_support.hpp"

namespace mlottery {
namespace {

TEST(PopulationJson, RoundTrip) {
  const PopulationFile original{testing::majority_profile(), "favourite colour"};
  const Json j = population_to_json(original);
  const auto parsed = population_from_json(j);
  EXPECT_EQ(parsed.profile, original.profile);
  EXPECT_EQ(parsed.prompt, original.prompt);
  EXPECT_EQ(population_to_json(parsed).dump(), j.dump());
}

TEST(PopulationJson, WeightForms) {
  const auto j = Json::parse(R"({"alternatives": ["x", "y"],
    "groups": [{"ranking": ["x", "y"], "weight": 0.25},
               {"ranking": ["y", "x"], "weight": "3/4"},
               {"ranking": ["y", "x"], "weight": 2}]})");
  const auto p = population_from_json(j).profile;
  EXPECT_EQ(p.groups()[0].weight, Weight(1, 4));
  EXPECT_EQ(p.groups()[1].weight, Weight(3, 4));
  EXPECT_EQ(p.total_weight(), Weight(3));
  // Reparse of the serialized form is the identity.
  EXPECT_EQ(population_from_json(population_to_json({p, std::nullopt})).profile, p);
}

TEST(PopulationJson, Errors) {
  for (const char* bad : {
           R"({"groups": []})",
           R"({"alternatives": ["x", "y"], "groups": [{"ranking": ["x", "z"], "weight": 1}]})",
           R"({"alternatives": ["x", "y"], "groups": [{"ranking": ["x"], "weight": 1}]})",
           R"({"alternatives": ["x", "y"], "groups": [{"ranking": ["x", "y"], "weight": -1}]})",
           R"({"alternatives": ["x", "y"], "groups": [{"ranking": ["x", "y"], "weight": true}]})",
           R"({"alternatives": ["x", "x"], "groups": [{"ranking": ["x", "x"], "weight": 1}]})"}) {
    EXPECT_THROW(population_from_json(Json::parse(bad)), FormatError) << bad;
  }
  EXPECT_THROW(read_population("/nonexistent/population.json"), std::runtime_error);
}

TEST(DatasetCsv, RoundTrip) {
  const auto d = sample_dataset(testing::majority_profile(), 50, 3, "colors");
  std::ostringstream out;
  write_dataset_csv(d, out);
  EXPECT_EQ(out.str().substr(0, 28), "prompt_id,preferred,rejected");
  std::istringstream in(out.str());
  const auto back = read_dataset_csv(in, d.alternatives());
  EXPECT_EQ(back.records(), d.records());
}

TEST(DatasetCsv, AcceptsCrlfAndReportsLineNumbers) {
  const auto alts = testing::rgb();
  std::istringstream crlf("prompt_id,preferred,rejected\r\np,R,G\r\n");
  EXPECT_EQ(read_dataset_csv(crlf, alts).size(), 1u);

  std::istringstream unknown("prompt_id,preferred,rejected\np,R,G\np,R,Y\n");
  try {
    read_dataset_csv(unknown, alts);
    FAIL() << "expected an error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream header("a,b,c\n");
  EXPECT_THROW(read_dataset_csv(header, alts), FormatError);
  std::istringstream fields("prompt_id,preferred,rejected\np,R\n");
  EXPECT_THROW(read_dataset_csv(fields, alts), FormatError);
  std::istringstream same("prompt_id,preferred,rejected\np,R,R\n");
  EXPECT_THROW(read_dataset_csv(same, alts), FormatError);
}

TEST(DatasetCsv, RejectsCommaInPrompt) {
  const ComparisonDataset d(testing::rgb(), {{"a,b", 0, 1}});
  std::ostringstream out;
  EXPECT_THROW(write_dataset_csv(d, out), FormatError);
}

TEST(LotteryJson, RoundTripAtTwelveDigits) {
  const Lottery p(testing::rgb(), {1.0 / 3.0, 1.0 / 6.0, 0.5});
  const auto j = lottery_to_json(p);
  EXPECT_EQ(j.dump(), R"({"R":0.333333333333,"G":0.166666666667,"B":0.5})");
  const auto back = lottery_from_json(testing::rgb(), j);
  EXPECT_LE(linf_distance(back, p), 1e-12);
}

TEST(TraceCsv, Format) {
  SelfPlayTrace trace{0, {{1, {0.5, 0.5}, {0.5, 0.5}, {}}, {2, {0.25, 0.75}, {0.375, 0.625}, {}}}};
  std::ostringstream out;
  write_trace_csv(trace, AlternativeSet({"a", "b"}), out);
  EXPECT_EQ(out.str(),
            "iteration,alternative,policy_prob,mixture_prob\n"
            "1,a,0.5,0.5\n1,b,0.5,0.5\n2,a,0.25,0.375\n2,b,0.75,0.625\n");
}

}  // namespace
}  // namespace mlottery
