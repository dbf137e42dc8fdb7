// Copyright 2026 The mspider Authors
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

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "mspider/error.h"
#include "mspider/sql/evaluation.h"
#include "mspider/sql/match.h"
#include "mspider/sql/parser.h"
#include "mspider/sql/canonical.h"
#include "test_util.h"

namespace mspider::sql {
namespace {

using nlohmann::json;

// The hand oracle suite as a dataset: gold queries plus aligned
// predictions.
struct Suite {
  Dataset dataset;
  std::vector<std::string> predictions;
  json expected;
};

Suite HandSuite(std::size_t limit = SIZE_MAX) {
  Suite s;
  const json pairs = json::parse(ReadFile(testing::DataPath("oracle/pairs.json")));
  s.expected = json::parse(ReadFile(testing::DataPath("oracle/expected_pairs.json")));
  s.dataset.split = Split::kDev;
  s.dataset.schemas = testing::ToySchemas();
  for (std::size_t i = 0; i < pairs.size() && i < limit; ++i) {
    Example ex;
    ex.db_id = pairs[i]["db_id"];
    ex.question = "q";
    ex.gold_sql = pairs[i]["gold"];
    ex.example_id = pairs[i]["id"];
    s.dataset.examples.push_back(ex);
    s.predictions.push_back(pairs[i]["pred"]);
  }
  return s;
}

std::vector<std::string> Golds(const Dataset& d) {
  std::vector<std::string> out;
  for (const Example& ex : d.examples) out.push_back(ex.gold_sql);
  return out;
}

TEST_CASE("gold against itself scores 1.0") {
  const Suite s = HandSuite();
  const EvaluationReport r = EvaluateCorpus(Golds(s.dataset), s.dataset);
  CHECK(r.overall.count == static_cast<int>(s.dataset.examples.size()));
  CHECK(r.overall.accuracy() == 1.0);
  CHECK(r.unparsable_predictions == 0);
}

TEST_CASE("empty predictions score 0.0 without aborting") {
  const Suite s = HandSuite();
  const std::vector<std::string> empty(s.dataset.examples.size());
  const EvaluationReport r = EvaluateCorpus(empty, s.dataset);
  CHECK(r.overall.accuracy() == 0.0);
  CHECK(r.unparsable_predictions == r.overall.count);
}

TEST_CASE("mixed predictions match the reference counts") {
  for (std::size_t n : {std::size_t{10}, std::size_t{85}}) {
    const Suite s = HandSuite(n);
    int matched = 0;
    std::map<std::string, std::pair<int, int>> by_level;
    for (std::size_t i = 0; i < n; ++i) {
      matched += s.expected[i]["exact"].get<int>();
      auto& cell = by_level[s.expected[i]["hardness"]];
      ++cell.first;
      cell.second += s.expected[i]["exact"].get<int>();
    }
    for (unsigned jobs : {1u, 4u}) {
      const EvaluationReport r = EvaluateCorpus(s.predictions, s.dataset, {true, jobs});
      CHECK(r.overall.count == static_cast<int>(n));
      CHECK(r.overall.matched == matched);
      int total = 0;
      for (int h = 0; h < kHardnessCount; ++h) {
        const auto& cell = by_level[std::string(HardnessName(static_cast<Hardness>(h)))];
        CHECK(r.by_hardness[h].count == cell.first);
        CHECK(r.by_hardness[h].matched == cell.second);
        total += r.by_hardness[h].count;
      }
      CHECK(total == r.overall.count);
    }
  }
}

TEST_CASE("length mismatch is a data error") {
  const Suite s = HandSuite(5);
  CHECK_THROWS_AS(EvaluateCorpus({"SELECT 1"}, s.dataset), DataError);
}

TEST_CASE("unparsable gold is skipped and listed") {
  Suite s = HandSuite(3);
  s.dataset.examples[1].gold_sql = "SELECT nothing FROM nowhere";
  const EvaluationReport r = EvaluateCorpus(Golds(s.dataset), s.dataset);
  CHECK(r.overall.count == 2);
  REQUIRE(r.skipped_gold.size() == 1);
  CHECK(r.skipped_gold[0] == "p001");
}

TEST_CASE("report formats carry stable keys") {
  const Suite s = HandSuite(10);
  const EvaluationReport r = EvaluateCorpus(s.predictions, s.dataset);
  const json j = json::parse(r.ToJson(true));
  CHECK(j["mode"] == "exact_match_without_values");
  CHECK(j["overall"]["count"] == 10);
  for (const char* h : {"easy", "medium", "hard", "extra"}) CHECK(j["by_hardness"].contains(h));
  CHECK(j["per_clause"].contains("select(no AGG)"));
  CHECK(j["examples"].size() == 10);
  const std::string text = r.ToText();
  CHECK(text.find("exact match") != std::string::npos);
  CHECK(text.find("easy") != std::string::npos);
}

TEST_CASE("prediction files") {
  CHECK(ParsePredictions("a\n\nb\n") == std::vector<std::string>{"a", "", "b"});
  CHECK(ParsePredictions("a\r\nb") == std::vector<std::string>{"a", "b"});
  CHECK(ParsePredictions("").empty());
  CHECK(ParsePredictions("\n") == std::vector<std::string>{""});
}

TEST_CASE("toy fixture hardness equals the reference labels") {
  for (const char* split : {"dev", "train"}) {
    CAPTURE(split);
    const Dataset d = LoadExamples(testing::DataPath(std::string("toy/") + split + ".json"),
                                   testing::ToySchemas(), Split::kDev, Language::kEn);
    const auto expected = nlohmann::json::parse(ReadFile(
        testing::DataPath(std::string("oracle/expected_toy_") + split + "_hardness.json")));
    REQUIRE(expected.size() == d.examples.size());
    for (std::size_t i = 0; i < d.examples.size(); ++i) {
      const Example& ex = d.examples[i];
      const SqlTree tree = ParseSql(ex.gold_sql, d.schemas.at(ex.db_id));
      CAPTURE(ex.gold_sql);
      CHECK(HardnessName(ClassifyHardness(CountComponents(tree))) ==
            expected[i].get<std::string>());
    }
  }
}

}  // namespace
}  // namespace mspider::sql
