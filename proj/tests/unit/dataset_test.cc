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

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "mspider/error.h"
#include "mspider/qa.h"
#include "mspider/stats.h"
#include "test_util.h"

namespace mspider {
namespace {

using nlohmann::json;

Dataset ToyDev() {
  return LoadExamples(testing::DataPath("toy/dev.json"), testing::ToySchemas(), Split::kDev,
                      Language::kEn);
}

std::string OneDbTables() {
  return R"([{"db_id": "d", "table_names": ["t", "u"], "table_names_original": ["t", "u"],
    "column_names": [[-1, "*"], [0, "a"], [0, "b"], [1, "c"], [1, "d"], [1, "e"]],
    "column_names_original": [[-1, "*"], [0, "a"], [0, "b"], [1, "c"], [1, "d"], [1, "e"]],
    "column_types": ["text", "number", "text", "number", "text", "time"],
    "primary_keys": [1, 3], "foreign_keys": [[3, 1]]}])";
}

TEST_CASE("one database with two tables and five columns") {
  const SchemaCollection s = ParseSchemas(OneDbTables());
  REQUIRE(s.size() == 1);
  const DatabaseSchema& d = s.at("d");
  CHECK(d.tables().size() == 2);
  CHECK(d.column_count() == 6);
  CHECK(d.column(d.FromGlobal(5)).type == ColumnType::kTime);
  REQUIRE(d.foreign_keys().size() == 1);
  CHECK(d.GlobalIndex(d.foreign_keys()[0].first) == 3);
}

TEST_CASE("schema file errors") {
  std::string bad = OneDbTables();
  bad.replace(bad.rfind("[1, \"e\"]"), 8, "[7, \"e\"]");
  CHECK_THROWS_AS(ParseSchemas(bad), DataError);

  const std::string dup = "[" + OneDbTables().substr(1, OneDbTables().size() - 2) + "," +
                          OneDbTables().substr(1);
  CHECK_THROWS_AS(ParseSchemas(dup), DataError);

  try {
    ParseSchemas("[{\"db_id\": }]", "broken.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "broken.json");
    CHECK(e.offset() == 12);
  }
}

TEST_CASE("toy collection") {
  CHECK(testing::ToySchemas().size() == 4);
  for (const auto& [id, schema] : testing::ToySchemas()) CHECK_NOTHROW(schema.Validate());
}

TEST_CASE("examples: ids, missing databases, empty files") {
  const Dataset dev = ToyDev();
  CHECK(dev.examples.size() == 32);
  CHECK(dev.examples[0].example_id == "dev-000000");
  CHECK(dev.examples[31].example_id == "dev-000031");
  CHECK(std::all_of(dev.examples.begin(), dev.examples.end(),
                    [](const Example& e) { return e.gold_parsable; }));

  const Dataset empty = ParseExamples("", testing::ToySchemas(), Split::kDev, Language::kEn);
  CHECK(empty.examples.empty());

  try {
    ParseExamples(R"([{"db_id": "nonexistent", "question": "q", "query": "SELECT 1"},
                      {"db_id": "pets_1", "question": "q", "query": "SELECT * FROM pets"}])",
                  testing::ToySchemas(), Split::kDev, Language::kEn);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(e.offending() == std::vector<std::string>{"dev-000000"});
  }
}

TEST_CASE("unparsable gold is retained with a flag") {
  const Dataset d = ParseExamples(
      R"([{"db_id": "pets_1", "question": "q", "query": "SELECT chief FROM pets"}])",
      testing::ToySchemas(), Split::kDev, Language::kEn);
  REQUIRE(d.examples.size() == 1);
  CHECK_FALSE(d.examples[0].gold_parsable);
}

TEST_CASE("emit then load round-trips") {
  const Dataset dev = ToyDev();
  const std::string text = EmitExamples(dev);
  const Dataset again = ParseExamples(text, dev.schemas, Split::kDev, Language::kEn);
  CHECK(again == dev);
  CHECK(EmitExamples(again) == text);

  const std::string schemas = EmitSchemas(testing::ToySchemas());
  CHECK(ParseSchemas(schemas) == testing::ToySchemas());
}

TEST_CASE("statistics of the toy fixture equal the hand count") {
  const Dataset dev = ToyDev();
  const DatasetStats s = ComputeStats(dev);
  CHECK(s.questions == 32);
  CHECK(s.databases == 4);
  CHECK(s.tables == 3 + 4 + 3 + 4);
  CHECK(s.columns == 13 + 21 + 14 + 17);
  CHECK(s.per_language.at("en") == 32);
  CHECK(s.unparsable_gold == 0);

  const Dataset train = LoadExamples(testing::DataPath("toy/train.json"), testing::ToySchemas(),
                                     Split::kTrain, Language::kEn);
  const Dataset* both[] = {&train, &dev};
  const DatasetStats all = ComputeStats(both);
  CHECK(all.questions == 52);
  CHECK(all.databases == 4);
  CHECK(all.per_split.at("train") == 20);
  CHECK(all.distinct_sql == 51);  // "How many singers" appears in both splits

  const DatasetStats zero = ComputeStats(Dataset{});
  CHECK(zero == DatasetStats{});
}

TEST_CASE("statistics ignore example order") {
  Dataset dev = ToyDev();
  const DatasetStats before = ComputeStats(dev);
  std::mt19937 rng(7);
  std::shuffle(dev.examples.begin(), dev.examples.end(), rng);
  CHECK(ComputeStats(dev) == before);
}

TEST_CASE("qa findings") {
  const DatabaseSchema& dm = testing::ToySchema("department_management");
  Example ex;
  ex.example_id = "x";
  ex.db_id = "department_management";
  ex.question = "Who leads the department?";
  ex.gold_sql = "SELECT chief FROM department";
  auto f = ValidateExample(ex, dm);
  REQUIRE(f.size() == 1);
  CHECK(f[0].code == QaFinding::Code::kUnknownColumn);
  CHECK(f[0].severity == QaFinding::Severity::kError);
  CHECK(f[0].example_id == "x");

  ex.gold_sql = "SELECT name FROM chiefs";
  CHECK(ValidateExample(ex, dm)[0].code == QaFinding::Code::kUnknownTable);
  ex.gold_sql = "SELECT name FROM";
  CHECK(ValidateExample(ex, dm)[0].code == QaFinding::Code::kUnparsableSql);

  ex.gold_sql = "SELECT name FROM head WHERE born_state = 'Tokyo'";
  ex.question = "Which heads were born in TOKYO?";
  CHECK(ValidateExample(ex, dm).empty());
  ex.question = "Which heads were born in Osaka?";
  f = ValidateExample(ex, dm);
  REQUIRE(f.size() == 1);
  CHECK(f[0].code == QaFinding::Code::kMissingValueLiteral);
  CHECK(f[0].severity == QaFinding::Severity::kWarning);

  // Numbers are exempt, LIKE wildcards are ignored.
  ex.gold_sql = "SELECT name FROM head WHERE age = '56' AND name LIKE '%Ha%'";
  ex.question = "heads named ha";
  CHECK(ValidateExample(ex, dm).empty());
}

TEST_CASE("shipped toy fixtures have no error findings") {
  for (const char* file : {"toy/dev.json", "toy/train.json"}) {
    const Dataset d = LoadExamples(testing::DataPath(file), testing::ToySchemas(), Split::kDev,
                                   Language::kEn);
    for (const QaFinding& f : ValidateDataset(d)) {
      CAPTURE(f.message);
      CHECK(f.severity != QaFinding::Severity::kError);
    }
  }
}

TEST_CASE("alignment") {
  const Dataset a = ToyDev();
  Dataset b = a;
  CHECK(AlignmentMismatches(a, b).empty());
  b.examples[3].example_id = "other";
  b.examples.pop_back();
  CHECK(AlignmentMismatches(a, b) == std::vector<std::string>{"dev-000003", "dev-000031"});
}

}  // namespace
}  // namespace mspider
