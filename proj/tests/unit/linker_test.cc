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
#include "mspider/linker/link_score.h"
#include "test_util.h"

namespace mspider::linker {
namespace {

using Tokens = std::vector<std::string>;

Dataset MiniDev(Language lang) {
  const std::string dir = "multilingual/" + std::string(LanguageCode(lang)) + "/";
  return LoadExamples(testing::DataPath(dir + "dev.json"),
                      LoadSchemas(testing::DataPath(dir + "tables.json")), Split::kDev, lang);
}

// Straightforward restatement over ASCII words, used as the brute-force
// reference.
std::size_t Lev(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
    }
  }
  return d[a.size()][b.size()];
}

double BruteForce(const Tokens& item, const Tokens& question) {
  std::string target;
  for (const auto& t : item) target += (target.empty() ? "" : " ") + t;
  double best = 0.0;
  for (std::size_t start = 0; start < question.size(); ++start) {
    std::string span;
    for (std::size_t n = 1; n <= item.size() + 1 && start + n <= question.size(); ++n) {
      span += (n == 1 ? "" : " ") + question[start + n - 1];
      const double len = static_cast<double>(std::max(span.size(), target.size()));
      best = std::max(best, 1.0 - static_cast<double>(Lev(span, target)) / len);
    }
  }
  return best;
}

TEST_CASE("word tokenization") {
  CHECK(Tokenize("List all heads", Language::kEn) == Tokens{"list", "all", "heads"});
  CHECK(Tokenize("Wie viele LEITER?", Language::kDe) == Tokens{"wie", "viele", "leiter"});
  CHECK(Tokenize("Straße", Language::kDe) == Tokens{"strasse"});
  CHECK(Tokenize("  ¿Cuántos?  ", Language::kEs) == Tokens{"cuántos"});
  CHECK(Tokenize("", Language::kFr).empty());
}

TEST_CASE("character tokenization") {
  // Four characters: four unigrams and three bigrams.
  CHECK(Tokenize("部门预算", Language::kZh) ==
        Tokens{"部", "门", "预", "算", "部门", "门预", "预算"});
  // Punctuation splits runs; the Latin value stays one token.
  CHECK(Tokenize("California州の部長。", Language::kJa) ==
        Tokens{"california", "州", "の", "部", "長", "州の", "の部", "部長"});
  CHECK(MatchUnits("部長ID", Language::kJa) == Tokens{"部", "長", "id"});
}

TEST_CASE("item scores") {
  const Tokens q = MatchUnits("List all record companies and their founders", Language::kEn);
  CHECK(FuzzyItemScore("record companies", q, Language::kEn) == 1.0);
  CHECK(FuzzyItemScore("Record Companies", q, Language::kEn) == 1.0);
  // Best span "record companies": three edits over sixteen characters.
  const ItemMatch m = MatchItem("record company", q, Language::kEn);
  CHECK(m.score == doctest::Approx(13.0 / 16.0));
  CHECK(m.span == "record companies");
  CHECK(FuzzyItemScore("xyz", MatchUnits("aaa bbb", Language::kEn), Language::kEn) == 0.0);
  CHECK(FuzzyItemScore("head", {}, Language::kEn) == 0.0);
  CHECK_THROWS(FuzzyItemScore("", q, Language::kEn));

  const Tokens zh = MatchUnits("每种宠物的类型", Language::kZh);
  CHECK(FuzzyItemScore("宠物", zh, Language::kZh) == 1.0);
  // Window 宠物的类型 shares two of its four bigrams with 宠物类型 (three).
  CHECK(FuzzyItemScore("宠物类型", zh, Language::kZh) == doctest::Approx(4.0 / 7.0));
  CHECK(FuzzyItemScore("创建年份", MatchUnits("哪一年成立的部门最多", Language::kZh),
                       Language::kZh) == 0.0);
}

TEST_CASE("item scores equal brute force over random word strings") {
  std::mt19937 rng(11);
  const Tokens vocab = {"a", "ab", "abc", "b", "ba", "cab", "c", "bc", "acb"};
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Tokens item(1 + trial % 3), question(trial % 9);
    for (auto& t : item) t = vocab[pick(rng)];
    for (auto& t : question) t = vocab[pick(rng)];
    std::string name;
    for (const auto& t : item) name += t + " ";
    const double s = FuzzyItemScore(name, question, Language::kEn);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
    const bool verbatim =
        std::search(question.begin(), question.end(), item.begin(), item.end()) !=
        question.end();
    CHECK(s == doctest::Approx(verbatim ? 1.0 : BruteForce(item, question)));
  }
}

TEST_CASE("example scores") {
  const DatabaseSchema& dm = testing::ToySchema("department_management");
  Example ex;
  ex.example_id = "e";
  ex.db_id = dm.db_id();
  ex.gold_sql = "SELECT count(*) FROM department";
  ex.question = "How many department rows?";
  CHECK(ScoreExample(ex, dm).score == 1.0);

  // One verbatim item and one with nothing in common.
  ex.gold_sql = "SELECT age FROM head";
  ex.question = "head";
  const ExampleLinkScore s = ScoreExample(ex, dm);
  REQUIRE(s.items.size() == 2);
  CHECK(s.items[0].item == "head");
  CHECK(s.items[1].item == "head.age");
  CHECK(s.score == doctest::Approx(0.5));

  ex.gold_sql = "SELECT nothing FROM head";
  CHECK(ScoreExample(ex, dm).skipped);
}

TEST_CASE("appending an item's name never lowers the score") {
  for (Language lang : kDatasetLanguages) {
    const Dataset d = MiniDev(lang);
    for (const Example& ex : d.examples) {
      const DatabaseSchema& schema = d.SchemaFor(ex);
      const ExampleLinkScore base = ScoreExample(ex, schema);
      for (const ItemScore& item : base.items) {
        Example longer = ex;
        longer.question += " " + item.display_name;
        const ExampleLinkScore after = ScoreExample(longer, schema);
        CAPTURE(item.display_name);
        CHECK(after.score >= base.score);
        for (const ItemScore& a : after.items) {
          if (a.item == item.item) CHECK(a.score == 1.0);
        }
      }
    }
  }
}

TEST_CASE("corpus scores on the multilingual mini dev set") {
  LinkReport report;
  for (Language lang : kDatasetLanguages) {
    const Dataset d = MiniDev(lang);
    const CorpusLinkScore c = ScoreCorpus(d, 4);
    CHECK(c.scored == 10);
    CHECK(c.skipped.empty());
    CHECK(c.mean >= 0.0);
    CHECK(c.mean <= 1.0);
    double sum = 0.0;
    for (const auto& e : c.examples) sum += e.score;
    CHECK(c.mean == doctest::Approx(sum / 10));

    Dataset shuffled = d;
    std::mt19937 rng(3);
    std::shuffle(shuffled.examples.begin(), shuffled.examples.end(), rng);
    CHECK(ScoreCorpus(shuffled, 1).mean == c.mean);
    report.corpora.push_back(c);
  }
  MESSAGE(report.ToText());
  const auto j = nlohmann::json::parse(report.ToJson(true));
  CHECK(j["version"] == kLinkScoreVersion);
  CHECK(j["languages"].size() == 7);
  CHECK(j["languages"][0]["detail"].size() == 10);
}

}  // namespace
}  // namespace mspider::linker
