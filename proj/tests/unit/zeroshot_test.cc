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

#include "doctest.h"
#include "mspider/backend/fixture_backend.h"
#include "mspider/qa.h"
#include "mspider/util/digest.h"
#include "mspider/zeroshot/prep.h"
#include "test_util.h"

namespace mspider::zeroshot {
namespace {

using backend::FixtureBackend;

Dataset Mini(Language lang) {
  const std::string dir = "multilingual/" + std::string(LanguageCode(lang)) + "/";
  return LoadExamples(testing::DataPath(dir + "dev.json"),
                      LoadSchemas(testing::DataPath(dir + "tables.json")), Split::kDev, lang);
}

Dataset German100() {
  return LoadExamples(testing::DataPath("zeroshot/de_dev100.json"),
                      LoadSchemas(testing::DataPath("multilingual/de/tables.json")),
                      Split::kDev, Language::kDe);
}

FixtureBackend Fixture() {
  return FixtureBackend::Load(testing::DataPath("zeroshot/fixture.json"));
}

TEST_CASE("modes and jobs") {
  for (Mode m : {Mode::kDirectlyPredict, Mode::kTranslateThenPredict, Mode::kTranslateThenTrain}) {
    CHECK(ParseMode(ModeName(m)) == m);
  }
  CHECK_FALSE(ParseMode("translate").has_value());

  ZeroShotJob job;
  job.mode = Mode::kTranslateThenPredict;
  job.source = Language::kDe;
  job.target = Language::kEn;
  CHECK_NOTHROW(job.Validate());
  job.target = Language::kFr;
  CHECK_THROWS_AS(job.Validate(), ConfigError);
  job.mode = Mode::kTranslateThenTrain;
  CHECK_THROWS_AS(job.Validate(), ConfigError);
  job.source = Language::kEn;
  CHECK_NOTHROW(job.Validate());
  job.mode = Mode::kDirectlyPredict;
  CHECK_THROWS_AS(job.Validate(), ConfigError);
  job.source = job.target = Language::kZh;
  CHECK_NOTHROW(job.Validate());
}

TEST_CASE("identity translation only flips the language tag") {
  FixtureBackend identity;
  identity.set_identity_translation(true);
  const Dataset de = Mini(Language::kDe);
  const PrepResult r = PrepTranslateThenPredict(de, identity);
  CHECK(r.complete());
  Dataset expected = de;
  expected.language = Language::kEn;
  for (Example& e : expected.examples) e.language = Language::kEn;
  CHECK(r.dataset == expected);

  const PrepResult t = PrepTranslateThenTrain(Mini(Language::kEn), Language::kVi, identity);
  CHECK(t.dataset.language == Language::kVi);
  CHECK(t.dataset.schemas == Mini(Language::kEn).schemas);
}

TEST_CASE("translate-then-predict maps the German set onto the English one") {
  FixtureBackend fixture = Fixture();
  const PrepResult r = PrepTranslateThenPredict(Mini(Language::kDe), fixture);
  CHECK(r.complete());
  CHECK(r.translated_questions == 10);
  CHECK(r.dataset == Mini(Language::kEn));
  CHECK(r.dataset.examples[0].question == "How many heads of the departments are older than 56?");
  const DatabaseSchema& dm = r.dataset.schemas.at("department_management");
  CHECK(dm.table(1).display_name == "head");
  CHECK(dm.column({1, 2}).display_name == "born state");
  CHECK(dm.column({1, 2}).original_name == "born_state");
}

TEST_CASE("translate-then-train maps the English set onto the Japanese one") {
  FixtureBackend fixture = Fixture();
  const PrepResult r = PrepTranslateThenTrain(Mini(Language::kEn), Language::kJa, fixture, 3);
  CHECK(r.complete());
  CHECK(r.dataset == Mini(Language::kJa));
  CHECK(r.dataset.schemas.at("department_management").table(1).display_name == "部長");
  for (const QaFinding& f : ValidateDataset(r.dataset)) {
    CAPTURE(f.message);
    CHECK(f.severity != QaFinding::Severity::kError);
  }
  // Round trip through files.
  const Dataset reloaded =
      ParseExamples(EmitExamples(r.dataset), ParseSchemas(EmitSchemas(r.dataset.schemas)),
                    Split::kDev, Language::kJa);
  CHECK(reloaded == r.dataset);
}

TEST_CASE("100-example fixture keeps SQL and ids byte-identical") {
  const Dataset de = German100();
  REQUIRE(de.examples.size() == 100);
  FixtureBackend fixture = Fixture();
  for (unsigned jobs : {1u, 4u}) {
    CAPTURE(jobs);
    const PrepResult r = PrepTranslateThenPredict(de, fixture, jobs);
    CHECK(r.complete());
    REQUIRE(r.dataset.examples.size() == de.examples.size());
    int same = 0;
    for (std::size_t i = 0; i < de.examples.size(); ++i) {
      const Example& a = de.examples[i];
      const Example& b = r.dataset.examples[i];
      same += a.gold_sql == b.gold_sql && a.example_id == b.example_id && a.db_id == b.db_id;
      CHECK(b.question != a.question);
    }
    CHECK(same == 100);
    for (const auto& [db, schema] : de.schemas) {
      const DatabaseSchema& out = r.dataset.schemas.at(db);
      for (std::size_t t = 0; t < schema.tables().size(); ++t) {
        CHECK(out.tables()[t].original_name == schema.tables()[t].original_name);
        for (std::size_t c = 0; c < schema.tables()[t].columns.size(); ++c) {
          CHECK(out.tables()[t].columns[c].original_name ==
                schema.tables()[t].columns[c].original_name);
        }
      }
    }
  }
  CHECK(EmitExamples(PrepTranslateThenPredict(de, fixture, 1).dataset) ==
        EmitExamples(PrepTranslateThenPredict(de, fixture, 8).dataset));
}

TEST_CASE("failures are flagged and keep the original text") {
  FixtureBackend partial;
  const Dataset de = Mini(Language::kDe);
  // Translate only the first question and the "leiter" table name.
  partial.AddTranslation(de.examples[0].question, Language::kDe, Language::kEn, "How many?");
  partial.AddTranslation("leiter", Language::kDe, Language::kEn, "head");
  const PrepResult r = PrepTranslateThenPredict(de, partial, 2);
  CHECK_FALSE(r.complete());
  CHECK(r.translated_questions == 1);
  CHECK(r.flagged_examples.size() == 9);
  CHECK(r.flagged_examples.front() == "mini-001");
  CHECK(r.dataset.examples[0].question == "How many?");
  CHECK(r.dataset.examples[1].question == de.examples[1].question);
  CHECK(r.dataset.examples[1].language == Language::kEn);
  CHECK(r.errors.at("fixture_miss") > 0);
  CHECK(std::find(r.flagged_names.begin(), r.flagged_names.end(),
                  "department_management/department") != r.flagged_names.end());
  CHECK(std::find(r.flagged_names.begin(), r.flagged_names.end(),
                  "department_management/head") == r.flagged_names.end());
  for (std::size_t i = 0; i < de.examples.size(); ++i) {
    CHECK(r.dataset.examples[i].gold_sql == de.examples[i].gold_sql);
  }
}

TEST_CASE("direction preconditions") {
  FixtureBackend identity;
  identity.set_identity_translation(true);
  CHECK_THROWS_AS(PrepTranslateThenPredict(Mini(Language::kEn), identity), ConfigError);
  CHECK_THROWS_AS(PrepTranslateThenTrain(Mini(Language::kDe), Language::kJa, identity),
                  ConfigError);
  CHECK_THROWS_AS(TranslateDataset(Mini(Language::kFr), Language::kFr, identity), ConfigError);
}

TEST_CASE("job files and manifest") {
  FixtureBackend fixture = Fixture();
  const Dataset de = German100();
  ZeroShotJob job{Mode::kTranslateThenPredict, Language::kDe, Language::kEn, {}, {}};
  job.out_dir = testing::ScratchDir("zeroshot_ttp");
  const PrepResult r = PrepTranslateThenPredict(de, fixture);
  const JobManifest m = EmitJob(job, de, &r, fixture.Identity(), "dev", {{"dev.json", "x"}});
  CHECK(m.examples == 100);
  CHECK(m.backend == "fixture@zeroshot-1");
  CHECK(m.flagged_examples.empty());
  CHECK(m.files.at("dev.json") == Sha256File(job.out_dir / "dev.json"));
  CHECK(m.files.at("dev_tables.json") == Sha256File(job.out_dir / "dev_tables.json"));
  CHECK(JobManifest::Parse(ReadFile(job.out_dir / "manifest.json")) == m);
  const Dataset back = LoadExamples(job.out_dir / "dev.json",
                                    LoadSchemas(job.out_dir / "dev_tables.json"), Split::kDev,
                                    Language::kEn);
  CHECK(back == r.dataset);

  // Directly-predict writes its input back unchanged.
  ZeroShotJob direct{Mode::kDirectlyPredict, Language::kDe, Language::kDe, {}, {}};
  direct.out_dir = testing::ScratchDir("zeroshot_direct");
  const JobManifest dm = EmitJob(direct, de, nullptr, "", "dev");
  CHECK(dm.backend.empty());
  CHECK(ReadFile(direct.out_dir / "dev.json") == EmitExamples(de));
  CHECK_THROWS_AS(EmitJob(direct, de, &r, "", "dev"), ConfigError);
  CHECK_THROWS_AS(EmitJob(job, de, nullptr, "", "dev"), ConfigError);
  CHECK_THROWS_AS(JobManifest::Parse("{\"mode\": 1}"), DataError);
}

}  // namespace
}  // namespace mspider::zeroshot
