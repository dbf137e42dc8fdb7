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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <vector>

#include "mspider/backend/cached_backend.h"
#include "mspider/backend/fixture_backend.h"
#include "mspider/dataset_io.h"
#include "mspider/linker/link_score.h"
#include "mspider/save/synthesize.h"
#include "mspider/sql/canonical.h"
#include "mspider/sql/evaluation.h"
#include "mspider/sql/match.h"
#include "mspider/sql/parser.h"
#include "mspider/util/digest.h"

namespace mspider {
namespace {

namespace fs = std::filesystem;

fs::path Data(const std::string& rel) { return fs::path(MSPIDER_TEST_DATA_DIR) / rel; }

const Dataset& ToyDev() {
  static const Dataset d = LoadExamples(Data("toy/dev.json"), LoadSchemas(Data("toy/tables.json")),
                                        Split::kDev, Language::kEn);
  return d;
}

void BM_LoadToyCorpus(benchmark::State& state) {
  for (auto _ : state) {
    const SchemaCollection s = LoadSchemas(Data("toy/tables.json"));
    benchmark::DoNotOptimize(LoadExamples(Data("toy/dev.json"), s, Split::kDev, Language::kEn));
  }
}
BENCHMARK(BM_LoadToyCorpus);

void BM_ParseSql(benchmark::State& state) {
  const Dataset& d = ToyDev();
  std::size_t i = 0;
  for (auto _ : state) {
    const Example& e = d.examples[i++ % d.examples.size()];
    benchmark::DoNotOptimize(sql::ParseSql(e.gold_sql, d.SchemaFor(e)));
  }
}
BENCHMARK(BM_ParseSql);

void BM_ExactMatch(benchmark::State& state) {
  const Dataset& d = ToyDev();
  std::vector<sql::CanonicalSql> canon;
  for (const Example& e : d.examples) {
    canon.push_back(sql::Canonicalize(sql::ParseSql(e.gold_sql, d.SchemaFor(e)), d.SchemaFor(e)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = canon[i++ % canon.size()];
    benchmark::DoNotOptimize(sql::ExactMatch(c, c));
  }
}
BENCHMARK(BM_ExactMatch);

void BM_EvaluateCorpus(benchmark::State& state) {
  const Dataset& d = ToyDev();
  std::vector<std::string> preds;
  for (const Example& e : d.examples) preds.push_back(e.gold_sql);
  sql::EvaluationOptions options;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sql::EvaluateCorpus(preds, d, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(preds.size()));
}
BENCHMARK(BM_EvaluateCorpus)->Arg(1)->Arg(4);

void BM_LinkScore(benchmark::State& state) {
  const Language lang = static_cast<Language>(state.range(0));
  const std::string dir = "multilingual/" + std::string(LanguageCode(lang)) + "/";
  const Dataset d = LoadExamples(Data(dir + "dev.json"), LoadSchemas(Data(dir + "tables.json")),
                                 Split::kDev, lang);
  for (auto _ : state) benchmark::DoNotOptimize(linker::ScoreCorpus(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.examples.size()));
  state.SetLabel(std::string(LanguageCode(lang)));
}
BENCHMARK(BM_LinkScore)
    ->Arg(static_cast<int>(Language::kEn))
    ->Arg(static_cast<int>(Language::kDe))
    ->Arg(static_cast<int>(Language::kZh));

void BM_CachedTranslate(benchmark::State& state) {
  backend::FixtureBackend fixture;
  fixture.set_identity_translation(true);
  backend::CachedBackend cache(fixture);
  const backend::TranslationRequest req{"head of department from (department_management)",
                                        Language::kEn, Language::kDe};
  cache.Translate(req);
  for (auto _ : state) benchmark::DoNotOptimize(cache.Translate(req));
}
BENCHMARK(BM_CachedTranslate)->Threads(1)->Threads(4);

void BM_Sha256(benchmark::State& state) {
  const std::string text(static_cast<std::size_t>(state.range(0)), 'x');
  for (auto _ : state) benchmark::DoNotOptimize(Sha256Hex(text));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sha256)->Arg(64)->Arg(4096);

void BM_Synthesize(benchmark::State& state) {
  const Dataset& d = ToyDev();
  save::AugmentedSchemaSet set;
  for (const auto& [db, schema] : d.schemas) {
    for (const auto& item : save::SchemaItems(schema)) {
      set.databases[db][item.Key()] = {{item.display_name + " x", 0.9, 0.9, {}}};
    }
  }
  const save::SynthesisPolicy policy{2, 0.5, 1};
  for (auto _ : state) benchmark::DoNotOptimize(save::SynthesizeExamples(d, set, policy));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.examples.size()));
}
BENCHMARK(BM_Synthesize);

}  // namespace
}  // namespace mspider

BENCHMARK_MAIN();
