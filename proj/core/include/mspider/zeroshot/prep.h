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

#ifndef MSPIDER_ZEROSHOT_PREP_H_
#define MSPIDER_ZEROSHOT_PREP_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mspider/backend/backend.h"
#include "mspider/dataset.h"

namespace mspider::zeroshot {

enum class Mode { kDirectlyPredict, kTranslateThenPredict, kTranslateThenTrain };

// "directly_predict", "translate_then_predict", "translate_then_train".
std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Translate-then-predict moves a target-language evaluation set into
// English; translate-then-train moves the English training set into the
// target language. Directly-predict consumes data as-is.
struct ZeroShotJob {
  Mode mode = Mode::kDirectlyPredict;
  Language source = Language::kEn;
  Language target = Language::kEn;
  std::map<std::string, std::filesystem::path> inputs;  // name -> path
  std::filesystem::path out_dir;

  // Throws ConfigError when the languages do not fit the mode.
  void Validate() const;
  // Language of the data this job produces.
  Language output_language() const;
};

struct PrepResult {
  Dataset dataset;
  int translated_questions = 0;
  int translated_names = 0;
  // Examples and schema items ("db/table", "db/table.column") whose
  // translation failed; their original text is kept.
  std::vector<std::string> flagged_examples;
  std::vector<std::string> flagged_names;
  std::map<std::string, int> errors;  // BackendErrorKindName -> count

  bool complete() const { return flagged_examples.empty() && flagged_names.empty(); }
};

// Translates questions and schema display names from dataset.language into
// `target`. Gold SQL, original names, ids and order are untouched. Each
// distinct display name is translated once. `jobs` bounds concurrent
// requests (0 = hardware concurrency).
PrepResult TranslateDataset(const Dataset& dataset, Language target,
                            backend::Backend& backend, unsigned jobs = 1);

// Throws ConfigError when dataset.language is English.
PrepResult PrepTranslateThenPredict(const Dataset& dataset, backend::Backend& backend,
                                    unsigned jobs = 1);
// Throws ConfigError unless dataset.language is English.
PrepResult PrepTranslateThenTrain(const Dataset& dataset, Language target,
                                  backend::Backend& backend, unsigned jobs = 1);

struct JobManifest {
  std::string tool_version;
  Mode mode = Mode::kDirectlyPredict;
  Language source = Language::kEn;
  Language target = Language::kEn;
  std::string backend;  // empty for directly-predict
  int examples = 0;
  std::vector<std::string> flagged_examples;
  std::vector<std::string> flagged_names;
  std::map<std::string, std::string> inputs;  // name -> sha256
  std::map<std::string, std::string> files;   // name -> sha256

  std::string ToJson() const;
  static JobManifest Parse(std::string_view json_text,
                           const std::string& source = "<manifest>");
  bool operator==(const JobManifest&) const = default;
};

// Writes `<stem>.json`, `<stem>_tables.json` and manifest.json into
// job.out_dir. `result` is null for directly-predict, where `input` is
// written back unchanged.
JobManifest EmitJob(const ZeroShotJob& job, const Dataset& input, const PrepResult* result,
                    const std::string& backend_identity, const std::string& stem,
                    std::map<std::string, std::string> input_digests = {});

}  // namespace mspider::zeroshot

#endif  // MSPIDER_ZEROSHOT_PREP_H_
