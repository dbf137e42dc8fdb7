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

#include "mspider/zeroshot/prep.h"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"
#include "mspider/error.h"
#include "mspider/util/digest.h"
#include "mspider/util/parallel.h"
#include "mspider/version.h"

namespace mspider::zeroshot {
namespace {

using json = nlohmann::json;
using backend::BackendError;

constexpr std::pair<Mode, std::string_view> kModes[] = {
    {Mode::kDirectlyPredict, "directly_predict"},
    {Mode::kTranslateThenPredict, "translate_then_predict"},
    {Mode::kTranslateThenTrain, "translate_then_train"},
};

// Outcome of one translation request.
struct Slot {
  std::optional<std::string> text;
  std::optional<BackendError::Kind> error;
};

std::vector<Slot> TranslateAll(const std::vector<std::string>& texts, Language source,
                               Language target, backend::Backend& backend, unsigned jobs) {
  std::vector<Slot> out(texts.size());
  ParallelFor(texts.size(), jobs, [&](std::size_t i) {
    if (texts[i].empty()) return;
    try {
      out[i].text = backend.Translate({texts[i], source, target});
    } catch (const BackendError& e) {
      out[i].error = e.kind();
    }
  });
  return out;
}

void CountError(PrepResult& r, const Slot& s) {
  if (s.error) ++r.errors[BackendErrorKindName(*s.error)];
}

}  // namespace

std::string_view ModeName(Mode mode) {
  for (const auto& [m, name] : kModes) {
    if (m == mode) return name;
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view name) {
  for (const auto& [m, n] : kModes) {
    if (n == name) return m;
  }
  return std::nullopt;
}

void ZeroShotJob::Validate() const {
  switch (mode) {
    case Mode::kDirectlyPredict:
      if (source != target) {
        throw ConfigError("directly_predict reads and writes one language");
      }
      break;
    case Mode::kTranslateThenPredict:
      if (target != Language::kEn || source == Language::kEn) {
        throw ConfigError("translate_then_predict translates a non-English set into English");
      }
      break;
    case Mode::kTranslateThenTrain:
      if (source != Language::kEn || target == Language::kEn) {
        throw ConfigError("translate_then_train translates the English set into another language");
      }
      break;
  }
}

Language ZeroShotJob::output_language() const { return target; }

PrepResult TranslateDataset(const Dataset& dataset, Language target,
                            backend::Backend& backend, unsigned jobs) {
  if (dataset.language == target) {
    throw ConfigError("dataset is already in " + std::string(LanguageCode(target)));
  }
  const Language source = dataset.language;
  PrepResult r;
  r.dataset = dataset;
  r.dataset.language = target;

  std::vector<std::string> questions;
  questions.reserve(dataset.examples.size());
  for (const Example& e : dataset.examples) questions.push_back(e.question);
  const std::vector<Slot> q = TranslateAll(questions, source, target, backend, jobs);
  for (std::size_t i = 0; i < q.size(); ++i) {
    Example& e = r.dataset.examples[i];
    e.language = target;
    if (q[i].text) {
      e.question = *q[i].text;
      ++r.translated_questions;
    } else if (!e.question.empty()) {
      r.flagged_examples.push_back(e.example_id);
      CountError(r, q[i]);
    }
  }

  std::set<std::string> distinct;
  for (const auto& [db, schema] : dataset.schemas) {
    for (const TableDef& t : schema.tables()) {
      distinct.insert(t.display_name);
      for (const ColumnDef& c : t.columns) distinct.insert(c.display_name);
    }
  }
  const std::vector<std::string> names(distinct.begin(), distinct.end());
  const std::vector<Slot> n = TranslateAll(names, source, target, backend, jobs);
  std::map<std::string, const Slot*> by_name;
  for (std::size_t i = 0; i < names.size(); ++i) {
    by_name[names[i]] = &n[i];
    CountError(r, n[i]);
  }

  for (auto& [db, schema] : r.dataset.schemas) {
    const DatabaseSchema before = schema;
    for (int t = 0; t < static_cast<int>(before.tables().size()); ++t) {
      const TableDef& table = before.table(t);
      auto apply = [&](const std::string& display, const std::string& key, auto&& rename) {
        const Slot& s = *by_name.at(display);
        if (s.text) {
          rename(*s.text);
          ++r.translated_names;
        } else if (!display.empty()) {
          r.flagged_names.push_back(db + "/" + key);
        }
      };
      apply(table.display_name, table.original_name, [&](const std::string& text) {
        schema.RenameTable(t, table.original_name, text);
      });
      for (int c = 0; c < static_cast<int>(table.columns.size()); ++c) {
        const ColumnDef& col = table.columns[c];
        apply(col.display_name, table.original_name + "." + col.original_name,
              [&](const std::string& text) {
                schema.RenameColumn({t, c}, col.original_name, text);
              });
      }
    }
  }
  return r;
}

PrepResult PrepTranslateThenPredict(const Dataset& dataset, backend::Backend& backend,
                                    unsigned jobs) {
  if (dataset.language == Language::kEn) {
    throw ConfigError("translate_then_predict needs a non-English dataset");
  }
  return TranslateDataset(dataset, Language::kEn, backend, jobs);
}

PrepResult PrepTranslateThenTrain(const Dataset& dataset, Language target,
                                  backend::Backend& backend, unsigned jobs) {
  if (dataset.language != Language::kEn) {
    throw ConfigError("translate_then_train needs the English dataset");
  }
  return TranslateDataset(dataset, target, backend, jobs);
}

std::string JobManifest::ToJson() const {
  json root = {{"tool", "mspider"},
               {"tool_version", tool_version},
               {"mode", ModeName(mode)},
               {"source", LanguageCode(source)},
               {"target", LanguageCode(target)},
               {"backend", backend},
               {"examples", examples},
               {"flagged_examples", flagged_examples},
               {"flagged_names", flagged_names},
               {"inputs", inputs},
               {"files", files}};
  return root.dump(1) + "\n";
}

JobManifest JobManifest::Parse(std::string_view json_text, const std::string& source) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.byte, e.what());
  }
  JobManifest m;
  try {
    m.tool_version = root.at("tool_version").get<std::string>();
    const auto mode = ParseMode(root.at("mode").get<std::string>());
    if (!mode) throw DataError(source + ": unknown mode");
    m.mode = *mode;
    m.source = LanguageOrThrow(root.at("source").get<std::string>());
    m.target = LanguageOrThrow(root.at("target").get<std::string>());
    m.backend = root.at("backend").get<std::string>();
    m.examples = root.at("examples").get<int>();
    m.flagged_examples = root.at("flagged_examples").get<std::vector<std::string>>();
    m.flagged_names = root.at("flagged_names").get<std::vector<std::string>>();
    m.inputs = root.at("inputs").get<std::map<std::string, std::string>>();
    m.files = root.at("files").get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw DataError(source + ": " + e.what());
  } catch (const ConfigError& e) {
    throw DataError(source + ": " + e.what());
  }
  return m;
}

JobManifest EmitJob(const ZeroShotJob& job, const Dataset& input, const PrepResult* result,
                    const std::string& backend_identity, const std::string& stem,
                    std::map<std::string, std::string> input_digests) {
  job.Validate();
  if ((job.mode == Mode::kDirectlyPredict) != (result == nullptr)) {
    throw ConfigError("directly_predict takes no prepared result; other modes need one");
  }
  const Dataset& out = result ? result->dataset : input;
  if (out.language != job.output_language()) {
    throw ConfigError("prepared data is not in the job's output language");
  }
  JobManifest m;
  m.tool_version = std::string(Version());
  m.mode = job.mode;
  m.source = job.source;
  m.target = job.target;
  if (result) {
    m.backend = backend_identity;
    m.flagged_examples = result->flagged_examples;
    m.flagged_names = result->flagged_names;
  }
  m.examples = static_cast<int>(out.examples.size());
  m.inputs = std::move(input_digests);

  std::filesystem::create_directories(job.out_dir);
  const std::pair<std::string, std::string> files[] = {
      {stem + ".json", EmitExamples(out)},
      {stem + "_tables.json", EmitSchemas(out.schemas)},
  };
  for (const auto& [name, data] : files) {
    WriteFileAtomic(job.out_dir / name, data);
    m.files[name] = Sha256Hex(data);
  }
  WriteFileAtomic(job.out_dir / "manifest.json", m.ToJson());
  return m;
}

}  // namespace mspider::zeroshot
