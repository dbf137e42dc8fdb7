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

#ifndef MSPIDER_BACKEND_FIXTURE_BACKEND_H_
#define MSPIDER_BACKEND_FIXTURE_BACKEND_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "mspider/backend/backend.h"

namespace mspider::backend {

// Deterministic file-backed backend. The fixture file is a JSON object:
//
//   {
//     "version": "toy-1",
//     "translate": [{"text": "head", "src": "en", "tgt": "de", "out": "Kopf"}],
//     "nli": [{"premise": "a", "hypothesis": "b", "lang": "en", "score": 0.9}],
//     "digests": {"<RequestDigest>": "text or score"},
//     "identity_translation": false,
//     "identity_entailment": true
//   }
//
// NLI entries without "lang" apply to every language. Explicit entries win
// over digest entries. With identity_translation the text of an unmapped
// request is returned unchanged; otherwise a miss throws. (x, x) pairs
// score 1.0 unless identity_entailment is false.
class FixtureBackend : public Backend {
 public:
  explicit FixtureBackend(std::string version = "fixture");

  static FixtureBackend Parse(std::string_view json_text, const std::string& source = "<fixtures>");
  static FixtureBackend Load(const std::filesystem::path& path);

  void AddTranslation(const std::string& text, Language source, Language target,
                      std::string out);
  // language = nullopt matches every language.
  void AddEntailment(const std::string& premise, const std::string& hypothesis,
                     std::optional<Language> language, double score);
  void set_identity_translation(bool on) { identity_translation_ = on; }
  void set_identity_entailment(bool on) { identity_entailment_ = on; }

  std::string Translate(const TranslationRequest& request) override;
  double Entail(const EntailmentRequest& request) override;
  std::string Identity() const override { return "fixture@" + version_; }

  std::string ToJson() const;

 private:
  using TranslationKey = std::tuple<std::string, Language, Language>;
  using EntailmentKey = std::tuple<std::string, std::string, std::optional<Language>>;

  std::string version_;
  std::map<TranslationKey, std::string> translations_;
  std::map<EntailmentKey, double> entailments_;
  std::map<std::string, std::string> digest_translations_;
  std::map<std::string, double> digest_entailments_;
  bool identity_translation_ = false;
  bool identity_entailment_ = true;
};

}  // namespace mspider::backend

#endif  // MSPIDER_BACKEND_FIXTURE_BACKEND_H_
