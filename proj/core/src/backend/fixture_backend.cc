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

#include "mspider/backend/fixture_backend.h"

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"

namespace mspider::backend {
namespace {

using json = nlohmann::json;

std::string Describe(const TranslationRequest& r) {
  return "'" + r.text + "' (" + std::string(LanguageCode(r.source)) + "->" +
         std::string(LanguageCode(r.target)) + ")";
}

}  // namespace

FixtureBackend::FixtureBackend(std::string version) : version_(std::move(version)) {}

FixtureBackend FixtureBackend::Parse(std::string_view json_text, const std::string& source) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.byte, e.what());
  }
  if (!root.is_object()) throw DataError(source + ": fixture file must be a JSON object");
  try {
    FixtureBackend out(root.value("version", std::string("fixture")));
    out.identity_translation_ = root.value("identity_translation", false);
    out.identity_entailment_ = root.value("identity_entailment", true);
    for (const json& t : root.value("translate", json::array())) {
      out.AddTranslation(t.at("text").get<std::string>(),
                         LanguageOrThrow(t.at("src").get<std::string>()),
                         LanguageOrThrow(t.at("tgt").get<std::string>()),
                         t.at("out").get<std::string>());
    }
    for (const json& n : root.value("nli", json::array())) {
      std::optional<Language> lang;
      if (n.contains("lang")) lang = LanguageOrThrow(n.at("lang").get<std::string>());
      out.AddEntailment(n.at("premise").get<std::string>(),
                        n.at("hypothesis").get<std::string>(), lang,
                        n.at("score").get<double>());
    }
    const json digests = root.value("digests", json::object());
    for (const auto& [digest, value] : digests.items()) {
      if (value.is_string()) {
        out.digest_translations_[digest] = value.get<std::string>();
      } else {
        out.digest_entailments_[digest] = CheckScore(value.get<double>(), source);
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw DataError(source + ": malformed fixture entry: " + e.what());
  } catch (const BackendError& e) {
    throw DataError(source + ": " + e.what());
  }
}

FixtureBackend FixtureBackend::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path), path.string());
}

void FixtureBackend::AddTranslation(const std::string& text, Language source, Language target,
                                    std::string out) {
  if (out.empty()) throw DataError("fixture translation of '" + text + "' is empty");
  translations_[{text, source, target}] = std::move(out);
}

void FixtureBackend::AddEntailment(const std::string& premise, const std::string& hypothesis,
                                   std::optional<Language> language, double score) {
  entailments_[{premise, hypothesis, language}] = CheckScore(score, "fixture");
}

std::string FixtureBackend::Translate(const TranslationRequest& request) {
  request.Validate();
  if (auto it = translations_.find({request.text, request.source, request.target});
      it != translations_.end()) {
    return it->second;
  }
  if (auto it = digest_translations_.find(RequestDigest(request));
      it != digest_translations_.end()) {
    return it->second;
  }
  if (identity_translation_) return request.text;
  throw BackendError(BackendError::Kind::kFixtureMiss,
                     "no fixture translation for " + Describe(request));
}

double FixtureBackend::Entail(const EntailmentRequest& request) {
  request.Validate();
  for (std::optional<Language> lang : {std::optional(request.language), std::optional<Language>()}) {
    if (auto it = entailments_.find({request.premise, request.hypothesis, lang});
        it != entailments_.end()) {
      return it->second;
    }
  }
  if (auto it = digest_entailments_.find(RequestDigest(request));
      it != digest_entailments_.end()) {
    return it->second;
  }
  if (identity_entailment_ && request.premise == request.hypothesis) return 1.0;
  throw BackendError(BackendError::Kind::kFixtureMiss,
                     "no fixture entailment for '" + request.premise + "' => '" +
                         request.hypothesis + "'");
}

std::string FixtureBackend::ToJson() const {
  json translate = json::array(), nli = json::array(), digests = json::object();
  for (const auto& [key, out] : translations_) {
    const auto& [text, src, tgt] = key;
    translate.push_back(
        {{"text", text}, {"src", LanguageCode(src)}, {"tgt", LanguageCode(tgt)}, {"out", out}});
  }
  for (const auto& [key, score] : entailments_) {
    const auto& [premise, hypothesis, lang] = key;
    json entry = {{"premise", premise}, {"hypothesis", hypothesis}, {"score", score}};
    if (lang) entry["lang"] = LanguageCode(*lang);
    nli.push_back(std::move(entry));
  }
  for (const auto& [d, out] : digest_translations_) digests[d] = out;
  for (const auto& [d, score] : digest_entailments_) digests[d] = score;
  json root = {{"version", version_},
               {"identity_translation", identity_translation_},
               {"identity_entailment", identity_entailment_},
               {"translate", translate},
               {"nli", nli},
               {"digests", digests}};
  return root.dump(1) + "\n";
}

}  // namespace mspider::backend
