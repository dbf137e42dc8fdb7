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

#include "mspider/save/augment.h"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"
#include "mspider/error.h"
#include "mspider/util/parallel.h"

namespace mspider::save {
namespace {

using json = nlohmann::json;

const char* OutcomeName(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::kAccepted: return "accepted";
    case Verdict::Outcome::kBelowThreshold: return "below_threshold";
    case Verdict::Outcome::kBackendError: return "backend_error";
  }
  return "";
}

json LanguagesJson(const std::vector<Language>& langs) {
  json out = json::array();
  for (Language l : langs) out.push_back(LanguageCode(l));
  return out;
}

json ThresholdsJson(const Thresholds& t) {
  json per = json::object();
  for (const auto& [lang, v] : t.per_language) per[std::string(LanguageCode(lang))] = v;
  return {{"default", t.fallback}, {"per_language", per}};
}

Thresholds ThresholdsFromJson(const json& j) {
  Thresholds t;
  t.fallback = j.at("default").get<double>();
  t.per_language.clear();
  for (const auto& [code, v] : j.at("per_language").items()) {
    t.per_language[LanguageOrThrow(code)] = v.get<double>();
  }
  return t;
}

struct ItemOutcome {
  CandidateSet candidates;
  std::vector<SynonymEntry> accepted;
  std::vector<RejectionRecord> rejected;
  int unique = 0;
};

ItemOutcome ProcessItem(const SchemaItemRef& item, Language lang, const AugmentConfig& config,
                        backend::Backend& backend, const std::optional<Separators>& separators) {
  ItemOutcome out;
  out.candidates =
      BacktranslateItem(item, lang, config.pivots, config.rounds, backend, separators);

  // Dedup by folded form, first surface form wins; provenance accumulates.
  const std::string original = CandidateKey(item.display_name);
  std::vector<std::pair<std::string, SynonymEntry>> unique;
  for (const Candidate& c : out.candidates.candidates) {
    const std::string key = CandidateKey(c.text);
    if (key.empty() || key == original) continue;
    auto it = std::find_if(unique.begin(), unique.end(),
                           [&](const auto& u) { return u.first == key; });
    if (it == unique.end()) {
      unique.emplace_back(key, SynonymEntry{NormalizeCandidate(c.text), 0, 0, {}});
      it = std::prev(unique.end());
    }
    it->second.provenance.push_back(c.provenance);
  }
  out.unique = static_cast<int>(unique.size());
  for (auto& [key, entry] : unique) {
    const Verdict v = VerifyPair(item, entry.synonym, lang, backend, config.thresholds);
    if (v.accepted()) {
      entry.forward = v.forward;
      entry.backward = v.backward;
      out.accepted.push_back(std::move(entry));
    } else {
      out.rejected.push_back(RejectionRecord{item.db_id, item.Key(), entry.synonym, v});
    }
  }
  return out;
}

}  // namespace

void AugmentConfig::Validate() const {
  if (pivots.empty()) throw ConfigError("at least one pivot language is required");
  if (rounds < 1) throw ConfigError("rounds must be at least 1");
  thresholds.Validate();
}

const std::vector<SynonymEntry>* AugmentedSchemaSet::Find(const std::string& db_id,
                                                          const std::string& item_key) const {
  auto db = databases.find(db_id);
  if (db == databases.end()) return nullptr;
  auto it = db->second.find(item_key);
  if (it == db->second.end() || it->second.empty()) return nullptr;
  return &it->second;
}

std::size_t AugmentedSchemaSet::synonym_count() const {
  std::size_t n = 0;
  for (const auto& [db, items] : databases) {
    for (const auto& [key, list] : items) n += list.size();
  }
  return n;
}

std::string AugmentedSchemaSet::ToJson() const {
  json dbs = json::object();
  for (const auto& [db, items] : databases) {
    json jitems = json::object();
    for (const auto& [key, list] : items) {
      json jl = json::array();
      for (const SynonymEntry& e : list) {
        json prov = json::array();
        for (const Provenance& p : e.provenance) {
          prov.push_back(
              {{"pivot", LanguageCode(p.pivot)}, {"round", p.round}, {"fallback", p.fallback}});
        }
        jl.push_back({{"synonym", e.synonym},
                      {"forward", e.forward},
                      {"backward", e.backward},
                      {"provenance", prov}});
      }
      jitems[key] = std::move(jl);
    }
    dbs[db] = std::move(jitems);
  }
  json root = {{"language", LanguageCode(language)},
               {"backend", backend},
               {"rounds", rounds},
               {"pivots", LanguagesJson(pivots)},
               {"thresholds", ThresholdsJson(thresholds)},
               {"databases", dbs}};
  return root.dump(1) + "\n";
}

AugmentedSchemaSet AugmentedSchemaSet::Parse(std::string_view json_text,
                                             const std::string& source) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.byte, e.what());
  }
  AugmentedSchemaSet out;
  try {
    out.language = LanguageOrThrow(root.at("language").get<std::string>());
    out.backend = root.at("backend").get<std::string>();
    out.rounds = root.at("rounds").get<int>();
    for (const json& p : root.at("pivots")) out.pivots.push_back(LanguageOrThrow(p.get<std::string>()));
    out.thresholds = ThresholdsFromJson(root.at("thresholds"));
    const double threshold = out.thresholds.For(out.language);
    for (const auto& [db, items] : root.at("databases").items()) {
      for (const auto& [key, list] : items.items()) {
        auto& entries = out.databases[db][key];
        for (const json& e : list) {
          SynonymEntry s;
          s.synonym = e.at("synonym").get<std::string>();
          s.forward = e.at("forward").get<double>();
          s.backward = e.at("backward").get<double>();
          for (const json& p : e.at("provenance")) {
            s.provenance.push_back(Provenance{LanguageOrThrow(p.at("pivot").get<std::string>()),
                                              p.at("round").get<int>(),
                                              p.at("fallback").get<bool>()});
          }
          if (std::min(s.forward, s.backward) < threshold || s.synonym.empty()) {
            throw DataError(source + ": synonym '" + s.synonym + "' of " + db + "/" + key +
                            " does not meet the threshold");
          }
          entries.push_back(std::move(s));
        }
      }
    }
  } catch (const json::exception& e) {
    throw DataError(source + ": malformed augmented schema file: " + e.what());
  }
  return out;
}

AugmentedSchemaSet AugmentedSchemaSet::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path), path.string());
}

double PipelineReport::acceptance_rate() const {
  return unique_candidates ? static_cast<double>(accepted) / unique_candidates : 0.0;
}

std::string PipelineReport::ToJson() const {
  json rej = json::array();
  for (const RejectionRecord& r : rejections) {
    json j = {{"db_id", r.db_id},
              {"item", r.item},
              {"candidate", r.candidate},
              {"cause", OutcomeName(r.verdict.outcome)},
              {"forward", r.verdict.forward},
              {"backward", r.verdict.backward}};
    if (!r.verdict.error.empty()) j["error"] = r.verdict.error;
    rej.push_back(std::move(j));
  }
  json root = {{"items", items},
               {"slots", slots},
               {"candidates", candidates},
               {"fallback_candidates", fallback_candidates},
               {"extraction_failures", extraction_failures},
               {"backend_failures", backend_failures},
               {"separator_probe_failures", separator_probe_failures},
               {"unique_candidates", unique_candidates},
               {"accepted", accepted},
               {"rejected_below_threshold", rejected_below_threshold},
               {"rejected_backend_error", rejected_backend_error},
               {"acceptance_rate", acceptance_rate()},
               {"rejections", rej}};
  return root.dump(1) + "\n";
}

AugmentResult BuildAugmentedSet(const Dataset& dataset, const AugmentConfig& config,
                                backend::Backend& backend) {
  config.Validate();
  const Language lang = dataset.language;
  AugmentResult out;
  out.set.language = lang;
  out.set.backend = backend.Identity();
  out.set.rounds = config.rounds;
  out.set.pivots = config.pivots;
  out.set.thresholds = config.thresholds;

  const std::optional<Separators> separators = ProbeSeparators(backend, lang);
  if (!separators) out.report.separator_probe_failures = 1;

  std::vector<SchemaItemRef> items;
  for (const auto& [db_id, schema] : dataset.schemas) {
    for (SchemaItemRef& item : SchemaItems(schema)) items.push_back(std::move(item));
  }
  std::vector<ItemOutcome> outcomes(items.size());
  ParallelFor(items.size(), config.jobs, [&](std::size_t i) {
    outcomes[i] = ProcessItem(items[i], lang, config, backend, separators);
  });

  PipelineReport& r = out.report;
  r.items = static_cast<int>(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    ItemOutcome& o = outcomes[i];
    const CandidateSet& c = o.candidates;
    r.slots += c.slots;
    r.candidates += static_cast<int>(c.candidates.size());
    r.fallback_candidates += static_cast<int>(std::count_if(
        c.candidates.begin(), c.candidates.end(),
        [](const Candidate& x) { return x.provenance.fallback; }));
    r.extraction_failures += c.extraction_failures;
    r.backend_failures += c.backend_failures;
    r.unique_candidates += o.unique;
    r.accepted += static_cast<int>(o.accepted.size());
    for (RejectionRecord& rec : o.rejected) {
      if (rec.verdict.outcome == Verdict::Outcome::kBackendError) {
        ++r.rejected_backend_error;
      } else {
        ++r.rejected_below_threshold;
      }
      r.rejections.push_back(std::move(rec));
    }
    if (!o.accepted.empty()) {
      out.set.databases[items[i].db_id][items[i].Key()] = std::move(o.accepted);
    }
    out.candidates.push_back(std::move(o.candidates));
  }
  return out;
}

}  // namespace mspider::save
