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

#ifndef MSPIDER_SAVE_AUGMENT_H_
#define MSPIDER_SAVE_AUGMENT_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mspider/backend/backend.h"
#include "mspider/dataset.h"
#include "mspider/save/backtranslate.h"
#include "mspider/save/verify.h"

namespace mspider::save {

struct AugmentConfig {
  std::vector<Language> pivots{kPivotLanguages.begin(), kPivotLanguages.end()};
  int rounds = kDefaultRounds;
  Thresholds thresholds;
  unsigned jobs = 1;  // 0 = all cores

  // Throws ConfigError.
  void Validate() const;
};

struct SynonymEntry {
  std::string synonym;
  double forward = 0.0;
  double backward = 0.0;
  std::vector<Provenance> provenance;  // every slot that produced it
  bool operator==(const SynonymEntry&) const = default;
};

// Verified synonyms per database and item key (SchemaItemRef::Key).
struct AugmentedSchemaSet {
  using ItemMap = std::map<std::string, std::vector<SynonymEntry>>;

  Language language = Language::kEn;
  std::string backend;  // identity of the backend that scored the entries
  int rounds = kDefaultRounds;
  std::vector<Language> pivots;
  Thresholds thresholds;
  std::map<std::string, ItemMap> databases;

  // nullptr when the item has no synonyms.
  const std::vector<SynonymEntry>* Find(const std::string& db_id,
                                        const std::string& item_key) const;
  std::size_t synonym_count() const;

  std::string ToJson() const;
  // Rejects entries scoring below their threshold (DataError).
  static AugmentedSchemaSet Parse(std::string_view json_text,
                                  const std::string& source = "<augmented>");
  static AugmentedSchemaSet Load(const std::filesystem::path& path);
  bool operator==(const AugmentedSchemaSet&) const = default;
};

struct RejectionRecord {
  std::string db_id;
  std::string item;
  std::string candidate;
  Verdict verdict;
};

struct PipelineReport {
  int items = 0;
  int slots = 0;
  int candidates = 0;         // extracted, duplicates included
  int fallback_candidates = 0;
  int extraction_failures = 0;
  int backend_failures = 0;   // translation requests
  int separator_probe_failures = 0;
  int unique_candidates = 0;  // after dedup, originals removed
  int accepted = 0;
  int rejected_below_threshold = 0;
  int rejected_backend_error = 0;
  std::vector<RejectionRecord> rejections;

  // accepted / unique_candidates; 0 when there were none.
  double acceptance_rate() const;
  std::string ToJson() const;
};

struct AugmentResult {
  AugmentedSchemaSet set;
  PipelineReport report;
  std::vector<CandidateSet> candidates;  // one per item, schema order
};

// Back-translates and verifies every table and column of the dataset's
// schemas. Item-level backend failures are counted, never thrown.
AugmentResult BuildAugmentedSet(const Dataset& dataset, const AugmentConfig& config,
                                backend::Backend& backend);

}  // namespace mspider::save

#endif  // MSPIDER_SAVE_AUGMENT_H_
