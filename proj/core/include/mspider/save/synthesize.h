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

#ifndef MSPIDER_SAVE_SYNTHESIZE_H_
#define MSPIDER_SAVE_SYNTHESIZE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mspider/dataset.h"
#include "mspider/save/augment.h"

namespace mspider::save {

struct SynthesisPolicy {
  int variants_per_example = 2;
  double replace_probability = 0.5;
  std::uint64_t seed = 0;

  // Throws ConfigError.
  void Validate() const;
  bool operator==(const SynthesisPolicy&) const = default;
};

struct SynthesisLogEntry {
  std::string example_id;
  int variant = 0;
  std::string reason;
};

struct SynthesisResult {
  Dataset dataset;  // each original followed by its variants
  int originals = 0;
  int variants = 0;
  int skipped_unchanged = 0;  // no item drew a replacement
  int skipped_collision = 0;  // renamed schema invalid or ambiguous
  int skipped_inverse = 0;    // SQL failed to re-parse or to match
  int ineligible = 0;         // gold SQL unparsable
  std::vector<SynthesisLogEntry> log;

  double expansion() const {
    return originals ? static_cast<double>(dataset.examples.size()) / originals : 1.0;
  }
};

// Per variant, each item with verified synonyms is renamed with probability
// replace_probability to a uniformly drawn synonym. The display name always
// changes; the SQL identifier changes too when the display name is the
// spelled-out original name ("born_state" / "born state") and the synonym
// maps to a non-reserved identifier. SQL is rewritten through the parse
// tree. A variant is kept only if its SQL re-parses against the renamed
// schema and canonicalizes, under the inverse renaming, to the source
// query. Randomness comes from a stream keyed by (seed, example_id,
// variant), so results do not depend on example order or threading.
// Variant ids are "<example_id>__aug<k>"; renamed databases are
// "<db_id>__aug_<8 hex digits>".
SynthesisResult SynthesizeExamples(const Dataset& dataset, const AugmentedSchemaSet& augmented,
                                   const SynthesisPolicy& policy);

// "born_state" -> "born state", "PetType" -> "pet type".
std::string SpelledOut(std::string_view original_name);

struct TrainingManifest {
  std::string tool_version;
  SynthesisPolicy policy;
  Language language = Language::kEn;
  std::string backend;
  Thresholds thresholds;
  int rounds = 0;
  std::vector<Language> pivots;
  int originals = 0;
  int variants = 0;
  std::map<std::string, std::string> inputs;  // name -> sha256
  std::map<std::string, std::string> files;   // name -> sha256

  std::string ToJson() const;
  static TrainingManifest Parse(std::string_view json_text,
                                const std::string& source = "<manifest>");
  bool operator==(const TrainingManifest&) const = default;
};

// Writes into out_dir:
//   warmup.json, warmup_tables.json    originals plus variants
//   finetune.json, finetune_tables.json  the original examples re-emitted
//   manifest.json
// Returns the manifest written.
TrainingManifest EmitTrainingFiles(const Dataset& original, const SynthesisResult& synthesized,
                                   const AugmentedSchemaSet& augmented,
                                   const SynthesisPolicy& policy,
                                   const std::filesystem::path& out_dir,
                                   std::map<std::string, std::string> input_digests = {});

}  // namespace mspider::save

#endif  // MSPIDER_SAVE_SYNTHESIZE_H_
