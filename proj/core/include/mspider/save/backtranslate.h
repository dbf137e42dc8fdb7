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

#ifndef MSPIDER_SAVE_BACKTRANSLATE_H_
#define MSPIDER_SAVE_BACKTRANSLATE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mspider/backend/backend.h"
#include "mspider/language.h"
#include "mspider/save/templates.h"

namespace mspider::save {

inline constexpr int kDefaultRounds = 3;

struct Provenance {
  Language pivot = Language::kEn;
  int round = 0;          // 1-based
  bool fallback = false;  // from translating the bare name
  bool operator==(const Provenance&) const = default;
};

struct Candidate {
  std::string text;
  Provenance provenance;
  bool operator==(const Candidate&) const = default;
};

struct CandidateSet {
  SchemaItemRef item;
  Language language = Language::kEn;
  std::vector<Candidate> candidates;  // duplicates kept
  int slots = 0;                // template round trips attempted
  int extraction_failures = 0;
  int backend_failures = 0;
};

// Separators of `lang`: the English words for English, otherwise the
// backend's translations of "of" and "from". nullopt when probing fails.
// Chinese and Japanese are head-final.
std::optional<Separators> ProbeSeparators(backend::Backend& backend, Language lang);

// Recovers the item's own name from a round-tripped context template.
// Word languages: the text before the first "of" (columns) or "from"
// (tables), matched case-insensitively as whole words. Head-final
// languages: the text after the last "of" up to "from" or an opening
// parenthesis (columns), or before "from" (tables). Surrounding space and
// punctuation are trimmed; nullopt when nothing usable remains.
std::optional<std::string> ExtractCandidate(const std::string& translated,
                                            const SchemaItemRef& item,
                                            const Separators& separators);

// Round-trips the context template through every pivot except `lang`,
// `rounds` times each, feeding each return into the next round. A failed
// extraction falls back to round-tripping the bare display name. Backend
// failures skip the rest of that pivot's chain. At most
// pivots.size() * rounds candidates.
CandidateSet BacktranslateItem(const SchemaItemRef& item, Language lang,
                               std::span<const Language> pivots, int rounds,
                               backend::Backend& backend,
                               const std::optional<Separators>& separators);

}  // namespace mspider::save

#endif  // MSPIDER_SAVE_BACKTRANSLATE_H_
