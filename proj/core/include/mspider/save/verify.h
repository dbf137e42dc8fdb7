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

#ifndef MSPIDER_SAVE_VERIFY_H_
#define MSPIDER_SAVE_VERIFY_H_

#include <map>
#include <string>
#include <string_view>

#include "mspider/backend/backend.h"
#include "mspider/language.h"
#include "mspider/save/templates.h"

namespace mspider::save {

inline constexpr double kChineseThreshold = 0.68;
inline constexpr double kDefaultThreshold = 0.65;

// Minimum entailment score, per language, in both directions.
struct Thresholds {
  double fallback = kDefaultThreshold;
  std::map<Language, double> per_language = {{Language::kZh, kChineseThreshold}};

  double For(Language lang) const;
  // Throws ConfigError for values outside [0, 1].
  void Validate() const;
  bool operator==(const Thresholds&) const = default;
};

struct Verdict {
  enum class Outcome { kAccepted, kBelowThreshold, kBackendError };
  Outcome outcome = Outcome::kBelowThreshold;
  double forward = 0.0;   // original => candidate
  double backward = 0.0;  // candidate => original
  std::string error;      // for kBackendError

  bool accepted() const { return outcome == Outcome::kAccepted; }
};

// NFC and trimmed; the surface form kept for synonyms.
std::string NormalizeCandidate(std::string_view text);
// NormalizeCandidate plus case folding; the identity used for dedup.
std::string CandidateKey(std::string_view text);

// Premise: NLI template of the item. Hypothesis: the same template with the
// candidate in place of the item's name. Accepted iff
// min(forward, backward) >= thresholds.For(lang).
Verdict VerifyPair(const SchemaItemRef& item, const std::string& candidate, Language lang,
                   backend::Backend& backend, const Thresholds& thresholds);

}  // namespace mspider::save

#endif  // MSPIDER_SAVE_VERIFY_H_
