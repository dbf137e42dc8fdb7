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

#ifndef MSPIDER_LINKER_LINK_SCORE_H_
#define MSPIDER_LINKER_LINK_SCORE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mspider/dataset.h"
#include "mspider/language.h"

namespace mspider::linker {

// Scoring version recorded in reports. Bump whenever a change to the
// tokenizer or the similarity functions can move a score.
inline constexpr int kLinkScoreVersion = 1;

// Matching units of a text, case-folded. Word languages: Unicode word
// segments. Chinese and Japanese: one unit per Han/kana character, with
// runs of other letters and digits (Latin values, numbers) kept whole.
std::vector<std::string> MatchUnits(std::string_view text, Language lang);

// Question tokens. For word languages these are the match units; for
// Chinese and Japanese each run of characters contributes its unigrams
// followed by its bigrams, and Latin runs stay single tokens.
std::vector<std::string> Tokenize(std::string_view question, Language lang);

struct ItemMatch {
  double score = 0.0;
  std::string span;  // best matching question units, space-joined
};

// Similarity of one schema item name to a question given as match units.
// 1.0 when the item's units occur contiguously. Otherwise the best value
// over question spans of 1..m+1 units (m = item length) of
//   word languages: 1 - edit_distance / max_length on the space-joined text
//   Chinese/Japanese: Dice coefficient of adjacent-unit bigram multisets
// Throws std::invalid_argument for an empty name.
ItemMatch MatchItem(std::string_view display_name,
                    std::span<const std::string> question_units, Language lang);

inline double FuzzyItemScore(std::string_view display_name,
                             std::span<const std::string> question_units,
                             Language lang) {
  return MatchItem(display_name, question_units, lang).score;
}

struct ItemScore {
  std::string item;          // "table" or "table.column", original names
  std::string display_name;
  std::string span;
  double score = 0.0;
};

struct ExampleLinkScore {
  std::string example_id;
  bool skipped = false;  // gold SQL did not parse
  double score = 0.0;
  std::vector<ItemScore> items;
};

// Mean item score over the tables and columns referenced by the gold SQL.
// An example that references no item scores 0.
ExampleLinkScore ScoreExample(const Example& example, const DatabaseSchema& schema);

struct CorpusLinkScore {
  Language language = Language::kEn;
  int scored = 0;
  std::vector<std::string> skipped;
  double mean = 0.0;  // over scored examples
  std::vector<ExampleLinkScore> examples;  // dataset order
};

// jobs = 0 uses every core. The mean does not depend on example order.
CorpusLinkScore ScoreCorpus(const Dataset& dataset, unsigned jobs = 1);

struct LinkReport {
  std::vector<CorpusLinkScore> corpora;

  std::string ToJson(bool include_examples = false) const;
  std::string ToText() const;
};

}  // namespace mspider::linker

#endif  // MSPIDER_LINKER_LINK_SCORE_H_
