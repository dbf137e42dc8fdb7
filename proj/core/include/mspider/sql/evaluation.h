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

#ifndef MSPIDER_SQL_EVALUATION_H_
#define MSPIDER_SQL_EVALUATION_H_

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "mspider/dataset.h"
#include "mspider/sql/match.h"

namespace mspider::sql {

struct EvaluationOptions {
  bool abstract_values = true;
  unsigned jobs = 1;  // 0 = all cores
};

struct ExampleOutcome {
  std::string example_id;
  Hardness hardness = Hardness::kEasy;
  bool pred_parsable = false;
  bool matched = false;
  std::array<bool, kClauseCount> clauses{};
};

struct AccuracyCell {
  int count = 0;
  int matched = 0;
  double accuracy() const { return count ? static_cast<double>(matched) / count : 0.0; }
};

struct EvaluationReport {
  bool values_abstracted = true;
  AccuracyCell overall;
  std::array<AccuracyCell, kHardnessCount> by_hardness{};
  std::array<int, kClauseCount> clause_matches{};  // over scored examples
  int unparsable_predictions = 0;
  // Examples whose gold SQL does not parse; excluded from every count.
  std::vector<std::string> skipped_gold;
  std::vector<ExampleOutcome> examples;  // in dataset order, scored only

  std::string ToJson(bool include_examples = false) const;
  std::string ToText() const;
};

// Scores `predictions[i]` against dataset.examples[i]. Predictions that do
// not parse count as misses. Throws DataError when the sizes differ.
EvaluationReport EvaluateCorpus(const std::vector<std::string>& predictions,
                                const Dataset& dataset,
                                const EvaluationOptions& options = {});

// One prediction per line; a blank line is an empty prediction. A single
// trailing newline does not add an entry.
std::vector<std::string> ParsePredictions(std::string_view text);
std::vector<std::string> ReadPredictions(const std::filesystem::path& path);

}  // namespace mspider::sql

#endif  // MSPIDER_SQL_EVALUATION_H_
