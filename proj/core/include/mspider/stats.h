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

#ifndef MSPIDER_STATS_H_
#define MSPIDER_STATS_H_

#include <map>
#include <span>
#include <string>

#include "mspider/dataset.h"

namespace mspider {

struct DatasetStats {
  int questions = 0;
  int databases = 0;      // distinct db_ids referenced by examples
  int tables = 0;         // over those databases
  int columns = 0;        // excluding `*`
  int distinct_sql = 0;   // gold queries, whitespace-normalized
  int unparsable_gold = 0;
  std::map<std::string, int> per_language;  // language code -> questions
  std::map<std::string, int> per_split;     // "train"/"dev" -> questions

  bool operator==(const DatasetStats&) const = default;
  std::string ToJson() const;
  std::string ToText() const;
};

// Counts over any number of datasets (e.g. train + dev of one language).
// Independent of example order.
DatasetStats ComputeStats(std::span<const Dataset* const> datasets);
DatasetStats ComputeStats(const Dataset& dataset);

}  // namespace mspider

#endif  // MSPIDER_STATS_H_
