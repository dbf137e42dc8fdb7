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

#ifndef MSPIDER_DATASET_H_
#define MSPIDER_DATASET_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mspider/language.h"
#include "mspider/schema.h"

namespace mspider {

enum class Split { kTrain, kDev };

std::string_view SplitName(Split split);
std::optional<Split> ParseSplit(std::string_view name);

struct Example {
  Language language = Language::kEn;
  std::string db_id;
  std::string question;
  std::string gold_sql;
  std::string example_id;
  // Set by the loaders; false when gold_sql does not parse against the
  // example's schema. Such examples are kept and reported by QA.
  bool gold_parsable = true;

  bool operator==(const Example&) const = default;
};

// Examples of one split in one language together with the schemas they
// reference. Immutable once loaded; share freely between threads.
struct Dataset {
  Split split = Split::kTrain;
  Language language = Language::kEn;
  std::vector<Example> examples;
  SchemaCollection schemas;

  const DatabaseSchema& SchemaFor(const Example& example) const;

  bool operator==(const Dataset&) const = default;
};

// Identifier assigned to examples that carry none: "<split>-<position>".
std::string DefaultExampleId(Split split, std::size_t position);

}  // namespace mspider

#endif  // MSPIDER_DATASET_H_
