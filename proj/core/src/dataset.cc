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

#include "mspider/dataset.h"

#include <cstdio>

#include "mspider/error.h"

namespace mspider {

std::string_view SplitName(Split split) {
  return split == Split::kTrain ? "train" : "dev";
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  return std::nullopt;
}

const DatabaseSchema& Dataset::SchemaFor(const Example& example) const {
  auto it = schemas.find(example.db_id);
  if (it == schemas.end()) {
    throw DataError("example " + example.example_id +
                        " references unknown database '" + example.db_id + "'",
                    {example.example_id});
  }
  return it->second;
}

std::string DefaultExampleId(Split split, std::size_t position) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu", position);
  return std::string(SplitName(split)) + "-" + buf;
}

}  // namespace mspider
