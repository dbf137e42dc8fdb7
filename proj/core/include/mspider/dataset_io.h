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

#ifndef MSPIDER_DATASET_IO_H_
#define MSPIDER_DATASET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "mspider/dataset.h"

namespace mspider {

// Spider `tables.json`. `source` names the input in error messages.
SchemaCollection ParseSchemas(std::string_view json_text,
                              const std::string& source = "<memory>");
SchemaCollection LoadSchemas(const std::filesystem::path& path);

// Merges `extra` into `into`; throws DataError on a duplicate db_id.
void MergeSchemas(SchemaCollection& into, SchemaCollection extra);

std::string EmitSchemas(const SchemaCollection& schemas);

// Spider examples file (`train_spider.json`, `dev.json`, ...). Every
// example must reference a schema in `schemas`; otherwise DataError lists
// the offending example ids. Only the referenced schemas are kept in the
// returned dataset.
Dataset ParseExamples(std::string_view json_text, const SchemaCollection& schemas,
                      Split split, Language language,
                      const std::string& source = "<memory>");
Dataset LoadExamples(const std::filesystem::path& path,
                     const SchemaCollection& schemas, Split split,
                     Language language);

// Concatenates several files of the same split (e.g. train_spider.json and
// train_others.json). Positions for generated ids continue across files.
Dataset LoadExamples(const std::vector<std::filesystem::path>& paths,
                     const SchemaCollection& schemas, Split split,
                     Language language);

// Emits db_id, question, query and example_id for every example, in order.
// The output is deterministic: re-emitting a loaded dataset is
// byte-identical.
std::string EmitExamples(const Dataset& dataset);

std::string ReadFile(const std::filesystem::path& path);
// Writes through a temporary file and renames it into place.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

}  // namespace mspider

#endif  // MSPIDER_DATASET_IO_H_
