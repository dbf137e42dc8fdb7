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

#ifndef MSPIDER_QA_H_
#define MSPIDER_QA_H_

#include <string>
#include <string_view>
#include <vector>

#include "mspider/dataset.h"

namespace mspider {

struct QaFinding {
  enum class Severity { kError, kWarning };
  enum class Code { kUnknownColumn, kUnknownTable, kMissingValueLiteral, kUnparsableSql };

  std::string example_id;
  Severity severity = Severity::kError;
  Code code = Code::kUnparsableSql;
  std::string message;

  bool operator==(const QaFinding&) const = default;
};

std::string_view SeverityName(QaFinding::Severity s);  // "error", "warning"
std::string_view FindingCodeName(QaFinding::Code c);   // "unknown_column", ...

// Checks one example: SQL identifiers must resolve against the schema, and
// every quoted string literal of the gold SQL should occur in the question
// (case-insensitively after NFC; numeric literals and LIKE wildcards are
// ignored). Never throws on bad SQL; that is a finding.
std::vector<QaFinding> ValidateExample(const Example& example, const DatabaseSchema& schema);

std::vector<QaFinding> ValidateDataset(const Dataset& dataset);

// Positional alignment of two language variants of one split: returns the
// ids at positions where the example_id or db_id differ, plus ids present
// in only one of them.
std::vector<std::string> AlignmentMismatches(const Dataset& a, const Dataset& b);

// Quoted string literals of a query as written (quotes removed).
std::vector<std::string> StringLiterals(std::string_view sql);

}  // namespace mspider

#endif  // MSPIDER_QA_H_
