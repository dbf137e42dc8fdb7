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

#include "mspider/qa.h"

#include <regex>
#include <set>

#include "mspider/sql/parser.h"
#include "mspider/unicode.h"

namespace mspider {
namespace {

bool IsNumeric(std::string_view s) {
  static const std::regex kNumber(R"(^\s*-?([0-9]+(\.[0-9]*)?|\.[0-9]+)\s*$)");
  return std::regex_match(s.begin(), s.end(), kNumber);
}

// LIKE patterns carry % and _ wildcards at their edges.
std::string StripWildcards(std::string_view s) {
  while (!s.empty() && (s.front() == '%' || s.front() == '_')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == '%' || s.back() == '_')) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::string_view SeverityName(QaFinding::Severity s) {
  return s == QaFinding::Severity::kError ? "error" : "warning";
}

std::string_view FindingCodeName(QaFinding::Code c) {
  switch (c) {
    case QaFinding::Code::kUnknownColumn: return "unknown_column";
    case QaFinding::Code::kUnknownTable: return "unknown_table";
    case QaFinding::Code::kMissingValueLiteral: return "missing_value_literal";
    case QaFinding::Code::kUnparsableSql: return "unparsable_sql";
  }
  return "";
}

std::vector<std::string> StringLiterals(std::string_view sql) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sql.size(); ++i) {
    const char q = sql[i];
    if (q != '\'' && q != '"') continue;
    const std::size_t end = sql.find(q, i + 1);
    if (end == std::string_view::npos) break;
    out.emplace_back(sql.substr(i + 1, end - i - 1));
    i = end;
  }
  return out;
}

std::vector<QaFinding> ValidateExample(const Example& example, const DatabaseSchema& schema) {
  std::vector<QaFinding> out;
  auto add = [&](QaFinding::Severity sev, QaFinding::Code code, std::string msg) {
    out.push_back(QaFinding{example.example_id, sev, code, std::move(msg)});
  };
  try {
    sql::ParseSql(example.gold_sql, schema);
  } catch (const sql::SqlError& e) {
    switch (e.kind()) {
      case sql::SqlError::Kind::kUnknownColumn:
        add(QaFinding::Severity::kError, QaFinding::Code::kUnknownColumn,
            "column '" + e.token() + "' not in database '" + schema.db_id() + "'");
        break;
      case sql::SqlError::Kind::kUnknownTable:
        add(QaFinding::Severity::kError, QaFinding::Code::kUnknownTable,
            "table '" + e.token() + "' not in database '" + schema.db_id() + "'");
        break;
      case sql::SqlError::Kind::kSyntax:
        add(QaFinding::Severity::kError, QaFinding::Code::kUnparsableSql, e.what());
        break;
    }
  }
  const std::string question = unicode::FoldForMatch(example.question);
  std::set<std::string> reported;
  for (const std::string& lit : StringLiterals(example.gold_sql)) {
    const std::string value = unicode::Trim(StripWildcards(lit));
    if (value.empty() || IsNumeric(value) || !reported.insert(value).second) continue;
    if (question.find(unicode::FoldForMatch(value)) == std::string::npos) {
      add(QaFinding::Severity::kWarning, QaFinding::Code::kMissingValueLiteral,
          "value '" + value + "' does not occur in the question");
    }
  }
  return out;
}

std::vector<QaFinding> ValidateDataset(const Dataset& dataset) {
  std::vector<QaFinding> out;
  for (const Example& ex : dataset.examples) {
    auto f = ValidateExample(ex, dataset.SchemaFor(ex));
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::vector<std::string> AlignmentMismatches(const Dataset& a, const Dataset& b) {
  std::vector<std::string> out;
  const std::size_t n = std::min(a.examples.size(), b.examples.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Example& x = a.examples[i];
    const Example& y = b.examples[i];
    if (x.example_id != y.example_id || x.db_id != y.db_id) out.push_back(x.example_id);
  }
  for (std::size_t i = n; i < a.examples.size(); ++i) out.push_back(a.examples[i].example_id);
  for (std::size_t i = n; i < b.examples.size(); ++i) out.push_back(b.examples[i].example_id);
  return out;
}

}  // namespace mspider
