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

#include "mspider/stats.h"

#include <iomanip>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mspider {
namespace {

std::string CollapseSpaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

}  // namespace

DatasetStats ComputeStats(std::span<const Dataset* const> datasets) {
  DatasetStats s;
  std::map<std::string, const DatabaseSchema*> dbs;
  std::set<std::string> queries;
  for (const Dataset* d : datasets) {
    for (const Example& ex : d->examples) {
      ++s.questions;
      ++s.per_language[std::string(LanguageCode(ex.language))];
      ++s.per_split[std::string(SplitName(d->split))];
      s.unparsable_gold += !ex.gold_parsable;
      queries.insert(CollapseSpaces(ex.gold_sql));
      dbs.emplace(ex.db_id, &d->SchemaFor(ex));
    }
  }
  s.databases = static_cast<int>(dbs.size());
  for (const auto& [id, schema] : dbs) {
    s.tables += static_cast<int>(schema->tables().size());
    s.columns += schema->column_count() - 1;
  }
  s.distinct_sql = static_cast<int>(queries.size());
  return s;
}

DatasetStats ComputeStats(const Dataset& dataset) {
  const Dataset* one[] = {&dataset};
  return ComputeStats(one);
}

std::string DatasetStats::ToJson() const {
  nlohmann::json j = {{"questions", questions},       {"databases", databases},
                      {"tables", tables},             {"columns", columns},
                      {"distinct_sql", distinct_sql}, {"unparsable_gold", unparsable_gold},
                      {"per_language", per_language}, {"per_split", per_split}};
  return j.dump(2) + "\n";
}

std::string DatasetStats::ToText() const {
  std::ostringstream out;
  auto row = [&out](const std::string& label, int value) {
    out << std::left << std::setw(15) << label << value << "\n";
  };
  row("questions", questions);
  row("databases", databases);
  row("tables", tables);
  row("columns", columns);
  row("distinct sql", distinct_sql);
  row("unparsable", unparsable_gold);
  for (const auto& [lang, n] : per_language) row("language " + lang, n);
  for (const auto& [split, n] : per_split) row("split " + split, n);
  return out.str();
}

}  // namespace mspider
