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

#include "mspider/schema.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <stdexcept>

#include "mspider/error.h"
#include "mspider/unicode.h"

namespace mspider {
namespace {

constexpr std::array<std::string_view, 5> kTypeNames = {
    "text", "number", "time", "boolean", "others"};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view ColumnTypeName(ColumnType type) {
  return kTypeNames[static_cast<std::size_t>(type)];
}

std::optional<ColumnType> ParseColumnType(std::string_view name) {
  for (std::size_t i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == name) return static_cast<ColumnType>(i);
  }
  return std::nullopt;
}

bool IsIdentifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

DatabaseSchema::DatabaseSchema(std::string db_id, std::vector<TableDef> tables)
    : db_id_(std::move(db_id)), tables_(std::move(tables)) {
  RebuildOffsets();
}

void DatabaseSchema::RebuildOffsets() {
  offsets_.clear();
  int next = 1;
  for (const TableDef& t : tables_) {
    offsets_.push_back(next);
    next += static_cast<int>(t.columns.size());
  }
}

const ColumnDef& DatabaseSchema::column(ColumnRef ref) const {
  return tables_.at(ref.table).columns.at(ref.column);
}

std::optional<int> DatabaseSchema::FindTable(std::string_view name) const {
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (EqualsIgnoreCase(tables_[i].original_name, name)) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<int> DatabaseSchema::FindColumn(int table,
                                              std::string_view name) const {
  const auto& cols = tables_.at(table).columns;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (EqualsIgnoreCase(cols[i].original_name, name)) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

int DatabaseSchema::column_count() const {
  int n = 1;
  for (const TableDef& t : tables_) n += static_cast<int>(t.columns.size());
  return n;
}

int DatabaseSchema::GlobalIndex(ColumnRef ref) const {
  if (ref.is_star()) return 0;
  return offsets_.at(ref.table) + ref.column;
}

ColumnRef DatabaseSchema::FromGlobal(int index) const {
  if (index == 0) return kStarColumn;
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    int begin = offsets_[t];
    int end = begin + static_cast<int>(tables_[t].columns.size());
    if (index >= begin && index < end) {
      return ColumnRef{static_cast<int>(t), index - begin};
    }
  }
  throw std::out_of_range("column index " + std::to_string(index) +
                          " out of range in " + db_id_);
}

void DatabaseSchema::RenameTable(int table, std::string original_name,
                                 std::string display_name) {
  TableDef& t = tables_.at(table);
  t.original_name = std::move(original_name);
  t.display_name = std::move(display_name);
}

void DatabaseSchema::RenameColumn(ColumnRef ref, std::string original_name,
                                  std::string display_name) {
  ColumnDef& c = tables_.at(ref.table).columns.at(ref.column);
  c.original_name = std::move(original_name);
  c.display_name = std::move(display_name);
}

void DatabaseSchema::Validate() const {
  const std::string where = "database '" + db_id_ + "': ";
  if (db_id_.empty()) throw DataError("database with empty db_id");
  std::set<std::string> table_names;
  for (const TableDef& t : tables_) {
    if (!IsIdentifier(t.original_name)) {
      throw DataError(where + "table name '" + t.original_name +
                      "' is not an identifier");
    }
    if (unicode::Trim(t.display_name).empty()) {
      throw DataError(where + "table '" + t.original_name +
                      "' has an empty display name");
    }
    if (!table_names.insert(Lower(t.original_name)).second) {
      throw DataError(where + "duplicate table '" + t.original_name + "'");
    }
    std::set<std::string> column_names;
    for (const ColumnDef& c : t.columns) {
      if (unicode::Trim(c.original_name).empty() ||
          unicode::Trim(c.display_name).empty()) {
        throw DataError(where + "table '" + t.original_name +
                        "' has a column with an empty name");
      }
      if (!column_names.insert(Lower(c.original_name)).second) {
        throw DataError(where + "duplicate column '" + c.original_name +
                        "' in table '" + t.original_name + "'");
      }
    }
  }
  auto check = [&](ColumnRef ref) {
    if (ref.is_star()) return;
    if (ref.table >= static_cast<int>(tables_.size()) ||
        ref.column < 0 ||
        ref.column >= static_cast<int>(tables_[ref.table].columns.size())) {
      throw DataError(where + "key references a missing column");
    }
  };
  for (ColumnRef k : primary_keys_) check(k);
  for (const auto& [a, b] : foreign_keys_) {
    check(a);
    check(b);
  }
}

}  // namespace mspider
