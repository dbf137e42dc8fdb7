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

#ifndef MSPIDER_SCHEMA_H_
#define MSPIDER_SCHEMA_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mspider {

enum class ColumnType { kText, kNumber, kTime, kBoolean, kOthers };

std::string_view ColumnTypeName(ColumnType type);
std::optional<ColumnType> ParseColumnType(std::string_view name);

struct ColumnDef {
  std::string original_name;  // identifier used in SQL
  std::string display_name;   // localized surface form
  ColumnType type = ColumnType::kText;

  bool operator==(const ColumnDef&) const = default;
};

struct TableDef {
  std::string original_name;
  std::string display_name;
  std::vector<ColumnDef> columns;

  bool operator==(const TableDef&) const = default;
};

// Position of a column inside a schema. `table == -1` is the `*`
// pseudo-column.
struct ColumnRef {
  int table = -1;
  int column = -1;

  bool is_star() const { return table < 0; }
  auto operator<=>(const ColumnRef&) const = default;
};

inline constexpr ColumnRef kStarColumn{-1, -1};

// One database. Columns are addressed either by ColumnRef or by the flat
// "global" index of the tables file, where index 0 is `*` and the remaining
// columns follow table by table.
class DatabaseSchema {
 public:
  DatabaseSchema() = default;
  DatabaseSchema(std::string db_id, std::vector<TableDef> tables);

  const std::string& db_id() const { return db_id_; }
  const std::vector<TableDef>& tables() const { return tables_; }
  const TableDef& table(int index) const { return tables_.at(index); }
  const ColumnDef& column(ColumnRef ref) const;

  std::vector<ColumnRef>& primary_keys() { return primary_keys_; }
  const std::vector<ColumnRef>& primary_keys() const { return primary_keys_; }
  std::vector<std::pair<ColumnRef, ColumnRef>>& foreign_keys() {
    return foreign_keys_;
  }
  const std::vector<std::pair<ColumnRef, ColumnRef>>& foreign_keys() const {
    return foreign_keys_;
  }

  // Case-insensitive (ASCII) lookup of original names.
  std::optional<int> FindTable(std::string_view original_name) const;
  std::optional<int> FindColumn(int table,
                                std::string_view original_name) const;

  int column_count() const;  // including `*`
  int GlobalIndex(ColumnRef ref) const;
  ColumnRef FromGlobal(int index) const;  // throws std::out_of_range

  // Renaming keeps positions, so SQL trees parsed against this schema stay
  // valid.
  void RenameTable(int table, std::string original_name,
                   std::string display_name);
  void RenameColumn(ColumnRef ref, std::string original_name,
                    std::string display_name);
  void set_db_id(std::string db_id) { db_id_ = std::move(db_id); }

  // Checks the invariants documented on the file format and throws
  // DataError naming the first violation.
  void Validate() const;

  bool operator==(const DatabaseSchema&) const = default;

 private:
  void RebuildOffsets();

  std::string db_id_;
  std::vector<TableDef> tables_;
  std::vector<ColumnRef> primary_keys_;
  std::vector<std::pair<ColumnRef, ColumnRef>> foreign_keys_;
  std::vector<int> offsets_;  // global index of each table's first column
};

using SchemaCollection = std::map<std::string, DatabaseSchema>;

bool IsIdentifier(std::string_view name);

}  // namespace mspider

#endif  // MSPIDER_SCHEMA_H_
