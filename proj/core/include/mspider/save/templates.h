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

#ifndef MSPIDER_SAVE_TEMPLATES_H_
#define MSPIDER_SAVE_TEMPLATES_H_

#include <string>
#include <string_view>
#include <vector>

#include "mspider/schema.h"

namespace mspider::save {

// A table or column of one database, with the names needed by the
// templates resolved at construction.
struct SchemaItemRef {
  enum class Kind { kTable, kColumn };

  std::string db_id;
  Kind kind = Kind::kTable;
  ColumnRef ref;  // ref.column == -1 for tables
  std::string table_original;
  std::string table_display;
  std::string column_original;  // columns only
  std::string display_name;     // of the item itself
  ColumnType type = ColumnType::kText;

  static SchemaItemRef ForTable(const DatabaseSchema& schema, int table);
  static SchemaItemRef ForColumn(const DatabaseSchema& schema, ColumnRef column);

  bool is_table() const { return kind == Kind::kTable; }
  // "table" or "table.column", original names.
  std::string Key() const;
  bool operator==(const SchemaItemRef&) const = default;
};

// Tables first, then columns, in schema order; `*` excluded.
std::vector<SchemaItemRef> SchemaItems(const DatabaseSchema& schema);

// Connective words of the context template in one language.
struct Separators {
  std::string of = "of";
  std::string from = "from";
  // Chinese and Japanese put the modifier first: {TABLE}{of}{COLUMN}.
  bool head_final = false;
};

// "[COLUMN] of {TABLE} from (DATABASE)", or "{TABLE} from (DATABASE)" for
// tables. Head-final separators give "{TABLE}{of}{COLUMN}{from}(DATABASE)".
// Throws ConfigError when a display name is empty.
std::string RenderContextTemplate(const SchemaItemRef& item,
                                  const Separators& separators = {});

// "{TABLE} [COLUMN] (TYPE)", or "{TABLE} (table)" for tables. The second
// form substitutes `replacement` for the item's own name.
std::string RenderNliTemplate(const SchemaItemRef& item);
std::string RenderNliTemplate(const SchemaItemRef& item, std::string_view replacement);

}  // namespace mspider::save

#endif  // MSPIDER_SAVE_TEMPLATES_H_
