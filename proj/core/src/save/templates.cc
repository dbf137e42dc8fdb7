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

#include "mspider/save/templates.h"

#include "mspider/error.h"
#include "mspider/unicode.h"

namespace mspider::save {
namespace {

void RequireName(const std::string& name, const SchemaItemRef& item) {
  if (unicode::Trim(name).empty()) {
    throw ConfigError("schema item '" + item.Key() + "' of '" + item.db_id +
                      "' has an empty display name");
  }
}

}  // namespace

SchemaItemRef SchemaItemRef::ForTable(const DatabaseSchema& schema, int table) {
  const TableDef& t = schema.table(table);
  SchemaItemRef out;
  out.db_id = schema.db_id();
  out.kind = Kind::kTable;
  out.ref = ColumnRef{table, -1};
  out.table_original = t.original_name;
  out.table_display = t.display_name;
  out.display_name = t.display_name;
  return out;
}

SchemaItemRef SchemaItemRef::ForColumn(const DatabaseSchema& schema, ColumnRef column) {
  const TableDef& t = schema.table(column.table);
  const ColumnDef& c = schema.column(column);
  SchemaItemRef out;
  out.db_id = schema.db_id();
  out.kind = Kind::kColumn;
  out.ref = column;
  out.table_original = t.original_name;
  out.table_display = t.display_name;
  out.column_original = c.original_name;
  out.display_name = c.display_name;
  out.type = c.type;
  return out;
}

std::string SchemaItemRef::Key() const {
  return is_table() ? table_original : table_original + "." + column_original;
}

std::vector<SchemaItemRef> SchemaItems(const DatabaseSchema& schema) {
  std::vector<SchemaItemRef> out;
  const int tables = static_cast<int>(schema.tables().size());
  for (int t = 0; t < tables; ++t) out.push_back(SchemaItemRef::ForTable(schema, t));
  for (int t = 0; t < tables; ++t) {
    const int columns = static_cast<int>(schema.table(t).columns.size());
    for (int c = 0; c < columns; ++c) {
      out.push_back(SchemaItemRef::ForColumn(schema, ColumnRef{t, c}));
    }
  }
  return out;
}

std::string RenderContextTemplate(const SchemaItemRef& item, const Separators& sep) {
  RequireName(item.display_name, item);
  RequireName(item.table_display, item);
  const std::string db = "(" + item.db_id + ")";
  if (sep.head_final) {
    if (item.is_table()) return item.table_display + sep.from + db;
    return item.table_display + sep.of + item.display_name + sep.from + db;
  }
  if (item.is_table()) return item.table_display + " " + sep.from + " " + db;
  return item.display_name + " " + sep.of + " " + item.table_display + " " + sep.from + " " + db;
}

std::string RenderNliTemplate(const SchemaItemRef& item) {
  return RenderNliTemplate(item, item.display_name);
}

std::string RenderNliTemplate(const SchemaItemRef& item, std::string_view replacement) {
  RequireName(item.display_name, item);
  if (item.is_table()) return std::string(replacement) + " (table)";
  return item.table_display + " " + std::string(replacement) + " (" +
         std::string(ColumnTypeName(item.type)) + ")";
}

}  // namespace mspider::save
