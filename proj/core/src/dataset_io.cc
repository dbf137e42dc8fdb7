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

#include "mspider/dataset_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mspider/error.h"
#include "mspider/sql/parser.h"
#include "mspider/unicode.h"

namespace mspider {
namespace {

using json = nlohmann::json;

json ParseJson(std::string_view text, const std::string& source) {
  // An empty examples file is an empty dataset.
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return json::array();
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.byte, e.what());
  }
}

template <typename T>
T Field(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DataError(context + ": missing key '" + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw DataError(context + ": bad value for '" + key + "': " + e.what());
  }
}

DatabaseSchema SchemaFromJson(const json& entry, std::size_t position,
                              const std::string& source) {
  const std::string context =
      source + ": database #" + std::to_string(position);
  if (!entry.is_object()) throw DataError(context + ": not an object");
  auto db_id = Field<std::string>(entry, "db_id", context);
  const std::string where = source + ": database '" + db_id + "'";
  auto table_names = Field<std::vector<std::string>>(entry, "table_names", where);
  auto table_orig =
      Field<std::vector<std::string>>(entry, "table_names_original", where);
  using ColumnPairs = std::vector<std::pair<int, std::string>>;
  auto col_names = Field<ColumnPairs>(entry, "column_names", where);
  auto col_orig = Field<ColumnPairs>(entry, "column_names_original", where);
  auto col_types = Field<std::vector<std::string>>(entry, "column_types", where);
  auto primary = Field<std::vector<json>>(entry, "primary_keys", where);
  auto foreign =
      Field<std::vector<std::pair<int, int>>>(entry, "foreign_keys", where);

  if (table_names.size() != table_orig.size()) {
    throw DataError(where + ": table_names and table_names_original differ in length");
  }
  if (col_names.size() != col_orig.size() || col_names.size() != col_types.size()) {
    throw DataError(where + ": column arrays differ in length");
  }
  if (col_orig.empty() || col_orig[0].first != -1) {
    throw DataError(where + ": column 0 must be the '*' pseudo-column");
  }

  std::vector<TableDef> tables(table_orig.size());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    tables[t].original_name = table_orig[t];
    tables[t].display_name = table_names[t];
  }
  int previous_table = 0;
  for (std::size_t i = 1; i < col_orig.size(); ++i) {
    int t = col_orig[i].first;
    if (t < 0 || t >= static_cast<int>(tables.size())) {
      throw DataError(where + ": column " + std::to_string(i) +
                      " references table index " + std::to_string(t) +
                      " out of range");
    }
    if (col_names[i].first != t) {
      throw DataError(where + ": column " + std::to_string(i) +
                      " has inconsistent table indices");
    }
    if (t < previous_table) {
      throw DataError(where + ": columns are not grouped by table");
    }
    previous_table = t;
    auto type = ParseColumnType(col_types[i]);
    if (!type) {
      throw DataError(where + ": unknown column type '" + col_types[i] + "'");
    }
    tables[t].columns.push_back(
        ColumnDef{col_orig[i].second, col_names[i].second, *type});
  }

  DatabaseSchema schema(db_id, std::move(tables));
  const int n = schema.column_count();
  auto ref = [&](int global) {
    if (global <= 0 || global >= n) {
      throw DataError(where + ": key references column index " +
                      std::to_string(global) + " out of range");
    }
    return schema.FromGlobal(global);
  };
  // Composite primary keys appear as nested arrays in some releases.
  for (const json& pk : primary) {
    if (pk.is_array()) {
      for (const json& part : pk) schema.primary_keys().push_back(ref(part.get<int>()));
    } else {
      schema.primary_keys().push_back(ref(pk.get<int>()));
    }
  }
  for (const auto& [a, b] : foreign) {
    schema.foreign_keys().emplace_back(ref(a), ref(b));
  }
  schema.Validate();
  return schema;
}

json SchemaToJson(const DatabaseSchema& schema) {
  json table_names = json::array(), table_orig = json::array();
  json col_names = json::array({json::array({-1, "*"})});
  json col_orig = json::array({json::array({-1, "*"})});
  json col_types = json::array({"text"});
  for (std::size_t t = 0; t < schema.tables().size(); ++t) {
    const TableDef& table = schema.tables()[t];
    table_names.push_back(table.display_name);
    table_orig.push_back(table.original_name);
    for (const ColumnDef& c : table.columns) {
      col_names.push_back(json::array({static_cast<int>(t), c.display_name}));
      col_orig.push_back(json::array({static_cast<int>(t), c.original_name}));
      col_types.push_back(std::string(ColumnTypeName(c.type)));
    }
  }
  json primary = json::array();
  for (ColumnRef k : schema.primary_keys()) primary.push_back(schema.GlobalIndex(k));
  json foreign = json::array();
  for (const auto& [a, b] : schema.foreign_keys()) {
    foreign.push_back(json::array({schema.GlobalIndex(a), schema.GlobalIndex(b)}));
  }
  return json{{"db_id", schema.db_id()},
              {"table_names", table_names},
              {"table_names_original", table_orig},
              {"column_names", col_names},
              {"column_names_original", col_orig},
              {"column_types", col_types},
              {"primary_keys", primary},
              {"foreign_keys", foreign}};
}

void AppendExamples(const json& root, const SchemaCollection& schemas,
                    const std::string& source, Dataset& out,
                    std::vector<std::string>& missing,
                    std::set<std::string>& seen_ids) {
  if (!root.is_array()) throw DataError(source + ": expected a JSON array");
  for (const json& item : root) {
    const std::size_t position = out.examples.size();
    const std::string context = source + ": example #" + std::to_string(position);
    if (!item.is_object()) throw DataError(context + ": not an object");
    Example ex;
    ex.language = out.language;
    ex.db_id = Field<std::string>(item, "db_id", context);
    ex.question = Field<std::string>(item, "question", context);
    ex.gold_sql = Field<std::string>(item, "query", context);
    if (auto it = item.find("example_id"); it != item.end() && it->is_string()) {
      ex.example_id = it->get<std::string>();
    } else {
      ex.example_id = DefaultExampleId(out.split, position);
    }
    if (unicode::Trim(ex.question).empty()) {
      throw DataError(context + ": empty question", {ex.example_id});
    }
    if (!seen_ids.insert(ex.example_id).second) {
      throw DataError(context + ": duplicate example_id '" + ex.example_id + "'",
                      {ex.example_id});
    }
    auto schema = schemas.find(ex.db_id);
    if (schema == schemas.end()) {
      missing.push_back(ex.example_id);
    } else {
      if (!out.schemas.contains(ex.db_id)) out.schemas.emplace(ex.db_id, schema->second);
      try {
        sql::ParseSql(ex.gold_sql, schema->second);
      } catch (const sql::SqlError&) {
        ex.gold_parsable = false;
      }
    }
    out.examples.push_back(std::move(ex));
  }
}

void ThrowMissing(const std::vector<std::string>& missing, const Dataset& d) {
  if (missing.empty()) return;
  std::string list;
  for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
    if (i) list += ", ";
    list += missing[i];
  }
  if (missing.size() > 10) list += ", ...";
  std::string db;
  for (const Example& ex : d.examples) {
    if (ex.example_id == missing.front()) db = ex.db_id;
  }
  throw DataError(std::to_string(missing.size()) +
                      " example(s) reference unknown databases (first: '" + db +
                      "'): " + list,
                  missing);
}

}  // namespace

SchemaCollection ParseSchemas(std::string_view json_text, const std::string& source) {
  json root = ParseJson(json_text, source);
  if (!root.is_array()) throw DataError(source + ": expected a JSON array");
  SchemaCollection out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    DatabaseSchema schema = SchemaFromJson(root[i], i, source);
    std::string id = schema.db_id();
    if (!out.emplace(id, std::move(schema)).second) {
      throw DataError(source + ": duplicate db_id '" + id + "'", {id});
    }
  }
  return out;
}

SchemaCollection LoadSchemas(const std::filesystem::path& path) {
  return ParseSchemas(ReadFile(path), path.string());
}

void MergeSchemas(SchemaCollection& into, SchemaCollection extra) {
  for (auto& [id, schema] : extra) {
    if (into.contains(id)) throw DataError("duplicate db_id '" + id + "'", {id});
    into.emplace(id, std::move(schema));
  }
}

std::string EmitSchemas(const SchemaCollection& schemas) {
  json root = json::array();
  for (const auto& [id, schema] : schemas) root.push_back(SchemaToJson(schema));
  return root.dump(1, ' ', false) + "\n";
}

Dataset ParseExamples(std::string_view json_text, const SchemaCollection& schemas,
                      Split split, Language language, const std::string& source) {
  Dataset out;
  out.split = split;
  out.language = language;
  std::vector<std::string> missing;
  std::set<std::string> seen;
  AppendExamples(ParseJson(json_text, source), schemas, source, out, missing, seen);
  ThrowMissing(missing, out);
  return out;
}

Dataset LoadExamples(const std::filesystem::path& path,
                     const SchemaCollection& schemas, Split split,
                     Language language) {
  return ParseExamples(ReadFile(path), schemas, split, language, path.string());
}

Dataset LoadExamples(const std::vector<std::filesystem::path>& paths,
                     const SchemaCollection& schemas, Split split,
                     Language language) {
  Dataset out;
  out.split = split;
  out.language = language;
  std::vector<std::string> missing;
  std::set<std::string> seen;
  for (const auto& path : paths) {
    AppendExamples(ParseJson(ReadFile(path), path.string()), schemas,
                   path.string(), out, missing, seen);
  }
  ThrowMissing(missing, out);
  return out;
}

std::string EmitExamples(const Dataset& dataset) {
  json root = json::array();
  for (const Example& ex : dataset.examples) {
    root.push_back(json{{"db_id", ex.db_id},
                        {"question", ex.question},
                        {"query", ex.gold_sql},
                        {"example_id", ex.example_id}});
  }
  return root.dump(1, ' ', false) + "\n";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mspider
