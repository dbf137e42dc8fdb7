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

#ifndef MSPIDER_SQL_PARSER_H_
#define MSPIDER_SQL_PARSER_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "mspider/error.h"
#include "mspider/schema.h"
#include "mspider/sql/ast.h"

namespace mspider::sql {

class SqlError : public Error {
 public:
  enum class Kind { kSyntax, kUnknownTable, kUnknownColumn };

  SqlError(Kind kind, std::size_t position, std::string token,
           const std::string& what)
      : Error(what + " at offset " + std::to_string(position)),
        kind_(kind),
        position_(position),
        token_(std::move(token)) {}

  Kind kind() const { return kind_; }
  // Byte offset of the offending token in the query text.
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string token_;
};

// Parses one query and resolves every identifier against `schema`.
// Identifier and keyword matching is case-insensitive. Unqualified columns
// bind to the first FROM table that has them. Throws SqlError.
SqlTree ParseSql(std::string_view text, const DatabaseSchema& schema);

// Words of the dialect that cannot serve as identifiers.
bool IsReservedWord(std::string_view word);

// Renders a tree with upper-case keywords, the schema's current original
// names and the aliases recorded in the tree. ParseSql(PrintSql(t)) == t.
std::string PrintSql(const SqlTree& tree, const DatabaseSchema& schema);

}  // namespace mspider::sql

#endif  // MSPIDER_SQL_PARSER_H_
