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

#ifndef MSPIDER_SQL_AST_H_
#define MSPIDER_SQL_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mspider/schema.h"

namespace mspider::sql {

// Enumerator order matches the operator tables of the reference evaluator
// so that numeric ids line up in debugging output.
enum class AggOp { kNone, kMax, kMin, kCount, kSum, kAvg };
enum class UnitOp { kNone, kMinus, kPlus, kTimes, kDivide };
enum class CompareOp {
  kBetween = 1,
  kEq = 2,
  kGt = 3,
  kLt = 4,
  kGe = 5,
  kLe = 6,
  kNe = 7,
  kIn = 8,
  kLike = 9,
};
enum class Connector { kAnd, kOr };
enum class OrderDirection { kAsc, kDesc };
enum class SetOp { kIntersect, kUnion, kExcept };

const char* AggName(AggOp op);       // "max", ... ; "" for kNone
const char* UnitOpSymbol(UnitOp op);  // "-", "+", "*", "/"
const char* CompareOpSymbol(CompareOp op);
const char* SetOpName(SetOp op);      // "intersect", ...

struct SqlTree;

// How a column was qualified in the source text. Printing reproduces the
// qualifier; a table qualifier follows renames of that table.
struct ColumnName {
  enum class Qualifier { kNone, kAlias, kTable };

  ColumnRef column;
  Qualifier qualifier = Qualifier::kNone;
  std::string alias;  // as written, for Qualifier::kAlias

  bool operator==(const ColumnName&) const = default;
};

struct ColUnit {
  AggOp agg = AggOp::kNone;
  ColumnName column;
  bool distinct = false;

  bool operator==(const ColUnit&) const = default;
};

struct ValUnit {
  UnitOp op = UnitOp::kNone;
  ColUnit left;
  std::optional<ColUnit> right;  // present iff op != kNone

  bool operator==(const ValUnit&) const = default;
};

struct Literal {
  enum class Kind { kNumber, kString };

  Kind kind = Kind::kNumber;
  std::string text;   // number spelling, or string contents without quotes
  char quote = '"';   // delimiter used for strings
  double number = 0;  // parsed value for numbers

  bool operator==(const Literal&) const = default;
};

using SubqueryPtr = std::shared_ptr<const SqlTree>;

// Right-hand operand of a condition.
struct Value {
  std::variant<Literal, ColUnit, SubqueryPtr> node;

  bool is_subquery() const { return std::holds_alternative<SubqueryPtr>(node); }
  bool operator==(const Value& other) const;
};

struct Condition {
  bool negated = false;
  CompareOp op = CompareOp::kEq;
  ValUnit left;
  Value value;
  std::optional<Value> upper;  // second operand of BETWEEN

  bool operator==(const Condition&) const = default;
};

// conditions[i] and conditions[i + 1] are joined by connectors[i].
struct ConditionList {
  std::vector<Condition> conditions;
  std::vector<Connector> connectors;

  bool empty() const { return conditions.empty(); }
  bool operator==(const ConditionList&) const = default;
};

struct TableSource {
  int table = -1;                     // schema table index, or -1
  std::optional<std::string> alias;   // as written
  SubqueryPtr subquery;               // set when table == -1
  ConditionList on;                   // JOIN ... ON conditions

  bool operator==(const TableSource& other) const;
};

struct SelectItem {
  AggOp agg = AggOp::kNone;
  ValUnit value;

  bool operator==(const SelectItem&) const = default;
};

struct OrderBy {
  OrderDirection direction = OrderDirection::kAsc;
  std::vector<ValUnit> items;

  bool operator==(const OrderBy&) const = default;
};

struct SetOperation {
  SetOp op = SetOp::kUnion;
  SubqueryPtr right;

  bool operator==(const SetOperation& other) const;
};

// A query of the closed Spider dialect: no CTEs, window functions or
// column aliases.
struct SqlTree {
  bool distinct = false;
  std::vector<SelectItem> select;
  std::vector<TableSource> from;
  ConditionList where;
  std::vector<ColUnit> group_by;
  ConditionList having;
  std::optional<OrderBy> order_by;
  std::optional<std::int64_t> limit;
  std::optional<SetOperation> set_op;

  // JOIN ... ON conditions of every source, joined with AND.
  ConditionList JoinConditions() const;

  bool operator==(const SqlTree&) const = default;
};

// Tables and columns mentioned anywhere in a tree, nested queries
// included. `*` is never listed.
struct ReferencedItems {
  std::set<int> tables;
  std::set<ColumnRef> columns;
};

ReferencedItems CollectReferences(const SqlTree& tree);

}  // namespace mspider::sql

#endif  // MSPIDER_SQL_AST_H_
