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

#include "mspider/sql/ast.h"

namespace mspider::sql {
namespace {

bool SamePointee(const SubqueryPtr& a, const SubqueryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void Collect(const SqlTree& tree, ReferencedItems& out);

void Collect(const ColUnit& unit, ReferencedItems& out) {
  if (!unit.column.column.is_star()) out.columns.insert(unit.column.column);
}

void Collect(const ValUnit& unit, ReferencedItems& out) {
  Collect(unit.left, out);
  if (unit.right) Collect(*unit.right, out);
}

void Collect(const Value& value, ReferencedItems& out) {
  if (const auto* col = std::get_if<ColUnit>(&value.node)) Collect(*col, out);
  if (const auto* sub = std::get_if<SubqueryPtr>(&value.node)) Collect(**sub, out);
}

void Collect(const ConditionList& list, ReferencedItems& out) {
  for (const Condition& c : list.conditions) {
    Collect(c.left, out);
    Collect(c.value, out);
    if (c.upper) Collect(*c.upper, out);
  }
}

void Collect(const SqlTree& tree, ReferencedItems& out) {
  for (const SelectItem& item : tree.select) Collect(item.value, out);
  for (const TableSource& src : tree.from) {
    if (src.subquery) {
      Collect(*src.subquery, out);
    } else {
      out.tables.insert(src.table);
    }
    Collect(src.on, out);
  }
  Collect(tree.where, out);
  for (const ColUnit& unit : tree.group_by) Collect(unit, out);
  Collect(tree.having, out);
  if (tree.order_by) {
    for (const ValUnit& unit : tree.order_by->items) Collect(unit, out);
  }
  if (tree.set_op) Collect(*tree.set_op->right, out);
}

}  // namespace

ReferencedItems CollectReferences(const SqlTree& tree) {
  ReferencedItems out;
  Collect(tree, out);
  return out;
}

const char* AggName(AggOp op) {
  switch (op) {
    case AggOp::kNone: return "";
    case AggOp::kMax: return "max";
    case AggOp::kMin: return "min";
    case AggOp::kCount: return "count";
    case AggOp::kSum: return "sum";
    case AggOp::kAvg: return "avg";
  }
  return "";
}

const char* UnitOpSymbol(UnitOp op) {
  switch (op) {
    case UnitOp::kNone: return "";
    case UnitOp::kMinus: return "-";
    case UnitOp::kPlus: return "+";
    case UnitOp::kTimes: return "*";
    case UnitOp::kDivide: return "/";
  }
  return "";
}

const char* CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kBetween: return "BETWEEN";
    case CompareOp::kEq: return "=";
    case CompareOp::kGt: return ">";
    case CompareOp::kLt: return "<";
    case CompareOp::kGe: return ">=";
    case CompareOp::kLe: return "<=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kIn: return "IN";
    case CompareOp::kLike: return "LIKE";
  }
  return "";
}

const char* SetOpName(SetOp op) {
  switch (op) {
    case SetOp::kIntersect: return "intersect";
    case SetOp::kUnion: return "union";
    case SetOp::kExcept: return "except";
  }
  return "";
}

bool Value::operator==(const Value& other) const {
  if (node.index() != other.node.index()) return false;
  if (is_subquery()) {
    return SamePointee(std::get<SubqueryPtr>(node),
                       std::get<SubqueryPtr>(other.node));
  }
  return node == other.node;
}

bool TableSource::operator==(const TableSource& other) const {
  return table == other.table && alias == other.alias &&
         SamePointee(subquery, other.subquery) && on == other.on;
}

bool SetOperation::operator==(const SetOperation& other) const {
  return op == other.op && SamePointee(right, other.right);
}

ConditionList SqlTree::JoinConditions() const {
  ConditionList out;
  for (const TableSource& src : from) {
    if (src.on.empty()) continue;
    if (!out.empty()) out.connectors.push_back(Connector::kAnd);
    out.conditions.insert(out.conditions.end(), src.on.conditions.begin(),
                          src.on.conditions.end());
    out.connectors.insert(out.connectors.end(), src.on.connectors.begin(),
                          src.on.connectors.end());
  }
  return out;
}

}  // namespace mspider::sql
