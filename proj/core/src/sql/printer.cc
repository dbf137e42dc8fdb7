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

#include <cctype>
#include <string>

#include "mspider/sql/parser.h"

namespace mspider::sql {
namespace {

std::string Upper(const char* s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Printer {
 public:
  explicit Printer(const DatabaseSchema& schema) : schema_(schema) {}

  std::string Query(const SqlTree& tree) const {
    std::string out = "SELECT ";
    if (tree.distinct) out += "DISTINCT ";
    for (std::size_t i = 0; i < tree.select.size(); ++i) {
      if (i) out += ", ";
      const SelectItem& item = tree.select[i];
      if (item.agg == AggOp::kNone) {
        out += ValUnitText(item.value);
      } else if (item.value.op != UnitOp::kNone) {
        out += Upper(AggName(item.agg)) + ValUnitText(item.value);
      } else {
        const ColUnit& unit = item.value.left;
        const std::string inner = unit.agg == AggOp::kNone && unit.distinct
                                      ? "DISTINCT " + ColumnText(unit.column)
                                      : ColUnitText(unit);
        out += Upper(AggName(item.agg)) + "(" + inner + ")";
      }
    }
    out += " FROM ";
    for (std::size_t i = 0; i < tree.from.size(); ++i) {
      const TableSource& src = tree.from[i];
      if (i) out += " JOIN ";
      if (src.subquery) {
        out += "(" + Query(*src.subquery) + ")";
      } else {
        out += schema_.table(src.table).original_name;
        if (src.alias) out += " AS " + *src.alias;
      }
      if (!src.on.empty()) out += " ON " + Conditions(src.on);
    }
    if (!tree.where.empty()) out += " WHERE " + Conditions(tree.where);
    if (!tree.group_by.empty()) {
      out += " GROUP BY ";
      for (std::size_t i = 0; i < tree.group_by.size(); ++i) {
        if (i) out += ", ";
        out += ColUnitText(tree.group_by[i]);
      }
    }
    if (!tree.having.empty()) out += " HAVING " + Conditions(tree.having);
    if (tree.order_by) {
      out += " ORDER BY ";
      for (std::size_t i = 0; i < tree.order_by->items.size(); ++i) {
        if (i) out += ", ";
        out += ValUnitText(tree.order_by->items[i]);
      }
      out += tree.order_by->direction == OrderDirection::kAsc ? " ASC" : " DESC";
    }
    if (tree.limit) out += " LIMIT " + std::to_string(*tree.limit);
    if (tree.set_op) {
      out += " " + Upper(SetOpName(tree.set_op->op)) + " " + Query(*tree.set_op->right);
    }
    return out;
  }

 private:
  std::string ColumnText(const ColumnName& name) const {
    if (name.column.is_star()) return "*";
    const std::string& column = schema_.column(name.column).original_name;
    switch (name.qualifier) {
      case ColumnName::Qualifier::kNone:
        return column;
      case ColumnName::Qualifier::kAlias:
        return name.alias + "." + column;
      case ColumnName::Qualifier::kTable:
        return schema_.table(name.column.table).original_name + "." + column;
    }
    return column;
  }

  // A DISTINCT column without an aggregate is parenthesized so that it
  // cannot be read as SELECT DISTINCT.
  std::string ColUnitText(const ColUnit& unit) const {
    std::string inner = (unit.distinct ? "DISTINCT " : "") + ColumnText(unit.column);
    if (unit.agg != AggOp::kNone) return Upper(AggName(unit.agg)) + "(" + inner + ")";
    if (unit.distinct) return "(" + inner + ")";
    return inner;
  }

  std::string ValUnitText(const ValUnit& unit) const {
    if (unit.op == UnitOp::kNone) return ColUnitText(unit.left);
    return "(" + ColUnitText(unit.left) + " " + UnitOpSymbol(unit.op) + " " +
           ColUnitText(*unit.right) + ")";
  }

  std::string ValueText(const Value& value) const {
    if (const auto* lit = std::get_if<Literal>(&value.node)) {
      if (lit->kind == Literal::Kind::kNumber) return lit->text;
      return std::string(1, lit->quote) + lit->text + lit->quote;
    }
    if (const auto* col = std::get_if<ColUnit>(&value.node)) return ColUnitText(*col);
    return "(" + Query(*std::get<SubqueryPtr>(value.node)) + ")";
  }

  std::string Conditions(const ConditionList& list) const {
    std::string out;
    for (std::size_t i = 0; i < list.conditions.size(); ++i) {
      if (i) out += list.connectors[i - 1] == Connector::kAnd ? " AND " : " OR ";
      const Condition& cond = list.conditions[i];
      out += ValUnitText(cond.left);
      if (cond.negated) out += " NOT";
      out += std::string(" ") + CompareOpSymbol(cond.op) + " " + ValueText(cond.value);
      if (cond.upper) out += " AND " + ValueText(*cond.upper);
    }
    return out;
  }

  const DatabaseSchema& schema_;
};

}  // namespace

std::string PrintSql(const SqlTree& tree, const DatabaseSchema& schema) {
  return Printer(schema).Query(tree);
}

}  // namespace mspider::sql
