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

#include "mspider/sql/canonical.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace mspider::sql {
namespace {

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void Sorted(std::vector<std::string>& v) { std::sort(v.begin(), v.end()); }

bool SameChild(const std::shared_ptr<const CanonicalSql>& a,
               const std::shared_ptr<const CanonicalSql>& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

// Builds component keys. With `rebuild` set, column units go through the
// foreign-key map (restricted to `valid_tables`) and lose their DISTINCT
// flag; otherwise they are keyed as written.
class KeyBuilder {
 public:
  KeyBuilder(const DatabaseSchema& schema, const std::map<int, int>& fk_map,
             bool strip_values)
      : schema_(schema), fk_map_(fk_map), strip_values_(strip_values) {}

  std::string ColumnId(ColumnRef ref) const {
    if (ref.is_star()) return "__all__";
    return "__" + Lower(schema_.table(ref.table).original_name) + "." +
           Lower(schema_.column(ref).original_name) + "__";
  }

  std::string ColKey(const ColUnit& unit, const std::set<int>* valid) const {
    ColumnRef ref = unit.column.column;
    std::string distinct = unit.distinct ? "1" : "0";
    if (valid) {
      if (!ref.is_star() && valid->count(ref.table)) {
        auto it = fk_map_.find(schema_.GlobalIndex(ref));
        if (it != fk_map_.end()) ref = schema_.FromGlobal(it->second);
      }
      distinct = "N";
    }
    return "(" + std::to_string(static_cast<int>(unit.agg)) + "," + ColumnId(ref) +
           "," + distinct + ")";
  }

  std::string ValUnitKey(const ValUnit& unit, const std::set<int>* valid) const {
    return "(" + std::to_string(static_cast<int>(unit.op)) + "," +
           ColKey(unit.left, valid) + "," +
           (unit.right ? ColKey(*unit.right, valid) : std::string("N")) + ")";
  }

  std::string LiteralKey(const Literal& lit) const {
    if (lit.kind == Literal::Kind::kString) {
      return "s" + std::to_string(lit.text.size()) + ":" + lit.text;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "n%.17g", lit.number);
    return buf;
  }

  // Condition operands: under value abstraction only subqueries survive.
  std::string ValueKey(const Value& value, bool strip) const {
    if (const auto* sub = std::get_if<SubqueryPtr>(&value.node)) {
      return "{" + RawKey(**sub, strip) + "}";
    }
    if (strip) return "N";
    if (const auto* lit = std::get_if<Literal>(&value.node)) return LiteralKey(*lit);
    return ColKey(std::get<ColUnit>(value.node), nullptr);
  }

  std::string ConditionKey(const Condition& c, const std::set<int>* valid,
                           bool strip) const {
    return "(" + std::string(c.negated ? "1" : "0") + "," +
           std::to_string(static_cast<int>(c.op)) + "," +
           ValUnitKey(c.left, valid) + "," + ValueKey(c.value, strip) + "," +
           (c.upper ? ValueKey(*c.upper, strip) : std::string("N")) + ")";
  }

  std::string ConditionListKey(const ConditionList& list, const std::set<int>* valid,
                               bool strip) const {
    std::string out = "[";
    for (std::size_t i = 0; i < list.conditions.size(); ++i) {
      if (i) out += list.connectors[i - 1] == Connector::kAnd ? ",and," : ",or,";
      out += ConditionKey(list.conditions[i], valid, strip);
    }
    return out + "]";
  }

  std::string OrderKey(const SqlTree& tree, const std::set<int>* valid) const {
    if (!tree.order_by) return "";
    std::string out = tree.order_by->direction == OrderDirection::kAsc ? "asc[" : "desc[";
    for (const ValUnit& v : tree.order_by->items) out += ValUnitKey(v, valid) + ",";
    return out + "]";
  }

  std::string TableUnitKey(const TableSource& src) const {
    if (src.subquery) return "sql{" + RawKey(*src.subquery, false) + "}";
    return "table_unit__" + Lower(schema_.table(src.table).original_name) + "__";
  }

  std::string LimitKey(const SqlTree& tree) const {
    if (!tree.limit) return "N";
    return strip_values_ ? "1" : std::to_string(*tree.limit);
  }

  // Whole-query key with columns as written. `strip` drops condition
  // literals; FROM subqueries always keep theirs.
  std::string RawKey(const SqlTree& tree, bool strip) const {
    std::string out = "sel:";
    out += tree.distinct ? "1[" : "0[";
    for (const SelectItem& item : tree.select) {
      out += "(" + std::to_string(static_cast<int>(item.agg)) + "," +
             ValUnitKey(item.value, nullptr) + "),";
    }
    out += "]|from:[";
    for (const TableSource& src : tree.from) out += TableUnitKey(src) + ",";
    out += "]" + ConditionListKey(tree.JoinConditions(), nullptr, strip);
    out += "|where:" + ConditionListKey(tree.where, nullptr, strip);
    out += "|group:[";
    for (const ColUnit& c : tree.group_by) out += ColKey(c, nullptr) + ",";
    out += "]|having:" + ConditionListKey(tree.having, nullptr, strip);
    out += "|order:" + OrderKey(tree, nullptr);
    out += "|limit:" + LimitKey(tree);
    if (tree.set_op) {
      out += "|" + std::string(SetOpName(tree.set_op->op)) + ":{" +
             RawKey(*tree.set_op->right, strip) + "}";
    }
    return out;
  }

  CanonicalSql Build(const SqlTree& tree, const std::set<int>& valid) const {
    CanonicalSql out;
    out.values_abstracted = strip_values_;
    const bool strip = strip_values_;

    for (const SelectItem& item : tree.select) {
      std::string vu = ValUnitKey(item.value, &valid);
      out.select.push_back(std::to_string(static_cast<int>(item.agg)) + "|" + vu);
      out.select_no_agg.push_back(std::move(vu));
    }
    for (const Condition& c : tree.where.conditions) {
      out.where.push_back(ConditionKey(c, &valid, strip));
      out.where_no_op.push_back(ValUnitKey(c.left, &valid));
    }
    for (Connector c : tree.where.connectors) {
      out.where_connectors.insert(c == Connector::kAnd ? "and" : "or");
    }
    for (const ColUnit& c : tree.group_by) {
      out.group_by.push_back(ColKey(c, &valid));
      // The reference compares GROUP BY columns with the table stripped.
      ColumnRef ref = c.column.column;
      if (!ref.is_star() && valid.count(ref.table)) {
        auto it = fk_map_.find(schema_.GlobalIndex(ref));
        if (it != fk_map_.end()) ref = schema_.FromGlobal(it->second);
      }
      std::string id = ColumnId(ref);
      auto dot = id.find('.');
      out.group_by_bare.push_back(dot == std::string::npos ? id : id.substr(dot + 1));
    }
    if (!tree.having.empty()) out.having = ConditionListKey(tree.having, &valid, strip);
    out.order_by = OrderKey(tree, &valid);
    out.has_limit = tree.limit.has_value();
    if (!strip) out.limit = tree.limit;
    for (const TableSource& src : tree.from) out.tables.push_back(TableUnitKey(src));

    Sorted(out.select);
    Sorted(out.select_no_agg);
    Sorted(out.where);
    Sorted(out.where_no_op);
    Sorted(out.group_by_bare);
    Sorted(out.tables);

    // Keywords.
    const ConditionList join = tree.JoinConditions();
    if (!tree.where.empty()) out.keywords.insert("where");
    if (!tree.group_by.empty()) out.keywords.insert("group");
    if (!tree.having.empty()) out.keywords.insert("having");
    if (tree.order_by) {
      out.keywords.insert(tree.order_by->direction == OrderDirection::kAsc ? "asc" : "desc");
      out.keywords.insert("order");
    }
    if (tree.limit) out.keywords.insert("limit");
    for (const ConditionList* list : {&join, &tree.where, &tree.having}) {
      for (Connector c : list->connectors) {
        if (c == Connector::kOr) out.keywords.insert("or");
      }
      for (const Condition& c : list->conditions) {
        if (c.negated) out.keywords.insert("not");
        if (c.op == CompareOp::kIn) out.keywords.insert("in");
        if (c.op == CompareOp::kLike) out.keywords.insert("like");
      }
    }

    if (tree.set_op) {
      out.keywords.insert(SetOpName(tree.set_op->op));
      // Set-operation operands keep the outer query's FROM tables for the
      // foreign-key rewrite.
      auto child = std::make_shared<const CanonicalSql>(Build(*tree.set_op->right, valid));
      switch (tree.set_op->op) {
        case SetOp::kIntersect: out.intersect = child; break;
        case SetOp::kUnion: out.union_ = child; break;
        case SetOp::kExcept: out.except = child; break;
      }
    }
    out.counts = CountComponents(tree);
    return out;
  }

 private:
  const DatabaseSchema& schema_;
  const std::map<int, int>& fk_map_;
  bool strip_values_;
};

}  // namespace

bool CanonicalSql::operator==(const CanonicalSql& o) const {
  return values_abstracted == o.values_abstracted && parsed == o.parsed &&
         select == o.select && select_no_agg == o.select_no_agg &&
         where == o.where && where_no_op == o.where_no_op &&
         where_connectors == o.where_connectors && group_by == o.group_by &&
         group_by_bare == o.group_by_bare && having == o.having &&
         order_by == o.order_by && has_limit == o.has_limit && limit == o.limit &&
         keywords == o.keywords && tables == o.tables &&
         SameChild(intersect, o.intersect) && SameChild(union_, o.union_) &&
         SameChild(except, o.except) && counts == o.counts;
}

CanonicalSql CanonicalSql::Unparsable(bool values_abstracted) {
  CanonicalSql out;
  out.values_abstracted = values_abstracted;
  out.parsed = false;
  return out;
}

// Foreign-key groups are formed the way the reference evaluator forms them:
// each key pair joins the first existing group containing either end, and
// groups are never merged with each other.
Canonicalizer::Canonicalizer(const DatabaseSchema& schema) : schema_(&schema) {
  std::vector<std::set<int>> groups;
  for (const auto& [a, b] : schema.foreign_keys()) {
    const int ga = schema.GlobalIndex(a);
    const int gb = schema.GlobalIndex(b);
    std::set<int>* target = nullptr;
    for (auto& g : groups) {
      if (g.count(ga) || g.count(gb)) {
        target = &g;
        break;
      }
    }
    if (!target) target = &groups.emplace_back();
    target->insert(ga);
    target->insert(gb);
  }
  for (const auto& g : groups) {
    const int rep = *g.begin();
    for (int idx : g) fk_map_[idx] = rep;
  }
}

CanonicalSql Canonicalizer::operator()(const SqlTree& tree, bool abstract_values) const {
  std::set<int> valid;
  for (const TableSource& src : tree.from) {
    if (!src.subquery) valid.insert(src.table);
  }
  return KeyBuilder(*schema_, fk_map_, abstract_values).Build(tree, valid);
}

CanonicalSql Canonicalize(const SqlTree& tree, const DatabaseSchema& schema,
                          bool abstract_values) {
  return Canonicalizer(schema)(tree, abstract_values);
}

HardnessCounts CountComponents(const SqlTree& tree) {
  HardnessCounts n;
  const ConditionList join = tree.JoinConditions();
  const ConditionList* lists[] = {&join, &tree.where, &tree.having};

  n.component1 += !tree.where.empty();
  n.component1 += !tree.group_by.empty();
  n.component1 += tree.order_by.has_value();
  n.component1 += tree.limit.has_value();
  if (!tree.from.empty()) n.component1 += static_cast<int>(tree.from.size()) - 1;
  for (const ConditionList* list : lists) {
    for (Connector c : list->connectors) n.component1 += c == Connector::kOr;
    for (const Condition& c : list->conditions) {
      n.component1 += c.op == CompareOp::kLike;
      n.component2 += c.value.is_subquery();
      n.component2 += c.upper && c.upper->is_subquery();
    }
  }
  n.component2 += tree.set_op.has_value();

  // The reference counts aggregates by looking at the first field of each
  // unit, which for conditions is the NOT flag and for HAVING connectors is
  // the connector itself.
  int aggs = 0;
  for (const SelectItem& item : tree.select) aggs += item.agg != AggOp::kNone;
  for (const Condition& c : tree.where.conditions) aggs += c.negated;
  for (const ColUnit& c : tree.group_by) aggs += c.agg != AggOp::kNone;
  if (tree.order_by) {
    for (const ValUnit& v : tree.order_by->items) {
      aggs += v.left.agg != AggOp::kNone;
      aggs += v.right && v.right->agg != AggOp::kNone;
    }
  }
  aggs += static_cast<int>(tree.having.connectors.size());
  for (const Condition& c : tree.having.conditions) aggs += c.negated;

  n.others += aggs > 1;
  n.others += tree.select.size() > 1;
  n.others += tree.where.conditions.size() > 1;
  n.others += tree.group_by.size() > 1;
  return n;
}

}  // namespace mspider::sql
