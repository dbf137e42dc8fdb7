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

#include "mspider/sql/match.h"

#include <algorithm>

#include "mspider/error.h"

namespace mspider::sql {
namespace {

bool Same(const std::shared_ptr<const CanonicalSql>& pred,
          const std::shared_ptr<const CanonicalSql>& gold) {
  if (!pred || !gold) return !pred && !gold;
  return ExactMatch(*pred, *gold).matched;
}

}  // namespace

std::string_view ClauseName(Clause clause) {
  switch (clause) {
    case Clause::kSelect: return "select";
    case Clause::kSelectNoAgg: return "select(no AGG)";
    case Clause::kWhere: return "where";
    case Clause::kWhereNoOp: return "where(no OP)";
    case Clause::kGroupNoHaving: return "group(no Having)";
    case Clause::kGroup: return "group";
    case Clause::kOrder: return "order";
    case Clause::kAndOr: return "and/or";
    case Clause::kIuen: return "IUEN";
    case Clause::kKeywords: return "keywords";
  }
  return "";
}

MatchResult ExactMatch(const CanonicalSql& pred, const CanonicalSql& gold) {
  if (pred.values_abstracted != gold.values_abstracted) {
    throw Error("exact match between value-abstracted and value-sensitive forms");
  }
  MatchResult r;
  auto set = [&](Clause c, bool v) { r.clauses[static_cast<int>(c)] = v; };

  set(Clause::kSelect, pred.select == gold.select);
  set(Clause::kSelectNoAgg, pred.select_no_agg == gold.select_no_agg);
  set(Clause::kWhere, pred.where == gold.where);
  set(Clause::kWhereNoOp, pred.where_no_op == gold.where_no_op);
  set(Clause::kGroupNoHaving, pred.group_by_bare == gold.group_by_bare);

  // HAVING is judged together with the ordered GROUP BY columns and only
  // counts as a match when both sides group.
  const bool pg = !pred.group_by.empty();
  const bool gg = !gold.group_by.empty();
  set(Clause::kGroup, pg == gg && (!gg || (pred.group_by == gold.group_by &&
                                           pred.having == gold.having)));

  const bool po = !pred.order_by.empty();
  const bool go = !gold.order_by.empty();
  bool order = po == go && (!go || (pred.order_by == gold.order_by &&
                                    pred.has_limit == gold.has_limit));
  if (!gold.values_abstracted) order = order && pred.limit == gold.limit;
  set(Clause::kOrder, order);

  set(Clause::kAndOr, pred.where_connectors == gold.where_connectors);
  set(Clause::kIuen, Same(pred.intersect, gold.intersect) &&
                         Same(pred.except, gold.except) &&
                         Same(pred.union_, gold.union_));
  set(Clause::kKeywords, pred.keywords == gold.keywords);

  r.matched = std::all_of(r.clauses.begin(), r.clauses.end(), [](bool b) { return b; });
  if (r.matched && !gold.tables.empty()) r.matched = pred.tables == gold.tables;
  return r;
}

std::string_view HardnessName(Hardness h) {
  switch (h) {
    case Hardness::kEasy: return "easy";
    case Hardness::kMedium: return "medium";
    case Hardness::kHard: return "hard";
    case Hardness::kExtra: return "extra";
  }
  return "";
}

Hardness ClassifyHardness(const HardnessCounts& n) {
  const int c1 = n.component1, c2 = n.component2, o = n.others;
  if (c1 <= 1 && o == 0 && c2 == 0) return Hardness::kEasy;
  if ((o <= 2 && c1 <= 1 && c2 == 0) || (c1 <= 2 && o < 2 && c2 == 0)) {
    return Hardness::kMedium;
  }
  if ((o > 2 && c1 <= 2 && c2 == 0) || (c1 > 2 && c1 <= 3 && o <= 2 && c2 == 0) ||
      (c1 <= 1 && o == 0 && c2 <= 1)) {
    return Hardness::kHard;
  }
  return Hardness::kExtra;
}

}  // namespace mspider::sql
