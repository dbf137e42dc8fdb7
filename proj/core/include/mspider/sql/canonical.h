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

#ifndef MSPIDER_SQL_CANONICAL_H_
#define MSPIDER_SQL_CANONICAL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mspider/schema.h"
#include "mspider/sql/ast.h"

namespace mspider::sql {

// Component counts behind the difficulty classification.
struct HardnessCounts {
  int component1 = 0;  // clauses, extra tables, OR, LIKE
  int component2 = 0;  // nested queries and set operations
  int others = 0;      // aggregates, multi-item select/where/group

  bool operator==(const HardnessCounts&) const = default;
};

// Clause-decomposed form used for exact match. Multiset components are kept
// as sorted vectors of component keys; ordered components keep their order.
//
// Column ids are schema-qualified and lower-cased. Columns of tables in the
// FROM clause that take part in a foreign key collapse onto the
// lowest-numbered column of their key group, and DISTINCT flags on column
// units are dropped, as in the reference evaluator. Nested WHERE/HAVING
// subqueries and FROM subqueries are compared as whole raw keys.
struct CanonicalSql {
  bool values_abstracted = true;
  bool parsed = true;  // false for the placeholder of an unparsable query

  std::vector<std::string> select;         // "agg|value unit", sorted
  std::vector<std::string> select_no_agg;  // value units, sorted
  std::vector<std::string> where;          // conditions, sorted
  std::vector<std::string> where_no_op;    // condition left sides, sorted
  std::set<std::string> where_connectors;  // {"and", "or"}
  std::vector<std::string> group_by;       // column ids, in order
  std::vector<std::string> group_by_bare;  // column names only, sorted
  std::string having;                      // ordered key, "" when absent
  std::string order_by;                    // ordered key, "" when absent
  bool has_limit = false;
  std::optional<std::int64_t> limit;       // kept only with literal values
  std::set<std::string> keywords;
  std::vector<std::string> tables;         // table units, sorted

  std::shared_ptr<const CanonicalSql> intersect;
  std::shared_ptr<const CanonicalSql> union_;
  std::shared_ptr<const CanonicalSql> except;

  HardnessCounts counts;

  bool operator==(const CanonicalSql& other) const;

  // Stand-in for a prediction that failed to parse: matches nothing.
  static CanonicalSql Unparsable(bool values_abstracted);
};

// Per-database state for canonicalization (the foreign-key map). Cheap to
// copy; build once per schema when canonicalizing many queries.
class Canonicalizer {
 public:
  explicit Canonicalizer(const DatabaseSchema& schema);

  CanonicalSql operator()(const SqlTree& tree, bool abstract_values = true) const;

  const DatabaseSchema& schema() const { return *schema_; }

 private:
  const DatabaseSchema* schema_;
  std::map<int, int> fk_map_;  // global column index -> representative
};

CanonicalSql Canonicalize(const SqlTree& tree, const DatabaseSchema& schema,
                          bool abstract_values = true);

HardnessCounts CountComponents(const SqlTree& tree);

}  // namespace mspider::sql

#endif  // MSPIDER_SQL_CANONICAL_H_
