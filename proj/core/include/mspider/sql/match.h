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

#ifndef MSPIDER_SQL_MATCH_H_
#define MSPIDER_SQL_MATCH_H_

#include <array>
#include <string_view>

#include "mspider/sql/canonical.h"

namespace mspider::sql {

enum class Clause {
  kSelect,
  kSelectNoAgg,
  kWhere,
  kWhereNoOp,
  kGroupNoHaving,
  kGroup,
  kOrder,
  kAndOr,
  kIuen,
  kKeywords,
};
inline constexpr int kClauseCount = 10;

// Report key of a clause: "select", "select(no AGG)", "where", ... ,
// "keywords" (the reference evaluator's partial-match names).
std::string_view ClauseName(Clause clause);

struct MatchResult {
  bool matched = false;
  std::array<bool, kClauseCount> clauses{};

  bool clause(Clause c) const { return clauses[static_cast<int>(c)]; }
};

// Exact set match of `pred` against `gold`. Throws Error when the two were
// canonicalized under different value-abstraction settings.
MatchResult ExactMatch(const CanonicalSql& pred, const CanonicalSql& gold);

enum class Hardness { kEasy, kMedium, kHard, kExtra };
inline constexpr int kHardnessCount = 4;

std::string_view HardnessName(Hardness h);  // "easy", ...
Hardness ClassifyHardness(const HardnessCounts& counts);
inline Hardness ClassifyHardness(const CanonicalSql& gold) {
  return ClassifyHardness(gold.counts);
}

}  // namespace mspider::sql

#endif  // MSPIDER_SQL_MATCH_H_
