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

#include "mspider/sql/evaluation.h"

#include <cstdio>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"
#include "mspider/error.h"
#include "mspider/sql/parser.h"
#include "mspider/util/parallel.h"

namespace mspider::sql {
namespace {

struct Scored {
  std::optional<ExampleOutcome> outcome;  // empty when gold is unparsable
};

nlohmann::json CellJson(const AccuracyCell& c) {
  return {{"count", c.count}, {"matched", c.matched}, {"accuracy", c.accuracy()}};
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

EvaluationReport EvaluateCorpus(const std::vector<std::string>& predictions,
                                const Dataset& dataset,
                                const EvaluationOptions& options) {
  if (predictions.size() != dataset.examples.size()) {
    throw DataError("prediction count " + std::to_string(predictions.size()) +
                    " does not match example count " +
                    std::to_string(dataset.examples.size()));
  }
  std::map<std::string, Canonicalizer> canon;
  for (const auto& [db_id, schema] : dataset.schemas) canon.emplace(db_id, Canonicalizer(schema));

  std::vector<Scored> scored(predictions.size());
  ParallelFor(predictions.size(), options.jobs, [&](std::size_t i) {
    const Example& ex = dataset.examples[i];
    const DatabaseSchema& schema = dataset.SchemaFor(ex);
    const Canonicalizer& c = canon.at(ex.db_id);
    SqlTree gold_tree;
    try {
      gold_tree = ParseSql(ex.gold_sql, schema);
    } catch (const SqlError&) {
      return;
    }
    ExampleOutcome out;
    out.example_id = ex.example_id;
    const CanonicalSql gold = c(gold_tree, options.abstract_values);
    out.hardness = ClassifyHardness(gold);
    CanonicalSql pred = CanonicalSql::Unparsable(options.abstract_values);
    try {
      pred = c(ParseSql(predictions[i], schema), options.abstract_values);
      out.pred_parsable = true;
    } catch (const SqlError&) {
    }
    const MatchResult m = ExactMatch(pred, gold);
    out.matched = m.matched;
    out.clauses = m.clauses;
    scored[i].outcome = std::move(out);
  });

  EvaluationReport report;
  report.values_abstracted = options.abstract_values;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (!scored[i].outcome) {
      report.skipped_gold.push_back(dataset.examples[i].example_id);
      continue;
    }
    const ExampleOutcome& o = *scored[i].outcome;
    AccuracyCell& h = report.by_hardness[static_cast<int>(o.hardness)];
    ++report.overall.count;
    ++h.count;
    report.overall.matched += o.matched;
    h.matched += o.matched;
    report.unparsable_predictions += !o.pred_parsable;
    for (int k = 0; k < kClauseCount; ++k) report.clause_matches[k] += o.clauses[k];
    report.examples.push_back(o);
  }
  return report;
}

std::string EvaluationReport::ToJson(bool include_examples) const {
  nlohmann::json j;
  j["mode"] = values_abstracted ? "exact_match_without_values" : "exact_match_with_values";
  j["overall"] = CellJson(overall);
  for (int h = 0; h < kHardnessCount; ++h) {
    j["by_hardness"][std::string(HardnessName(static_cast<Hardness>(h)))] =
        CellJson(by_hardness[h]);
  }
  for (int k = 0; k < kClauseCount; ++k) {
    j["per_clause"][std::string(ClauseName(static_cast<Clause>(k)))] = {
        {"matched", clause_matches[k]},
        {"rate", overall.count ? static_cast<double>(clause_matches[k]) / overall.count : 0.0}};
  }
  j["unparsable_predictions"] = unparsable_predictions;
  j["skipped_gold"] = skipped_gold;
  if (include_examples) {
    j["examples"] = nlohmann::json::array();
    for (const ExampleOutcome& o : examples) {
      nlohmann::json e = {{"example_id", o.example_id},
                          {"hardness", std::string(HardnessName(o.hardness))},
                          {"pred_parsable", o.pred_parsable},
                          {"matched", o.matched}};
      for (int k = 0; k < kClauseCount; ++k) {
        e["clauses"][std::string(ClauseName(static_cast<Clause>(k)))] = o.clauses[k];
      }
      j["examples"].push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

std::string EvaluationReport::ToText() const {
  auto row = [](const std::string& label, const std::vector<std::string>& cells) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-20s", label.c_str());
    std::string out = buf;
    for (const auto& c : cells) {
      std::snprintf(buf, sizeof(buf), "%-10s", c.c_str());
      out += buf;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::vector<std::string> header, counts, acc;
  for (int h = 0; h < kHardnessCount; ++h) {
    header.emplace_back(HardnessName(static_cast<Hardness>(h)));
    counts.push_back(std::to_string(by_hardness[h].count));
    acc.push_back(Fixed3(by_hardness[h].accuracy()));
  }
  header.emplace_back("all");
  counts.push_back(std::to_string(overall.count));
  acc.push_back(Fixed3(overall.accuracy()));

  std::string out = row("", header) + row("count", counts) +
                    row(values_abstracted ? "exact match" : "exact match (values)", acc);
  out += "\nper-clause match rate\n";
  for (int k = 0; k < kClauseCount; ++k) {
    out += row(std::string(ClauseName(static_cast<Clause>(k))),
               {Fixed3(overall.count ? static_cast<double>(clause_matches[k]) / overall.count
                                     : 0.0)});
  }
  out += "\nunparsable predictions: " + std::to_string(unparsable_predictions) + "\n";
  if (!skipped_gold.empty()) {
    out += "skipped (gold unparsable): " + std::to_string(skipped_gold.size()) + "\n";
  }
  return out;
}

std::vector<std::string> ParsePredictions(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line);
    start = end + 1;
  }
  return out;
}

std::vector<std::string> ReadPredictions(const std::filesystem::path& path) {
  return ParsePredictions(ReadFile(path));
}

}  // namespace mspider::sql
