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

#include "mspider/linker/link_score.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mspider/sql/parser.h"
#include "mspider/unicode.h"
#include "mspider/util/parallel.h"

namespace mspider::linker {
namespace {

struct Unit {
  std::string text;
  int run = 0;       // consecutive CJK units share a run
  bool cjk = false;
};

std::vector<Unit> CharacterUnits(std::string_view text) {
  const std::u32string folded = unicode::ToUtf32(unicode::FoldForMatch(text));
  std::vector<Unit> out;
  std::u32string pending;
  int run = 0;
  bool in_run = false;
  auto flush = [&] {
    if (pending.empty()) return;
    for (std::string& w : unicode::WordSegments(unicode::ToUtf8(pending))) {
      out.push_back(Unit{std::move(w), ++run, false});
    }
    pending.clear();
  };
  for (char32_t c : folded) {
    if (unicode::IsCjk(c) && unicode::IsLetterOrDigit(c)) {
      flush();
      if (!in_run) ++run;
      in_run = true;
      out.push_back(Unit{unicode::ToUtf8(std::u32string_view(&c, 1)), run, true});
      continue;
    }
    in_run = false;
    pending.push_back(c);
  }
  flush();
  return out;
}

std::string Join(std::span<const std::string> units) {
  std::string out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) out += ' ';
    out += units[i];
  }
  return out;
}

double EditSimilarity(const std::u32string& a, const std::u32string& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(unicode::EditDistance(a, b)) /
                   static_cast<double>(longest);
}

// Adjacent pairs, or the units themselves for single-unit sequences.
std::map<std::string, int> Grams(std::span<const std::string> units) {
  std::map<std::string, int> out;
  if (units.size() == 1) {
    ++out[units[0]];
    return out;
  }
  for (std::size_t i = 0; i + 1 < units.size(); ++i) {
    ++out[units[i] + '\x1f' + units[i + 1]];
  }
  return out;
}

double Dice(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
  int size_a = 0, size_b = 0, shared = 0;
  for (const auto& [g, n] : a) size_a += n;
  for (const auto& [g, n] : b) size_b += n;
  if (size_a + size_b == 0) return 0.0;
  for (const auto& [g, n] : a) {
    if (auto it = b.find(g); it != b.end()) shared += std::min(n, it->second);
  }
  return 2.0 * shared / (size_a + size_b);
}

}  // namespace

std::vector<std::string> MatchUnits(std::string_view text, Language lang) {
  if (!IsCharacterLanguage(lang)) return unicode::WordSegments(unicode::FoldForMatch(text));
  std::vector<std::string> out;
  for (Unit& u : CharacterUnits(text)) out.push_back(std::move(u.text));
  return out;
}

std::vector<std::string> Tokenize(std::string_view question, Language lang) {
  if (!IsCharacterLanguage(lang)) return MatchUnits(question, lang);
  const std::vector<Unit> units = CharacterUnits(question);
  std::vector<std::string> out;
  for (std::size_t begin = 0; begin < units.size();) {
    std::size_t end = begin + 1;
    while (end < units.size() && units[end].run == units[begin].run) ++end;
    for (std::size_t i = begin; i < end; ++i) out.push_back(units[i].text);
    for (std::size_t i = begin; i + 1 < end; ++i) {
      out.push_back(units[i].text + units[i + 1].text);
    }
    begin = end;
  }
  return out;
}

ItemMatch MatchItem(std::string_view display_name,
                    std::span<const std::string> question_units, Language lang) {
  if (display_name.empty()) throw std::invalid_argument("empty schema item name");
  const std::vector<std::string> item = MatchUnits(display_name, lang);
  ItemMatch best;
  if (item.empty() || question_units.empty()) return best;

  const std::size_t m = item.size();
  const bool words = !IsCharacterLanguage(lang);
  const std::u32string item_text = unicode::ToUtf32(Join(item));
  const auto item_grams = Grams(item);
  bool found = false;
  for (std::size_t n = 1; n <= m + 1 && n <= question_units.size(); ++n) {
    for (std::size_t start = 0; start + n <= question_units.size(); ++start) {
      auto span = question_units.subspan(start, n);
      double s;
      if (n == m && std::equal(span.begin(), span.end(), item.begin())) {
        s = 1.0;
      } else if (words) {
        s = EditSimilarity(unicode::ToUtf32(Join(span)), item_text);
      } else {
        s = Dice(Grams(span), item_grams);
      }
      if (!found || s > best.score) {
        best = ItemMatch{s, Join(span)};
        found = true;
      }
    }
  }
  return best;
}

ExampleLinkScore ScoreExample(const Example& example, const DatabaseSchema& schema) {
  ExampleLinkScore out;
  out.example_id = example.example_id;
  sql::SqlTree tree;
  try {
    tree = sql::ParseSql(example.gold_sql, schema);
  } catch (const sql::SqlError&) {
    out.skipped = true;
    return out;
  }
  const sql::ReferencedItems refs = sql::CollectReferences(tree);
  const std::vector<std::string> units = MatchUnits(example.question, example.language);
  auto add = [&](std::string key, const std::string& display) {
    ItemMatch m = MatchItem(display, units, example.language);
    out.items.push_back(ItemScore{std::move(key), display, std::move(m.span), m.score});
  };
  for (int t : refs.tables) {
    const TableDef& table = schema.table(t);
    add(table.original_name, table.display_name);
  }
  for (ColumnRef c : refs.columns) {
    add(schema.table(c.table).original_name + "." + schema.column(c).original_name,
        schema.column(c).display_name);
  }
  double sum = 0.0;
  for (const ItemScore& item : out.items) sum += item.score;
  out.score = out.items.empty() ? 0.0 : sum / static_cast<double>(out.items.size());
  return out;
}

CorpusLinkScore ScoreCorpus(const Dataset& dataset, unsigned jobs) {
  CorpusLinkScore out;
  out.language = dataset.language;
  out.examples.resize(dataset.examples.size());
  ParallelFor(dataset.examples.size(), jobs, [&](std::size_t i) {
    const Example& ex = dataset.examples[i];
    out.examples[i] = ScoreExample(ex, dataset.SchemaFor(ex));
  });
  std::vector<double> scores;
  for (const ExampleLinkScore& e : out.examples) {
    if (e.skipped) {
      out.skipped.push_back(e.example_id);
    } else {
      scores.push_back(e.score);
    }
  }
  // Summing in sorted order makes the mean independent of traversal order.
  std::sort(scores.begin(), scores.end());
  out.scored = static_cast<int>(scores.size());
  if (!scores.empty()) {
    out.mean = std::accumulate(scores.begin(), scores.end(), 0.0) /
               static_cast<double>(scores.size());
  }
  return out;
}

std::string LinkReport::ToJson(bool include_examples) const {
  nlohmann::json langs = nlohmann::json::array();
  for (const CorpusLinkScore& c : corpora) {
    nlohmann::json j = {{"language", LanguageCode(c.language)},
                        {"examples", c.examples.size()},
                        {"scored", c.scored},
                        {"skipped", c.skipped},
                        {"mean", c.mean}};
    if (include_examples) {
      nlohmann::json detail = nlohmann::json::array();
      for (const ExampleLinkScore& e : c.examples) {
        nlohmann::json items = nlohmann::json::array();
        for (const ItemScore& it : e.items) {
          items.push_back({{"item", it.item},
                           {"display_name", it.display_name},
                           {"span", it.span},
                           {"score", it.score}});
        }
        detail.push_back({{"example_id", e.example_id},
                          {"skipped", e.skipped},
                          {"score", e.score},
                          {"items", items}});
      }
      j["detail"] = std::move(detail);
    }
    langs.push_back(std::move(j));
  }
  nlohmann::json root = {{"version", kLinkScoreVersion}, {"languages", langs}};
  return root.dump(2) + "\n";
}

std::string LinkReport::ToText() const {
  std::ostringstream out;
  out << "language  examples  scored  skipped  link score\n";
  out << std::fixed << std::setprecision(4);
  for (const CorpusLinkScore& c : corpora) {
    out << std::left << std::setw(10) << LanguageCode(c.language) << std::right
        << std::setw(8) << c.examples.size() << std::setw(8) << c.scored
        << std::setw(9) << c.skipped.size() << std::setw(12) << c.mean << "\n";
  }
  return out.str();
}

}  // namespace mspider::linker
