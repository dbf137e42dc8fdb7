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

#include "mspider/save/synthesize.h"

#include <cctype>
#include <random>

#include <nlohmann/json.hpp>

#include "mspider/dataset_io.h"
#include "mspider/error.h"
#include "mspider/sql/canonical.h"
#include "mspider/sql/parser.h"
#include "mspider/unicode.h"
#include "mspider/util/digest.h"
#include "mspider/version.h"

namespace mspider::save {
namespace {

using json = nlohmann::json;

std::uint64_t StreamSeed(std::uint64_t seed, const std::string& example_id, int variant) {
  const std::string hex = Sha256Hex(std::to_string(seed) + '\x1f' + example_id + '\x1f' +
                                    std::to_string(variant));
  return std::stoull(hex.substr(0, 16), nullptr, 16);
}

// Uniform in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::optional<std::string> IdentifierFor(const std::string& synonym) {
  const std::u32string folded = unicode::ToUtf32(unicode::FoldForMatch(NormalizeCandidate(synonym)));
  std::string out;
  bool gap = false;
  for (char32_t c : folded) {
    if (unicode::IsWhiteSpace(c) || c == U'-' || c == U'_') {
      gap = !out.empty();
      continue;
    }
    if (c >= 0x80 || !(std::isalnum(static_cast<int>(c)))) return std::nullopt;
    if (gap) out += '_';
    gap = false;
    out += static_cast<char>(c);
  }
  if (!IsIdentifier(out) || std::isdigit(static_cast<unsigned char>(out[0])) ||
      sql::IsReservedWord(out)) {
    return std::nullopt;
  }
  return out;
}

struct Rename {
  SchemaItemRef item;
  std::string original;
  std::string display;
};

// Folded display names of the item's siblings.
bool DisplayCollides(const DatabaseSchema& schema, const SchemaItemRef& item,
                     const std::string& display) {
  const std::string key = unicode::FoldForMatch(display);
  if (item.is_table()) {
    for (int t = 0; t < static_cast<int>(schema.tables().size()); ++t) {
      if (t != item.ref.table && unicode::FoldForMatch(schema.table(t).display_name) == key) {
        return true;
      }
    }
    return false;
  }
  const auto& columns = schema.table(item.ref.table).columns;
  for (int c = 0; c < static_cast<int>(columns.size()); ++c) {
    if (c != item.ref.column && unicode::FoldForMatch(columns[c].display_name) == key) return true;
  }
  return false;
}

json LanguagesJson(const std::vector<Language>& langs) {
  json out = json::array();
  for (Language l : langs) out.push_back(LanguageCode(l));
  return out;
}

}  // namespace

void SynthesisPolicy::Validate() const {
  if (variants_per_example < 0) throw ConfigError("variants_per_example must be >= 0");
  if (!(replace_probability >= 0.0 && replace_probability <= 1.0)) {
    throw ConfigError("replace_probability must be in [0, 1]");
  }
}

std::string SpelledOut(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (c == '_' || c == ' ') {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (std::isupper(c) && i > 0) {
      const unsigned char prev = static_cast<unsigned char>(name[i - 1]);
      const bool next_lower =
          i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
      if (std::islower(prev) || std::isdigit(prev) || (std::isupper(prev) && next_lower)) {
        if (!out.empty() && out.back() != ' ') out += ' ';
      }
    }
    out += static_cast<char>(std::tolower(c));
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

SynthesisResult SynthesizeExamples(const Dataset& dataset, const AugmentedSchemaSet& augmented,
                                   const SynthesisPolicy& policy) {
  policy.Validate();
  SynthesisResult out;
  out.dataset.split = dataset.split;
  out.dataset.language = dataset.language;
  out.dataset.schemas = dataset.schemas;
  out.originals = static_cast<int>(dataset.examples.size());

  for (const Example& ex : dataset.examples) {
    out.dataset.examples.push_back(ex);
    const DatabaseSchema& schema = dataset.SchemaFor(ex);
    sql::SqlTree tree;
    try {
      tree = sql::ParseSql(ex.gold_sql, schema);
    } catch (const sql::SqlError& e) {
      ++out.ineligible;
      out.log.push_back({ex.example_id, -1, std::string("gold SQL unparsable: ") + e.what()});
      continue;
    }
    const sql::CanonicalSql source = sql::Canonicalize(tree, schema, false);

    std::vector<std::pair<SchemaItemRef, const std::vector<SynonymEntry>*>> eligible;
    for (SchemaItemRef& item : SchemaItems(schema)) {
      if (const auto* syn = augmented.Find(schema.db_id(), item.Key())) {
        eligible.emplace_back(std::move(item), syn);
      }
    }
    if (eligible.empty()) continue;

    for (int v = 0; v < policy.variants_per_example; ++v) {
      std::mt19937_64 rng(StreamSeed(policy.seed, ex.example_id, v));
      std::vector<Rename> renames;
      for (const auto& [item, synonyms] : eligible) {
        if (Uniform(rng) >= policy.replace_probability) continue;
        const SynonymEntry& pick = (*synonyms)[rng() % synonyms->size()];
        Rename r{item, item.is_table() ? item.table_original : item.column_original,
                 pick.synonym};
        if (SpelledOut(r.original) == unicode::FoldForMatch(item.display_name)) {
          if (auto id = IdentifierFor(pick.synonym)) r.original = *id;
        }
        renames.push_back(std::move(r));
      }
      if (renames.empty()) {
        ++out.skipped_unchanged;
        out.log.push_back({ex.example_id, v, "no item drew a replacement"});
        continue;
      }

      DatabaseSchema renamed = schema;
      std::string signature = schema.db_id();
      for (const Rename& r : renames) {
        if (r.item.is_table()) {
          renamed.RenameTable(r.item.ref.table, r.original, r.display);
        } else {
          renamed.RenameColumn(r.item.ref, r.original, r.display);
        }
        signature += '\n' + r.item.Key() + '\x1f' + r.original + '\x1f' + r.display;
      }
      std::string collision;
      for (const Rename& r : renames) {
        if (DisplayCollides(renamed, r.item, r.display)) {
          collision = "'" + r.display + "' duplicates a sibling of " + r.item.Key();
        }
      }
      if (collision.empty()) {
        try {
          renamed.Validate();
        } catch (const DataError& e) {
          collision = e.what();
        }
      }
      if (!collision.empty()) {
        ++out.skipped_collision;
        out.log.push_back({ex.example_id, v, "renaming collision: " + collision});
        continue;
      }
      renamed.set_db_id(schema.db_id() + "__aug_" + Sha256Hex(signature).substr(0, 8));

      const std::string synthesized = sql::PrintSql(tree, renamed);
      try {
        const sql::SqlTree again = sql::ParseSql(synthesized, renamed);
        if (!(sql::Canonicalize(again, schema, false) == source)) {
          ++out.skipped_inverse;
          out.log.push_back({ex.example_id, v, "inverse renaming does not match: " + synthesized});
          continue;
        }
      } catch (const sql::SqlError& e) {
        ++out.skipped_inverse;
        out.log.push_back({ex.example_id, v, std::string("synthesized SQL unparsable: ") + e.what()});
        continue;
      }

      Example variant = ex;
      variant.db_id = renamed.db_id();
      variant.gold_sql = synthesized;
      variant.example_id = ex.example_id + "__aug" + std::to_string(v);
      variant.gold_parsable = true;
      auto [it, inserted] = out.dataset.schemas.emplace(renamed.db_id(), renamed);
      if (!inserted && !(it->second == renamed)) {
        throw Error("augmented database id clash: " + renamed.db_id());
      }
      out.dataset.examples.push_back(std::move(variant));
      ++out.variants;
    }
  }
  return out;
}

std::string TrainingManifest::ToJson() const {
  json per = json::object();
  for (const auto& [lang, v] : thresholds.per_language) per[std::string(LanguageCode(lang))] = v;
  json root = {
      {"tool", "mspider"},
      {"tool_version", tool_version},
      {"policy",
       {{"variants_per_example", policy.variants_per_example},
        {"replace_probability", policy.replace_probability},
        {"seed", policy.seed}}},
      {"language", LanguageCode(language)},
      {"backend", backend},
      {"thresholds", {{"default", thresholds.fallback}, {"per_language", per}}},
      {"rounds", rounds},
      {"pivots", LanguagesJson(pivots)},
      {"originals", originals},
      {"variants", variants},
      {"inputs", inputs},
      {"files", files}};
  return root.dump(1) + "\n";
}

TrainingManifest TrainingManifest::Parse(std::string_view json_text, const std::string& source) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.byte, e.what());
  }
  TrainingManifest m;
  try {
    m.tool_version = root.at("tool_version").get<std::string>();
    const json& p = root.at("policy");
    m.policy.variants_per_example = p.at("variants_per_example").get<int>();
    m.policy.replace_probability = p.at("replace_probability").get<double>();
    m.policy.seed = p.at("seed").get<std::uint64_t>();
    m.language = LanguageOrThrow(root.at("language").get<std::string>());
    m.backend = root.at("backend").get<std::string>();
    m.thresholds.fallback = root.at("thresholds").at("default").get<double>();
    m.thresholds.per_language.clear();
    for (const auto& [code, v] : root.at("thresholds").at("per_language").items()) {
      m.thresholds.per_language[LanguageOrThrow(code)] = v.get<double>();
    }
    m.rounds = root.at("rounds").get<int>();
    for (const json& l : root.at("pivots")) m.pivots.push_back(LanguageOrThrow(l.get<std::string>()));
    m.originals = root.at("originals").get<int>();
    m.variants = root.at("variants").get<int>();
    m.inputs = root.at("inputs").get<std::map<std::string, std::string>>();
    m.files = root.at("files").get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw DataError(source + ": malformed manifest: " + e.what());
  }
  return m;
}

TrainingManifest EmitTrainingFiles(const Dataset& original, const SynthesisResult& synthesized,
                                   const AugmentedSchemaSet& augmented,
                                   const SynthesisPolicy& policy,
                                   const std::filesystem::path& out_dir,
                                   std::map<std::string, std::string> input_digests) {
  TrainingManifest m;
  m.tool_version = std::string(Version());
  m.policy = policy;
  m.language = augmented.language;
  m.backend = augmented.backend;
  m.thresholds = augmented.thresholds;
  m.rounds = augmented.rounds;
  m.pivots = augmented.pivots;
  m.originals = synthesized.originals;
  m.variants = synthesized.variants;
  m.inputs = std::move(input_digests);

  const std::pair<const char*, std::string> files[] = {
      {"warmup.json", EmitExamples(synthesized.dataset)},
      {"warmup_tables.json", EmitSchemas(synthesized.dataset.schemas)},
      {"finetune.json", EmitExamples(original)},
      {"finetune_tables.json", EmitSchemas(original.schemas)},
  };
  for (const auto& [name, data] : files) {
    WriteFileAtomic(out_dir / name, data);
    m.files[name] = Sha256Hex(data);
  }
  WriteFileAtomic(out_dir / "manifest.json", m.ToJson());
  return m;
}

}  // namespace mspider::save
