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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mspider/backend/cached_backend.h"
#include "mspider/backend/fixture_backend.h"
#include "mspider/backend/http_backend.h"
#include "mspider/dataset_io.h"
#include "mspider/linker/link_score.h"
#include "mspider/qa.h"
#include "mspider/save/augment.h"
#include "mspider/save/synthesize.h"
#include "mspider/sql/canonical.h"
#include "mspider/sql/evaluation.h"
#include "mspider/sql/parser.h"
#include "mspider/stats.h"
#include "mspider/util/digest.h"
#include "mspider/version.h"
#include "mspider/zeroshot/prep.h"

namespace mspider::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Options shared by every subcommand.
struct Global {
  unsigned jobs = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
};

struct Inputs {
  std::vector<std::string> tables;
  std::vector<std::string> examples;
  std::string lang = "en";
  std::string split = "dev";
};

struct BackendFlags {
  std::string fixtures;
  std::string sidecar;
  std::string cache;
  int max_attempts = 5;
};

void AddInputs(CLI::App* cmd, Inputs& in, const char* examples_flag = "--examples",
               const char* tables_flag = "--tables") {
  cmd->add_option(tables_flag, in.tables, "Spider tables file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option(examples_flag, in.examples, "Spider examples file(s), concatenated")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--lang", in.lang, "Language code of the examples")->capture_default_str();
  cmd->add_option("--split", in.split, "train or dev")
      ->check(CLI::IsMember({"train", "dev"}))
      ->capture_default_str();
}

void AddBackend(CLI::App* cmd, BackendFlags& b) {
  auto* fx = cmd->add_option("--fixtures", b.fixtures, "Fixture backend file")
                 ->check(CLI::ExistingFile);
  cmd->add_option("--sidecar", b.sidecar,
                  std::string("Sidecar address host:port (default: $") + backend::kSidecarEnv +
                      ")")
      ->excludes(fx);
  cmd->add_option("--cache", b.cache, "Persistent response cache (JSONL)");
  cmd->add_option("--max-attempts", b.max_attempts, "Sidecar attempts per request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

SchemaCollection LoadAllSchemas(const std::vector<std::string>& paths) {
  SchemaCollection all;
  for (const auto& p : paths) MergeSchemas(all, LoadSchemas(p));
  return all;
}

Split SplitOf(const std::string& name) { return name == "train" ? Split::kTrain : Split::kDev; }

Dataset LoadInputs(const Inputs& in) {
  std::vector<fs::path> files(in.examples.begin(), in.examples.end());
  return LoadExamples(files, LoadAllSchemas(in.tables), SplitOf(in.split),
                      LanguageOrThrow(in.lang));
}

std::map<std::string, std::string> Digests(const std::vector<std::string>& paths) {
  std::map<std::string, std::string> out;
  for (const auto& p : paths) out[fs::path(p).filename().string() + "@" + p] = Sha256File(p);
  return out;
}

std::map<std::string, std::string> Digests(const Inputs& in) {
  auto out = Digests(in.tables);
  out.merge(Digests(in.examples));
  return out;
}

unsigned EffectiveJobs(unsigned jobs) {
  return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

// Owns the backend chain chosen by the flags: fixtures or sidecar,
// optionally behind a persistent cache.
class BackendChain {
 public:
  BackendChain(const BackendFlags& flags, unsigned jobs) {
    std::string address = flags.sidecar;
    if (flags.fixtures.empty() && address.empty()) {
      if (const char* env = std::getenv(backend::kSidecarEnv)) address = env;
    }
    if (!flags.fixtures.empty()) {
      base_ = std::make_unique<backend::FixtureBackend>(
          backend::FixtureBackend::Load(flags.fixtures));
    } else if (!address.empty()) {
      backend::HttpOptions options = backend::HttpOptions::FromAddress(address);
      options.max_attempts = flags.max_attempts;
      options.max_in_flight = static_cast<int>(EffectiveJobs(jobs));
      base_ = std::make_unique<backend::HttpBackend>(options);
    } else {
      throw ConfigError(std::string("no backend: pass --fixtures or --sidecar, or set ") +
                        backend::kSidecarEnv);
    }
    if (!flags.cache.empty()) {
      cached_ = std::make_unique<backend::CachedBackend>(*base_, flags.cache);
    }
  }

  backend::Backend& get() { return cached_ ? *cached_ : *base_; }

  void Flush() {
    if (cached_) cached_->Flush();
  }

 private:
  std::unique_ptr<backend::Backend> base_;
  std::unique_ptr<backend::CachedBackend> cached_;
};

// Writes `files` into `dir` plus a manifest.json recording the command,
// its resolved configuration and the digests of inputs and outputs.
void WriteRunManifest(const fs::path& dir, const std::string& command, const json& config,
                      const std::map<std::string, std::string>& inputs,
                      const std::vector<std::pair<std::string, std::string>>& files,
                      const std::vector<std::string>& args) {
  fs::create_directories(dir);
  json outputs = json::object();
  for (const auto& [name, data] : files) {
    WriteFileAtomic(dir / name, data);
    outputs[name] = Sha256Hex(data);
  }
  const json manifest = {{"tool", "mspider"},
                         {"tool_version", Version()},
                         {"command", command},
                         {"argv", std::vector<std::string>(args.begin() + 1, args.end())},
                         {"config", config},
                         {"inputs", inputs},
                         {"outputs", outputs}};
  WriteFileAtomic(dir / "manifest.json", manifest.dump(1) + "\n");
}

std::vector<Language> ParseLanguages(const std::vector<std::string>& codes) {
  std::vector<Language> out;
  for (const auto& c : codes) out.push_back(LanguageOrThrow(c));
  return out;
}

std::vector<std::string> Codes(const std::vector<Language>& langs) {
  std::vector<std::string> out;
  for (Language l : langs) out.emplace_back(LanguageCode(l));
  return out;
}

int RunStats(const Global& g, const std::vector<std::string>& tables,
             const std::vector<std::string>& train, const std::vector<std::string>& dev,
             const std::string& lang, const std::string& out_dir,
             const std::vector<std::string>& args, std::ostream& out) {
  if (train.empty() && dev.empty()) throw ConfigError("stats needs --train and/or --dev");
  const SchemaCollection schemas = LoadAllSchemas(tables);
  const Language l = LanguageOrThrow(lang);
  std::vector<Dataset> sets;
  if (!train.empty()) {
    sets.push_back(LoadExamples(std::vector<fs::path>(train.begin(), train.end()), schemas,
                                Split::kTrain, l));
  }
  if (!dev.empty()) {
    sets.push_back(LoadExamples(std::vector<fs::path>(dev.begin(), dev.end()), schemas,
                                Split::kDev, l));
  }
  std::vector<const Dataset*> ptrs;
  for (const auto& d : sets) ptrs.push_back(&d);
  const DatasetStats stats = ComputeStats(ptrs);
  out << (g.format == "json" ? stats.ToJson() : stats.ToText());
  if (!out_dir.empty()) {
    auto inputs = Digests(tables);
    inputs.merge(Digests(train));
    inputs.merge(Digests(dev));
    WriteRunManifest(out_dir, "stats", {{"lang", lang}}, inputs,
                     {{"stats.json", stats.ToJson()}}, args);
  }
  return kExitOk;
}

int RunValidate(const Global& g, const Inputs& in, const std::vector<std::string>& align,
                const std::string& align_lang, std::ostream& out) {
  const Dataset d = LoadInputs(in);
  std::vector<QaFinding> findings = ValidateDataset(d);
  std::vector<std::string> mismatched;
  if (!align.empty()) {
    const Dataset other =
        LoadExamples(std::vector<fs::path>(align.begin(), align.end()),
                     LoadAllSchemas(in.tables), SplitOf(in.split), LanguageOrThrow(align_lang));
    mismatched = AlignmentMismatches(d, other);
  }
  int errors = 0, warnings = 0;
  for (const auto& f : findings) {
    (f.severity == QaFinding::Severity::kError ? errors : warnings)++;
  }
  errors += static_cast<int>(mismatched.size());
  if (g.format == "json") {
    json list = json::array();
    for (const auto& f : findings) {
      list.push_back({{"example_id", f.example_id},
                      {"severity", SeverityName(f.severity)},
                      {"code", FindingCodeName(f.code)},
                      {"message", f.message}});
    }
    out << json{{"examples", d.examples.size()},
                {"errors", errors},
                {"warnings", warnings},
                {"findings", list},
                {"misaligned", mismatched}}
               .dump(1)
        << "\n";
  } else {
    for (const auto& f : findings) {
      out << f.example_id << "\t" << SeverityName(f.severity) << "\t"
          << FindingCodeName(f.code) << "\t" << f.message << "\n";
    }
    for (const auto& id : mismatched) out << id << "\terror\tmisaligned\t\n";
    out << d.examples.size() << " examples, " << errors << " errors, " << warnings
        << " warnings\n";
  }
  return errors ? kExitData : kExitOk;
}

int RunEvaluate(const Global& g, const Inputs& in, const std::string& pred, bool keep_values,
                bool detail, const std::string& out_dir, const std::vector<std::string>& args,
                std::ostream& out) {
  const Dataset gold = LoadInputs(in);
  sql::EvaluationOptions options;
  options.abstract_values = !keep_values;
  options.jobs = g.jobs;
  const sql::EvaluationReport report =
      sql::EvaluateCorpus(sql::ReadPredictions(pred), gold, options);
  out << (g.format == "json" ? report.ToJson(detail) : report.ToText());
  if (!out_dir.empty()) {
    auto inputs = Digests(in);
    inputs.merge(Digests(std::vector<std::string>{pred}));
    WriteRunManifest(out_dir, "evaluate", {{"keep_values", keep_values}, {"lang", in.lang}},
                     inputs, {{"report.json", report.ToJson(true)}}, args);
  }
  return kExitOk;
}

int RunHardness(const Global& g, const Inputs& in, std::ostream& out) {
  const Dataset gold = LoadInputs(in);
  std::array<int, sql::kHardnessCount> counts{};
  int unparsable = 0;
  json rows = json::array();
  for (const Example& e : gold.examples) {
    std::string label = "unparsable";
    if (e.gold_parsable) {
      const sql::SqlTree tree = sql::ParseSql(e.gold_sql, gold.SchemaFor(e));
      const sql::Hardness h = sql::ClassifyHardness(sql::CountComponents(tree));
      ++counts[static_cast<int>(h)];
      label = std::string(sql::HardnessName(h));
    } else {
      ++unparsable;
    }
    if (g.format == "json") {
      rows.push_back({{"example_id", e.example_id}, {"hardness", label}});
    } else {
      out << e.example_id << "\t" << label << "\n";
    }
  }
  json totals = json::object();
  for (int h = 0; h < sql::kHardnessCount; ++h) {
    totals[std::string(sql::HardnessName(static_cast<sql::Hardness>(h)))] = counts[h];
  }
  totals["unparsable"] = unparsable;
  if (g.format == "json") {
    out << json{{"examples", rows}, {"totals", totals}}.dump(1) << "\n";
  } else {
    out << "totals";
    for (const auto& [k, v] : totals.items()) out << " " << k << "=" << v.get<int>();
    out << "\n";
  }
  return kExitOk;
}

int RunLinkScore(const Global& g, const std::string& root, std::vector<std::string> langs,
                 const std::string& tables_name, const std::string& examples_name,
                 bool detail, const std::string& out_dir, const std::vector<std::string>& args,
                 std::ostream& out) {
  if (langs.empty()) {
    for (Language l : kDatasetLanguages) {
      if (fs::exists(fs::path(root) / LanguageCode(l) / examples_name)) {
        langs.emplace_back(LanguageCode(l));
      }
    }
  }
  if (langs.empty()) throw ConfigError("no language directories under " + root);
  linker::LinkReport report;
  std::map<std::string, std::string> inputs;
  for (const auto& code : langs) {
    const Language l = LanguageOrThrow(code);
    const fs::path dir = fs::path(root) / LanguageCode(l);
    for (const fs::path& p : {dir / tables_name, dir / examples_name}) {
      if (!fs::exists(p)) throw ConfigError("missing input file " + p.string());
      inputs[std::string(LanguageCode(l)) + "/" + p.filename().string()] = Sha256File(p);
    }
    const Dataset d =
        LoadExamples(dir / examples_name, LoadSchemas(dir / tables_name), Split::kDev, l);
    report.corpora.push_back(linker::ScoreCorpus(d, g.jobs));
  }
  out << (g.format == "json" ? report.ToJson(detail) : report.ToText());
  if (!out_dir.empty()) {
    WriteRunManifest(out_dir, "link-score",
                     {{"languages", langs},
                      {"tables_name", tables_name},
                      {"examples_name", examples_name},
                      {"score_version", linker::kLinkScoreVersion}},
                     inputs, {{"link_scores.json", report.ToJson(true)}}, args);
  }
  return kExitOk;
}

struct AugmentFlags {
  std::vector<std::string> pivots;
  int rounds = save::kDefaultRounds;
  double threshold = save::kDefaultThreshold;
  std::map<std::string, double> lang_thresholds;
  std::string out_dir;
};

save::AugmentConfig MakeAugmentConfig(const AugmentFlags& f, unsigned jobs) {
  save::AugmentConfig c;
  if (!f.pivots.empty()) c.pivots = ParseLanguages(f.pivots);
  c.rounds = f.rounds;
  c.thresholds.fallback = f.threshold;
  for (const auto& [code, v] : f.lang_thresholds) {
    c.thresholds.per_language[LanguageOrThrow(code)] = v;
  }
  c.jobs = jobs;
  c.Validate();
  return c;
}

int RunAugment(const Global& g, const Inputs& in, const BackendFlags& bf, const AugmentFlags& af,
               const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Dataset d = LoadInputs(in);
  const save::AugmentConfig config = MakeAugmentConfig(af, g.jobs);
  BackendChain chain(bf, g.jobs);
  const save::AugmentResult r = save::BuildAugmentedSet(d, config, chain.get());
  chain.Flush();

  json thresholds = json::object();
  for (const auto& [l, v] : config.thresholds.per_language) {
    thresholds[std::string(LanguageCode(l))] = v;
  }
  WriteRunManifest(af.out_dir, "augment",
                   {{"lang", in.lang},
                    {"split", in.split},
                    {"backend", r.set.backend},
                    {"pivots", Codes(config.pivots)},
                    {"rounds", config.rounds},
                    {"threshold", config.thresholds.fallback},
                    {"lang_thresholds", thresholds},
                    {"seed", g.seed}},
                   Digests(in),
                   {{"augmented.json", r.set.ToJson()}, {"report.json", r.report.ToJson()}},
                   args);
  const save::PipelineReport& rep = r.report;
  if (g.format == "json") {
    out << rep.ToJson();
  } else {
    out << "items " << rep.items << ", candidates " << rep.unique_candidates << ", accepted "
        << rep.accepted << " (" << rep.acceptance_rate() << ")\n";
  }
  if (rep.backend_failures || rep.rejected_backend_error) {
    err << "mspider: " << rep.backend_failures << " translation and " << rep.rejected_backend_error
        << " verification requests failed; outputs are partial\n";
    return kExitBackend;
  }
  return kExitOk;
}

int RunSynthesize(const Global& g, const Inputs& in, const std::string& augmented,
                  int variants, double p, const std::string& out_dir, std::ostream& out) {
  const Dataset d = LoadInputs(in);
  const save::AugmentedSchemaSet set = save::AugmentedSchemaSet::Load(augmented);
  const save::SynthesisPolicy policy{variants, p, g.seed};
  policy.Validate();
  const save::SynthesisResult r = save::SynthesizeExamples(d, set, policy);
  auto inputs = Digests(in);
  inputs.merge(Digests(std::vector<std::string>{augmented}));
  fs::create_directories(out_dir);
  save::EmitTrainingFiles(d, r, set, policy, out_dir, inputs);
  out << "originals " << r.originals << ", variants " << r.variants << ", expansion "
      << r.expansion() << "\n";
  return kExitOk;
}

int RunPrep(const Global& g, const Inputs& in, const BackendFlags& bf, const std::string& mode,
            const std::string& target, const std::string& out_dir, std::string stem,
            std::ostream& out, std::ostream& err) {
  zeroshot::ZeroShotJob job;
  job.mode = *zeroshot::ParseMode(mode);
  job.source = LanguageOrThrow(in.lang);
  job.target = target.empty() ? job.source : LanguageOrThrow(target);
  if (job.mode == zeroshot::Mode::kTranslateThenPredict && target.empty()) {
    job.target = Language::kEn;
  }
  job.out_dir = out_dir;
  job.Validate();
  if (stem.empty()) stem = in.split;

  const Dataset d = LoadInputs(in);
  zeroshot::JobManifest m;
  if (job.mode == zeroshot::Mode::kDirectlyPredict) {
    m = zeroshot::EmitJob(job, d, nullptr, "", stem, Digests(in));
  } else {
    BackendChain chain(bf, g.jobs);
    const zeroshot::PrepResult r =
        zeroshot::TranslateDataset(d, job.target, chain.get(), g.jobs);
    chain.Flush();
    m = zeroshot::EmitJob(job, d, &r, chain.get().Identity(), stem, Digests(in));
    if (!r.complete()) {
      err << "mspider: " << r.flagged_examples.size() << " questions and "
          << r.flagged_names.size() << " schema names kept untranslated\n";
      out << "examples " << m.examples << "\n";
      return kExitBackend;
    }
  }
  out << "examples " << m.examples << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> args =
      argv.empty() ? std::vector<std::string>{"mspider"} : argv;
  CLI::App app{"Multilingual text-to-SQL dataset toolkit", "mspider"};
  app.set_version_flag("--version", std::string(Version()));
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--jobs,-j", g.jobs, "Worker threads and in-flight requests (0 = all cores)")
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled decisions")->capture_default_str();

  // stats
  std::vector<std::string> st_tables, st_train, st_dev;
  std::string st_lang = "en", st_out;
  auto* stats = app.add_subcommand("stats", "Question, database and schema counts");
  stats->add_option("--tables", st_tables, "Spider tables file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--train", st_train, "Training example file(s)")->check(CLI::ExistingFile);
  stats->add_option("--dev", st_dev, "Development example file(s)")->check(CLI::ExistingFile);
  stats->add_option("--lang", st_lang, "Language code")->capture_default_str();
  stats->add_option("--out-dir", st_out, "Write stats.json and a manifest here");

  // validate
  Inputs va;
  std::vector<std::string> va_align;
  std::string va_align_lang = "en";
  auto* validate = app.add_subcommand("validate", "QA checks; exit 2 on error findings");
  AddInputs(validate, va);
  validate->add_option("--align", va_align, "Examples of another language to align with")
      ->check(CLI::ExistingFile);
  validate->add_option("--align-lang", va_align_lang, "Language of --align")
      ->capture_default_str();

  // evaluate
  Inputs ev;
  std::string ev_pred, ev_out;
  bool ev_values = false, ev_detail = false;
  auto* evaluate = app.add_subcommand("evaluate", "Exact-match accuracy by hardness");
  // --db is the customary name of the tables flag for evaluation.
  AddInputs(evaluate, ev, "--gold", "--tables,--db");
  evaluate->alias("eval");
  evaluate->add_option("--pred", ev_pred, "Predictions, one query per line")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_flag("--keep-values", ev_values, "Compare literal values too");
  evaluate->add_flag("--detail", ev_detail, "Per-example outcomes in JSON output");
  evaluate->add_option("--out-dir", ev_out, "Write report.json and a manifest here");

  // hardness
  Inputs hd;
  auto* hardness = app.add_subcommand("hardness", "Hardness level of every gold query");
  AddInputs(hardness, hd, "--gold", "--tables,--db");

  // link-score
  std::string ls_root, ls_tables = "tables.json", ls_examples = "dev.json", ls_out;
  std::vector<std::string> ls_langs;
  bool ls_detail = false;
  auto* link = app.add_subcommand("link-score", "Fuzzy schema-linking score per language");
  link->add_option("--root", ls_root, "Directory with one <lang>/ subdirectory per language")
      ->required()
      ->check(CLI::ExistingDirectory);
  link->add_option("--langs", ls_langs, "Languages to score (default: all present)")
      ->delimiter(',');
  link->add_option("--tables-name", ls_tables, "Tables file name")->capture_default_str();
  link->add_option("--examples-name", ls_examples, "Examples file name")->capture_default_str();
  link->add_flag("--detail", ls_detail, "Per-example scores in JSON output");
  link->add_option("--out-dir", ls_out, "Write link_scores.json and a manifest here");

  // augment
  Inputs au;
  BackendFlags au_b;
  AugmentFlags au_f;
  auto* augment = app.add_subcommand("augment", "Build the verified synonym set");
  AddInputs(augment, au);
  AddBackend(augment, au_b);
  augment->add_option("--pivots", au_f.pivots, "Pivot languages (default: all eleven)")
      ->delimiter(',');
  augment->add_option("--rounds", au_f.rounds, "Back-translation rounds per pivot")
      ->capture_default_str();
  augment->add_option("--threshold", au_f.threshold, "Acceptance threshold")
      ->capture_default_str();
  augment->add_option("--lang-threshold", au_f.lang_thresholds,
                      "Per-language threshold, e.g. zh=0.68 (replaces the defaults)");
  augment->add_option("--out-dir", au_f.out_dir, "Output directory")->required();

  // synthesize
  Inputs sy;
  std::string sy_aug, sy_out;
  int sy_variants = save::SynthesisPolicy{}.variants_per_example;
  double sy_p = save::SynthesisPolicy{}.replace_probability;
  auto* synthesize = app.add_subcommand("synthesize", "Write warm-up and fine-tune sets");
  AddInputs(synthesize, sy);
  synthesize->add_option("--augmented", sy_aug, "Augmented schema set from `augment`")
      ->required()
      ->check(CLI::ExistingFile);
  synthesize->add_option("--variants", sy_variants, "Variants per example")
      ->capture_default_str();
  synthesize->add_option("--p", sy_p, "Per-item replacement probability")
      ->capture_default_str();
  synthesize->add_option("--out-dir", sy_out, "Output directory")->required();

  // prep-zeroshot
  Inputs zs;
  BackendFlags zs_b;
  std::string zs_mode, zs_target, zs_out, zs_stem;
  auto* prep = app.add_subcommand("prep-zeroshot", "Prepare data for a zero-shot setting");
  AddInputs(prep, zs);
  AddBackend(prep, zs_b);
  prep->add_option("--mode", zs_mode, "Zero-shot setting")
      ->required()
      ->check(CLI::IsMember({"directly_predict", "translate_then_predict", "translate_then_train"}));
  prep->add_option("--target", zs_target, "Target language (default: en for translate_then_predict)");
  prep->add_option("--out-dir", zs_out, "Output directory")->required();
  prep->add_option("--stem", zs_stem, "Output file stem (default: the split name)");

  std::vector<std::string> argv_tail(args.begin() + 1, args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());  // CLI11 expects reversed order
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats) return RunStats(g, st_tables, st_train, st_dev, st_lang, st_out, args, out);
    if (*validate) return RunValidate(g, va, va_align, va_align_lang, out);
    if (*evaluate) return RunEvaluate(g, ev, ev_pred, ev_values, ev_detail, ev_out, args, out);
    if (*hardness) return RunHardness(g, hd, out);
    if (*link) {
      return RunLinkScore(g, ls_root, ls_langs, ls_tables, ls_examples, ls_detail, ls_out, args,
                          out);
    }
    if (*augment) return RunAugment(g, au, au_b, au_f, args, out, err);
    if (*synthesize) return RunSynthesize(g, sy, sy_aug, sy_variants, sy_p, sy_out, out);
    if (*prep) return RunPrep(g, zs, zs_b, zs_mode, zs_target, zs_out, zs_stem, out, err);
  } catch (const ConfigError& e) {
    err << "mspider: " << e.what() << "\n";
    return kExitUsage;
  } catch (const backend::BackendError& e) {
    err << "mspider: backend " << backend::BackendErrorKindName(e.kind()) << ": " << e.what()
        << "\n";
    return kExitBackend;
  } catch (const DataError& e) {
    err << "mspider: " << e.what() << "\n";
    for (const auto& id : e.offending()) err << "  " << id << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "mspider: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "mspider: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace mspider::cli
