// Copyright 2026 The WikiTransfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wikitransfer/augment.h"
#include "wikitransfer/backends.h"
#include "wikitransfer/builder.h"
#include "wikitransfer/corpus.h"
#include "wikitransfer/hashing.h"
#include "wikitransfer/losses.h"
#include "wikitransfer/manifest.h"
#include "wikitransfer/oracle.h"
#include "wikitransfer/profiler.h"
#include "wikitransfer/rouge.h"

namespace wikitransfer::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Bad flag values and inconsistent configurations. Exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable or malformed inputs. Exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string JoinArgs(std::span<const std::string> args) {
  std::string joined = "wikitransfer";
  for (const std::string& a : args) {
    joined.push_back(' ');
    joined.append(a);
  }
  return joined;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

MetricConfig ParseMetric(const std::string& kind, const std::string& field) {
  MetricConfig metric;
  const auto k = ParseMetricKind(kind);
  if (!k) throw UsageError("unknown metric '" + kind + "'");
  const auto f = ParseScoreField(field);
  if (!f) throw UsageError("unknown metric field '" + field + "'");
  metric.kind = *k;
  metric.field = *f;
  return metric;
}

json ScoresJson(const RougeScores& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

// Counts warnings and echoes the first few.
struct WarningCounter {
  std::ostream* err;
  std::int64_t count = 0;

  void operator()(const std::string& message) {
    if (++count <= 20) *err << "warning: " << message << "\n";
  }
};

// ---------------------------------------------------------------------------
// Subcommand state. Filled by CLI11, consumed after parsing.

struct ProfileArgs {
  std::string input;
  std::string output;
  std::string metric = "rouge1";
  std::string metric_field = "f1";
  bool json_stdout = false;
  std::optional<int> workers;
};

struct BuildArgs {
  std::string corpus;
  std::string preset;
  std::string config_file;
  std::string output;
  std::string format;
  std::optional<int> workers;
  // (config key, value) in command-line order.
  std::vector<std::pair<std::string, std::string>> overrides;
};

struct AugmentArgs {
  std::string input;
  std::string backend;
  std::string record_dir;
  std::string output;
  int k = 10;
  int beam = 10;
  std::vector<std::string> languages = {"de", "ru"};
  int retries = 2;
  std::optional<int> workers;
};

struct RougeArgs {
  std::string candidate;
  std::string reference;
  std::string manifest;
};

struct OracleArgs {
  std::string document;
  std::string summary;
  std::optional<int> m;
  std::string metric = "rouge1";
  std::string metric_field = "f1";
  std::string manifest;
};

struct LossArgs {
  std::string fixtures;
  std::string manifest;
};

void WriteSideManifest(RunManifest& manifest, const std::string& path,
                       std::chrono::steady_clock::time_point start) {
  if (path.empty()) return;
  manifest.wall_time_s = Seconds(start);
  manifest.Write(path);
}

// ---------------------------------------------------------------------------

int RunProfile(const ProfileArgs& a, const std::string& command,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  ProfileOptions options;
  options.metric = ParseMetric(a.metric, a.metric_field);
  options.workers = ResolveWorkers(a.workers);

  DatasetProfile profile;
  try {
    profile = ProfileJsonl(a.input, options);
  } catch (const ProfileError& e) {
    throw InputError(e.what());
  }
  if (profile.bin_clamped) {
    err << "warning: oracle mean " << profile.oracle_mean
        << " is outside every named bin; clamped to "
        << BinNameString(profile.suggested_bin.name) << "\n";
  }
  if (profile.skipped > 0) {
    err << "warning: skipped " << profile.skipped
        << " malformed or degenerate pairs\n";
  }
  const std::string profile_json = ProfileToJson(profile);
  if (a.json_stdout) {
    out << profile_json << "\n";
  } else {
    out << ProfileToTable(profile);
  }
  if (a.output.empty()) return kExitOk;

  WriteFile(a.output, profile_json + "\n");
  RunManifest manifest;
  manifest.command = command;
  manifest.config_snapshot = {
      {"metric", std::string(MetricKindName(options.metric.kind))},
      {"metric_field", std::string(ScoreFieldName(options.metric.field))},
      {"workers", std::to_string(options.workers)},
  };
  const fs::path input(a.input);
  manifest.input_digest = DigestPaths(std::span(&input, 1));
  manifest.counters = {{"sample_size", profile.sample_size},
                       {"skipped", profile.skipped}};
  manifest.statistics = {{"oracle_mean", profile.oracle_mean},
                         {"mean_compression", profile.mean_compression}};
  manifest.wall_time_s = Seconds(start);
  manifest.Write(a.output + ".manifest.json");
  return kExitOk;
}

int RunBuild(const BuildArgs& a, const std::string& command,
             std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  BuildConfig config;
  CorpusFormat format;
  int workers;
  try {
    config = PresetConfig(a.preset);
    if (!a.config_file.empty()) ApplyConfigFile(config, a.config_file);
    for (const auto& [key, value] : a.overrides) {
      ApplyConfigValue(config, key, value);
    }
    config.Validate();
    workers = ResolveWorkers(a.workers);
    if (a.format.empty()) {
      format = DetectCorpusFormat(a.corpus);
    } else {
      const auto parsed = ParseCorpusFormat(a.format);
      if (!parsed) throw UsageError("unknown corpus format '" + a.format + "'");
      format = *parsed;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  WarningCounter warnings{&err};
  std::unique_ptr<CorpusReader> reader;
  try {
    reader = std::make_unique<CorpusReader>(
        a.corpus, format, [&warnings](const std::string& m) { warnings(m); });
  } catch (const CorpusError& e) {
    throw InputError(e.what());
  }
  BuildOptions options;
  options.workers = workers;
  const BuildReport report = BuildDataset(*reader, config, a.output, options);
  if (warnings.count > 20) {
    err << "warning: " << warnings.count - 20 << " more malformed records\n";
  }

  RunManifest manifest;
  manifest.command = command;
  manifest.config_snapshot = {{"preset", a.preset}};
  for (auto& kv : ConfigSnapshot(config)) {
    manifest.config_snapshot.push_back(std::move(kv));
  }
  manifest.config_snapshot.emplace_back("format",
                                        std::string(CorpusFormatName(format)));
  manifest.config_snapshot.emplace_back("workers", std::to_string(workers));
  const fs::path corpus(a.corpus);
  manifest.input_digest = DigestPaths(std::span(&corpus, 1));
  manifest.counters = {
      {"records_read", report.records_read},
      {"malformed_records", report.malformed_records},
      {"accepted", report.accepted},
      {"train", report.train_count},
      {"valid", report.valid_count},
      {"removed_sentences", report.removed_sentences},
      {"reached_cap", report.reached_cap ? 1 : 0},
  };
  for (std::size_t r = 0; r < kSkipReasonCount; ++r) {
    manifest.counters.emplace_back(
        "skipped_" + std::string(SkipReasonName(static_cast<SkipReason>(r))),
        report.skipped[r]);
  }
  for (std::size_t b = 0; b < kScoreHistogramBuckets; ++b) {
    char name[32];
    std::snprintf(name, sizeof(name), "oracle_bucket_%02zu", b);
    manifest.counters.emplace_back(name, report.score_histogram[b]);
  }
  manifest.statistics = {
      {"mean_compression_ratio", report.mean_compression_ratio}};
  manifest.wall_time_s = Seconds(start);
  manifest.Write(fs::path(a.output) / kManifestFile);

  out << "accepted " << report.accepted << " of " << report.records_read
      << " articles (train " << report.train_count << ", valid "
      << report.valid_count << ") in " << manifest.wall_time_s << " s\n";
  return kExitOk;
}

int RunAugment(const AugmentArgs& a, const std::string& command,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  AugmentConfig config;
  std::unique_ptr<TranslationBackend> backend;
  try {
    config.k = a.k;
    config.beam = a.beam;
    config.languages = a.languages;
    config.max_retries = a.retries;
    config.workers = ResolveWorkers(a.workers);
    config.Validate();
    backend = MakeBackend(a.backend);
  } catch (const BackendError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.record_dir.empty()) {
    backend = std::make_unique<RecordingBackend>(std::move(backend),
                                                 a.record_dir);
  }
  if (!fs::is_regular_file(a.input)) {
    throw InputError("cannot read " + a.input);
  }

  const AugmentReport report = AugmentDataset(a.input, config, *backend,
                                              a.output);

  RunManifest manifest;
  manifest.command = command;
  std::string langs;
  for (const std::string& l : config.languages) {
    if (!langs.empty()) langs.push_back(',');
    langs.append(l);
  }
  manifest.config_snapshot = {
      {"backend", a.backend},
      {"record", a.record_dir},
      {"k", std::to_string(config.k)},
      {"beam", std::to_string(config.beam)},
      {"languages", langs},
      {"pivot", config.pivot},
      {"max_retries", std::to_string(config.max_retries)},
      {"workers", std::to_string(config.workers)},
  };
  const fs::path input(a.input);
  manifest.input_digest = DigestPaths(std::span(&input, 1));
  manifest.counters = {
      {"originals", report.originals},
      {"variants", report.variants},
      {"failed_examples", report.failed_examples},
      {"malformed_records", report.malformed_records},
      {"total", report.total},
      {"expected_total", report.expected_total},
  };
  manifest.wall_time_s = Seconds(start);
  manifest.Write(fs::path(a.output) / kManifestFile);

  out << "wrote " << report.total << " examples (" << report.originals
      << " originals, " << report.variants << " variants)\n";
  if (report.failed_examples > 0) {
    err << "error: backend failed for " << report.failed_examples
        << " examples; their variants are missing\n";
    return kExitBackend;
  }
  return kExitOk;
}

int RunRouge(const RougeArgs& a, const std::string& command,
             std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto cand = Tokenize(ReadFile(a.candidate));
  const auto ref = Tokenize(ReadFile(a.reference));
  const json result = {{"rouge1", ScoresJson(RougeN(cand, ref, 1))},
                       {"rouge2", ScoresJson(RougeN(cand, ref, 2))},
                       {"rougeL", ScoresJson(RougeL(cand, ref))}};
  out << result.dump(2) << "\n";

  RunManifest manifest;
  manifest.command = command;
  const std::vector<fs::path> inputs = {a.candidate, a.reference};
  manifest.input_digest = DigestPaths(inputs);
  manifest.counters = {
      {"candidate_tokens", static_cast<std::int64_t>(cand.size())},
      {"reference_tokens", static_cast<std::int64_t>(ref.size())}};
  WriteSideManifest(manifest, a.manifest, start);
  return kExitOk;
}

int RunOracle(const OracleArgs& a, const std::string& command,
              std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const MetricConfig metric = ParseMetric(a.metric, a.metric_field);
  if (a.m && *a.m < 1) throw UsageError("--m must be >= 1");

  const Segmenter& segmenter = DefaultSegmenter();
  const auto doc = segmenter.SplitSentences(ReadFile(a.document));
  const std::string summary_text = ReadFile(a.summary);
  const auto summary_sentences = segmenter.SplitSentences(summary_text);
  const auto summary = Tokenize(summary_text);
  if (doc.empty()) throw InputError("document has no sentences");
  if (summary.empty()) throw InputError("summary has no tokens");
  const std::size_t m =
      a.m ? static_cast<std::size_t>(*a.m) : summary_sentences.size();

  OracleResult result;
  try {
    result = TopMOracle(doc, summary, m, metric);
  } catch (const TooShortError& e) {
    throw InputError(e.what());
  }
  json selected = json::array();
  for (std::size_t i : result.selected_indices) selected.push_back(doc[i].raw);
  const json j = {{"m", m},
                  {"metric", MetricKindName(metric.kind)},
                  {"metric_field", ScoreFieldName(metric.field)},
                  {"selected_indices", result.selected_indices},
                  {"individual_scores", result.individual_scores},
                  {"joint_score", result.joint_score},
                  {"selected_sentences", selected}};
  out << j.dump(2, ' ', false, json::error_handler_t::replace) << "\n";

  RunManifest manifest;
  manifest.command = command;
  manifest.config_snapshot = {
      {"m", std::to_string(m)},
      {"metric", std::string(MetricKindName(metric.kind))},
      {"metric_field", std::string(ScoreFieldName(metric.field))}};
  const std::vector<fs::path> inputs = {a.document, a.summary};
  manifest.input_digest = DigestPaths(inputs);
  manifest.counters = {
      {"document_sentences", static_cast<std::int64_t>(doc.size())}};
  manifest.statistics = {{"joint_score", result.joint_score}};
  WriteSideManifest(manifest, a.manifest, start);
  return kExitOk;
}

SequenceDistributions RowsFrom(const json& j, const char* key) {
  return SequenceDistributions::FromRows(
      j.at(key).get<std::vector<std::vector<double>>>());
}

// Fixture format:
//   {"epsilon": 1e-12, "lambda": 0.5, "reduction": "sum",
//    "cases": [{"name": ..., "x": [[...], ...], "aug": [[...], ...],
//               "targets": [...], "lambda": ..., "p": [...], "q": [...]}]}
// Every key of a case is optional; each loss is reported when its inputs
// are present.
json EvaluateLossFixtures(const json& fixtures) {
  LossConfig base;
  base.epsilon = fixtures.value("epsilon", base.epsilon);
  base.lambda = fixtures.value("lambda", base.lambda);
  const std::string reduction = fixtures.value("reduction", "sum");
  if (reduction == "mean") {
    base.reduction = Reduction::kMean;
  } else if (reduction != "sum") {
    throw InputError("unknown reduction '" + reduction + "'");
  }
  json results = json::array();
  for (const json& c : fixtures.at("cases")) {
    LossConfig config = base;
    config.lambda = c.value("lambda", base.lambda);
    config.Validate();
    json r;
    r["name"] = c.value("name", "case-" + std::to_string(results.size()));
    std::optional<SequenceDistributions> x;
    std::optional<SequenceDistributions> aug;
    std::vector<std::size_t> targets;
    if (c.contains("x")) x = RowsFrom(c, "x");
    if (c.contains("aug")) aug = RowsFrom(c, "aug");
    if (c.contains("targets")) {
      targets = c.at("targets").get<std::vector<std::size_t>>();
    }
    if (x && c.contains("targets")) r["nll"] = NllLoss(*x, targets, config);
    if (x && aug) {
      r["consistency"] = ConsistencyLoss(*x, *aug, config);
      r["uda"] = UdaLoss(*x, *aug, config);
      if (c.contains("targets")) {
        r["combined"] = CombinedLoss(*x, *aug, targets, config);
      }
    }
    if (c.contains("p") && c.contains("q")) {
      r["kl"] = Kl(StepDistribution(c.at("p").get<std::vector<double>>()),
                   StepDistribution(c.at("q").get<std::vector<double>>()),
                   config.epsilon);
    }
    results.push_back(std::move(r));
  }
  return {{"cases", results}};
}

int RunLoss(const LossArgs& a, const std::string& command,
            std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  json fixtures;
  json results;
  try {
    fixtures = json::parse(ReadFile(a.fixtures));
    results = EvaluateLossFixtures(fixtures);
  } catch (const json::exception& e) {
    throw InputError("bad loss fixture file: " + std::string(e.what()));
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range from the loss functions.
    throw InputError("bad loss fixture: " + std::string(e.what()));
  }
  out << results.dump(2) << "\n";

  RunManifest manifest;
  manifest.command = command;
  const fs::path input(a.fixtures);
  manifest.input_digest = DigestPaths(std::span(&input, 1));
  manifest.counters = {
      {"cases", static_cast<std::int64_t>(results["cases"].size())}};
  WriteSideManifest(manifest, a.manifest, start);
  return kExitOk;
}

void AddWorkersOption(CLI::App* sub, std::optional<int>& workers) {
  sub->add_option("--workers", workers,
                  "Worker threads (default: $WIKITRANSFER_WORKERS or all "
                  "cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int ResolveWorkers(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw UsageError("--workers must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv(kWorkersEnv); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) {
      throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pseudo summarization data toolkit", "wikitransfer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ToolVersion()));

  ProfileArgs profile;
  auto* profile_cmd =
      app.add_subcommand("profile", "Profile a labelled {document, summary} "
                                    "JSONL sample");
  profile_cmd->add_option("input", profile.input, "JSONL sample")
      ->required();
  profile_cmd->add_option("-o,--output", profile.output,
                          "Write the profile JSON here (plus "
                          "<path>.manifest.json)");
  profile_cmd->add_option("--metric", profile.metric, "rouge1|rouge2|rougeL");
  profile_cmd->add_option("--metric-field", profile.metric_field,
                          "precision|recall|f1");
  profile_cmd->add_flag("--json", profile.json_stdout,
                        "Print JSON instead of the table");
  AddWorkersOption(profile_cmd, profile.workers);

  BuildArgs build;
  auto* build_cmd =
      app.add_subcommand("build", "Build pseudo summary pairs from articles");
  build_cmd->add_option("corpus", build.corpus, "JSONL file or directory")
      ->required();
  build_cmd->add_option("--preset", build.preset, "Dataset preset")
      ->required()
      ->check(CLI::IsMember({"cnndm", "xsum", "reddit", "bigpatent"}));
  build_cmd->add_option("--config", build.config_file, "key=value file");
  build_cmd->add_option("-o,--output", build.output, "Output directory")
      ->required();
  build_cmd->add_option("--format", build.format, "jsonl|plain-dir");
  AddWorkersOption(build_cmd, build.workers);
  auto add_override = [&](const std::string& flag, const std::string& key,
                          const std::string& help) {
    build_cmd->add_option_function<std::string>(
        flag,
        [&build, key](const std::string& v) {
          build.overrides.emplace_back(key, v);
        },
        help);
  };
  add_override("--m", "m", "Summary sentences");
  add_override("--bin", "bin", "Named target bin");
  add_override("--bin-lo", "bin_lo", "Target bin lower bound");
  add_override("--bin-hi", "bin_hi", "Target bin upper bound (exclusive)");
  add_override("--selection", "selection", "first_m|ind_orig|ind_orig_p");
  add_override("--max-examples", "max_examples", "Cap on accepted pairs");
  add_override("--validation-size", "validation_size",
               "Validation pairs (or auto)");
  add_override("--min-source-sentences", "min_source_sentences",
               "Minimum article length (or auto)");
  add_override("--metric", "metric", "rouge1|rouge2|rougeL");
  add_override("--metric-field", "metric_field", "precision|recall|f1");
  add_override("--seed", "seed", "Validation split seed");
  build_cmd->add_flag_function(
      "--lead-bias,!--no-lead-bias",
      [&build](std::int64_t n) {
        build.overrides.emplace_back("lead_bias", n > 0 ? "true" : "false");
      },
      "Move oracle sentences to the front of the source");
  build_cmd->add_flag_function(
      "--force-bin-by-removal,!--no-force-bin-by-removal",
      [&build](std::int64_t n) {
        build.overrides.emplace_back("force_bin_by_removal",
                                     n > 0 ? "true" : "false");
      },
      "Delete best-matching sentences until the oracle falls in the bin");

  AugmentArgs augment;
  auto* augment_cmd = app.add_subcommand(
      "augment", "Round-trip translation augmentation of a built dataset");
  augment_cmd->add_option("input", augment.input, "Dataset JSONL")
      ->required();
  augment_cmd
      ->add_option("--backend", augment.backend,
                   "mock | replay:<dir> | http:<url> | exec:<command>")
      ->required();
  augment_cmd->add_option("--record", augment.record_dir,
                          "Cache every backend response in this directory");
  augment_cmd->add_option("--k", augment.k, "Hypotheses kept per language")
      ->check(CLI::PositiveNumber);
  augment_cmd->add_option("--beam", augment.beam, "Beam size")
      ->check(CLI::PositiveNumber);
  augment_cmd->add_option("--langs", augment.languages, "Pivot languages")
      ->delimiter(',');
  augment_cmd->add_option("--retries", augment.retries,
                          "Extra attempts per backend call")
      ->check(CLI::NonNegativeNumber);
  augment_cmd->add_option("-o,--output", augment.output, "Output directory")
      ->required();
  AddWorkersOption(augment_cmd, augment.workers);

  RougeArgs rouge;
  auto* rouge_cmd =
      app.add_subcommand("rouge", "ROUGE-1/2/L of a candidate file");
  rouge_cmd->add_option("candidate", rouge.candidate)->required();
  rouge_cmd->add_option("reference", rouge.reference)->required();
  rouge_cmd->add_option("--manifest", rouge.manifest,
                        "Write a run manifest here");

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Top-M extractive oracle of a document");
  oracle_cmd->add_option("document", oracle.document)->required();
  oracle_cmd->add_option("summary", oracle.summary)->required();
  oracle_cmd->add_option("--m", oracle.m,
                         "Sentences to select (default: summary length)");
  oracle_cmd->add_option("--metric", oracle.metric, "rouge1|rouge2|rougeL");
  oracle_cmd->add_option("--metric-field", oracle.metric_field,
                         "precision|recall|f1");
  oracle_cmd->add_option("--manifest", oracle.manifest,
                         "Write a run manifest here");

  LossArgs loss;
  auto* loss_cmd =
      app.add_subcommand("loss", "Evaluate losses from a JSON fixture file");
  loss_cmd->add_option("fixtures", loss.fixtures)->required();
  loss_cmd->add_option("--manifest", loss.manifest,
                       "Write a run manifest here");

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string command = JoinArgs(args);
  try {
    if (*profile_cmd) return RunProfile(profile, command, out, err);
    if (*build_cmd) return RunBuild(build, command, out, err);
    if (*augment_cmd) return RunAugment(augment, command, out, err);
    if (*rouge_cmd) return RunRouge(rouge, command, out);
    if (*oracle_cmd) return RunOracle(oracle, command, out);
    if (*loss_cmd) return RunLoss(loss, command, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BackendError& e) {
    err << "error: backend: " << e.what() << "\n";
    return kExitBackend;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace wikitransfer::cli
