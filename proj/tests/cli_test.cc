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

#include <gtest/gtest.h>
#include <stdlib.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "synthetic.h"
#include "wikitransfer/augment.h"
#include "wikitransfer/builder.h"
#include "wikitransfer/manifest.h"

namespace wikitransfer::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t LineCount(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

json ManifestWithoutTime(const fs::path& p) {
  json j = json::parse(ReadAll(p));
  j.erase("wall_time_s");
  return j;
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    root_ = fs::temp_directory_path() / "wt_cli_test";
    fs::remove_all(root_);
    fs::create_directories(root_);
    corpus_ = root_ / "corpus.jsonl";
    testing::WriteSyntheticJsonl(corpus_, 4000);
  }
  static void TearDownTestSuite() { fs::remove_all(root_); }
  void SetUp() override { unsetenv(kWorkersEnv); }

  static fs::path Write(const std::string& name, const std::string& contents) {
    std::ofstream(root_ / name, std::ios::binary) << contents;
    return root_ / name;
  }

  static fs::path root_;
  static fs::path corpus_;
};

fs::path CliTest::root_;
fs::path CliTest::corpus_;

TEST_F(CliTest, BuildWritesCappedDatasetAndManifest) {
  const fs::path out = root_ / "build";
  const Result r = Invoke({"build", corpus_.string(), "--preset", "cnndm",
                           "--max-examples", "100", "-o", out.string(),
                           "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LineCount(out / kTrainFile) + LineCount(out / kValidFile), 100u);
  EXPECT_EQ(LineCount(out / kValidFile), 10u);
  const json m = json::parse(ReadAll(out / kManifestFile));
  EXPECT_EQ(m["counters"]["accepted"], 100);
  EXPECT_EQ(m["counters"]["reached_cap"], 1);
  EXPECT_EQ(m["config_snapshot"]["preset"], "cnndm");
  EXPECT_EQ(m["config_snapshot"]["m"], "3");
  EXPECT_EQ(m["config_snapshot"]["workers"], "2");
  EXPECT_EQ(m["input_digest"].get<std::string>().size(), 64u);
  EXPECT_EQ(m["tool_version"], std::string(ToolVersion()));
  EXPECT_NE(r.out.find("accepted 100"), std::string::npos);
}

TEST_F(CliTest, ManifestsAreReproducible) {
  const std::vector<std::string> args = {
      "build", corpus_.string(), "--preset", "xsum", "--max-examples", "50",
      "-o", (root_ / "repro").string(), "--workers", "1"};
  ASSERT_EQ(Invoke(args).code, kExitOk);
  const json first = ManifestWithoutTime(root_ / "repro" / kManifestFile);
  const std::string train = ReadAll(root_ / "repro" / kTrainFile);
  ASSERT_EQ(Invoke(args).code, kExitOk);
  EXPECT_EQ(ManifestWithoutTime(root_ / "repro" / kManifestFile), first);
  EXPECT_EQ(ReadAll(root_ / "repro" / kTrainFile), train);
}

TEST_F(CliTest, FlagsOverrideConfigFileOverridePreset) {
  const fs::path config = Write("build.cfg", "# overrides\nm = 2\nseed = 9\n");
  const fs::path out = root_ / "precedence";
  ASSERT_EQ(Invoke({"build", corpus_.string(), "--preset", "cnndm", "--config",
                    config.string(), "--max-examples", "5", "-o", out.string()})
                .code,
            kExitOk);
  json m = json::parse(ReadAll(out / kManifestFile));
  EXPECT_EQ(m["config_snapshot"]["m"], "2");
  EXPECT_EQ(m["config_snapshot"]["seed"], "9");
  EXPECT_EQ(m["config_snapshot"]["lead_bias"], "true");
  ASSERT_EQ(Invoke({"build", corpus_.string(), "--preset", "cnndm", "--config",
                    config.string(), "--m", "1", "--no-lead-bias",
                    "--max-examples", "5", "-o", out.string()})
                .code,
            kExitOk);
  m = json::parse(ReadAll(out / kManifestFile));
  EXPECT_EQ(m["config_snapshot"]["m"], "1");
  EXPECT_EQ(m["config_snapshot"]["seed"], "9");
  EXPECT_EQ(m["config_snapshot"]["lead_bias"], "false");
}

TEST_F(CliTest, WorkersFromEnvironment) {
  setenv(kWorkersEnv, "3", 1);
  EXPECT_EQ(ResolveWorkers(std::nullopt), 3);
  EXPECT_EQ(ResolveWorkers(5), 5);
  const fs::path out = root_ / "env";
  ASSERT_EQ(Invoke({"build", corpus_.string(), "--preset", "xsum",
                    "--max-examples", "5", "-o", out.string()})
                .code,
            kExitOk);
  EXPECT_EQ(json::parse(ReadAll(out / kManifestFile))["config_snapshot"]["workers"],
            "3");
  setenv(kWorkersEnv, "many", 1);
  const Result bad = Invoke({"build", corpus_.string(), "--preset", "xsum",
                             "-o", out.string()});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find(kWorkersEnv), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  Result r = Invoke({"build", corpus_.string(), "--preset", "cnndm", "-o",
                     (root_ / "x").string(), "--frobnicate"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"teleport"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"build", corpus_.string(), "--preset", "wikihow", "-o",
                    (root_ / "x").string()})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"build", corpus_.string(), "--preset", "cnndm", "--m", "0",
                    "-o", (root_ / "x").string()})
                .code,
            kExitUsage);
  EXPECT_EQ(Invoke({"augment", "in.jsonl", "-o", "x", "--backend", "mock", "--k",
                    "20"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"augment", "in.jsonl", "-o", "x", "--backend", "pigeon"}).code,
            kExitUsage);
}

TEST_F(CliTest, HelpAndVersion) {
  Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("build"), std::string::npos);
  r = Invoke({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(std::string(ToolVersion())), std::string::npos);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(Invoke({"build", (root_ / "absent.jsonl").string(), "--preset",
                    "cnndm", "-o", (root_ / "x").string()})
                .code,
            kExitInput);
  EXPECT_EQ(Invoke({"rouge", (root_ / "absent").string(), corpus_.string()}).code,
            kExitInput);
  EXPECT_EQ(Invoke({"augment", (root_ / "absent.jsonl").string(), "--backend",
                    "mock", "-o", (root_ / "x").string()})
                .code,
            kExitInput);
  EXPECT_EQ(Invoke({"profile", Write("empty.jsonl", "").string()}).code,
            kExitInput);
  EXPECT_EQ(Invoke({"loss", Write("bad_loss.json", "{\"cases\":[{\"x\":[[0.5,0.6]],"
                                                   "\"targets\":[0]}]}")
                                .string()})
                .code,
            kExitInput);
}

TEST_F(CliTest, AugmentCountLaw) {
  const fs::path build = root_ / "aug_build";
  ASSERT_EQ(Invoke({"build", corpus_.string(), "--preset", "xsum",
                    "--max-examples", "10", "--validation-size", "0", "-o",
                    build.string()})
                .code,
            kExitOk);
  ASSERT_EQ(LineCount(build / kTrainFile), 10u);
  const fs::path out = root_ / "aug";
  const Result r = Invoke({"augment", (build / kTrainFile).string(), "--backend",
                           "mock", "--k", "10", "--langs", "de,ru", "-o",
                           out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LineCount(out / kAugmentedFile), 2010u);
  const json m = json::parse(ReadAll(out / kManifestFile));
  EXPECT_EQ(m["counters"]["total"], 2010);
  EXPECT_EQ(m["counters"]["expected_total"], 2010);
  EXPECT_EQ(m["config_snapshot"]["backend"], "mock");
}

TEST_F(CliTest, AugmentRecordAndReplayViaExec) {
  const fs::path input = Write(
      "pairs.jsonl",
      json{{"id", "a"}, {"source", "One. Two."}, {"target", "Three."}}.dump() + "\n" +
          json{{"id", "b"}, {"source", "Four here."}, {"target", "Five."}}.dump() +
          "\n");
  const fs::path cache = root_ / "cache";
  const Result rec = Invoke({"augment", input.string(), "--backend",
                             std::string("exec:") + WT_FAKE_TRANSLATOR, "--record",
                             cache.string(), "--k", "2", "--langs", "de", "-o",
                             (root_ / "rec").string()});
  ASSERT_EQ(rec.code, kExitOk) << rec.err;
  const Result rep = Invoke({"augment", input.string(), "--backend",
                             "replay:" + cache.string(), "--k", "2", "--langs",
                             "de", "-o", (root_ / "rep").string()});
  ASSERT_EQ(rep.code, kExitOk) << rep.err;
  EXPECT_EQ(ReadAll(root_ / "rec" / kAugmentedFile),
            ReadAll(root_ / "rep" / kAugmentedFile));
  EXPECT_EQ(LineCount(root_ / "rep" / kAugmentedFile), 10u);
  EXPECT_NE(ReadAll(root_ / "rep" / kAugmentedFile).find("One. v1 Two. v1"),
            std::string::npos);
}

TEST_F(CliTest, AugmentBackendFailureExitsThree) {
  const fs::path input = Write(
      "one.jsonl", json{{"source", "One. Two."}, {"target", "Three."}}.dump() + "\n");
  const Result r = Invoke({"augment", input.string(), "--backend",
                           std::string("exec:") + WT_FAKE_TRANSLATOR + " --garbage",
                           "--retries", "0", "-o", (root_ / "fail").string()});
  EXPECT_EQ(r.code, kExitBackend);
  EXPECT_EQ(LineCount(root_ / "fail" / kAugmentedFile), 1u);  // original kept
  EXPECT_EQ(Invoke({"augment", input.string(), "--backend", "exec:/no/such/bin",
                    "--retries", "0", "-o", (root_ / "fail2").string()})
                .code,
            kExitBackend);
}

TEST_F(CliTest, RougeOutput) {
  const Result r = Invoke({"rouge", Write("cand.txt", "the cat sat on the mat").string(),
                           Write("ref.txt", "the cat lay on the mat").string(),
                           "--manifest", (root_ / "rouge.manifest.json").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["rouge1"]["f1"].get<double>(), 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(j["rouge2"]["f1"].get<double>(), 3.0 / 5.0, 1e-12);
  EXPECT_NEAR(j["rougeL"]["recall"].get<double>(), 5.0 / 6.0, 1e-12);
  const json m = json::parse(ReadAll(root_ / "rouge.manifest.json"));
  EXPECT_EQ(m["counters"]["candidate_tokens"], 6);
}

TEST_F(CliTest, OracleOutput) {
  const fs::path doc = Write(
      "doc.txt", "Rain fell all day. The cat sat on the mat. Markets rallied.");
  const fs::path sum = Write("sum.txt", "The cat lay on the mat.");
  Result r = Invoke({"oracle", doc.string(), sum.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["selected_indices"], json::array({1}));
  EXPECT_EQ(j["selected_sentences"][0], "The cat sat on the mat.");
  EXPECT_NEAR(j["joint_score"].get<double>(), 5.0 / 6.0, 1e-12);
  r = Invoke({"oracle", doc.string(), sum.string(), "--m", "4"});
  EXPECT_EQ(r.code, kExitInput);
  r = Invoke({"oracle", doc.string(), sum.string(), "--metric", "bleu"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, LossOutput) {
  const fs::path fixtures = Write("loss.json", R"({
    "lambda": 0.5,
    "cases": [
      {"name": "uniform", "x": [[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]],
       "targets": [0, 3]},
      {"name": "kl", "p": [1, 0], "q": [0.5, 0.5]},
      {"name": "combined", "x": [[1, 0]], "aug": [[0.5, 0.5]], "targets": [0],
       "lambda": 0.1}
    ]})");
  const Result r = Invoke({"loss", fixtures.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["cases"][0]["nll"].get<double>(), 2.0 * std::log(4.0), 1e-9);
  EXPECT_NEAR(j["cases"][1]["kl"].get<double>(), std::log(2.0), 1e-12);
  EXPECT_NEAR(j["cases"][2]["consistency"].get<double>(), std::log(2.0), 1e-12);
  EXPECT_NEAR(j["cases"][2]["combined"].get<double>(), 0.1 * std::log(2.0), 1e-12);
}

TEST_F(CliTest, ProfileOutput) {
  std::string lines;
  for (const auto& pair : testing::PlantedOverlapPairs(20, 16, 5, 4)) {
    lines += json{{"document", pair.document}, {"summary", pair.summary}}.dump() + "\n";
  }
  const fs::path sample = Write("sample.jsonl", lines);
  Result r = Invoke({"profile", sample.string(), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["suggested_bin"]["name"], "more_extractive");
  r = Invoke({"profile", sample.string()});
  EXPECT_NE(r.out.find("more_extractive"), std::string::npos);
  const fs::path out = root_ / "profile.json";
  ASSERT_EQ(Invoke({"profile", sample.string(), "-o", out.string()}).code, kExitOk);
  EXPECT_NEAR(json::parse(ReadAll(out))["oracle_mean"].get<double>(), 0.3125, 1e-12);
  EXPECT_TRUE(fs::exists(out.string() + ".manifest.json"));
}

}  // namespace
}  // namespace wikitransfer::cli
