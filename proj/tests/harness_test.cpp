// Copyright 2026 The opabs Authors
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

#include "harness.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "opabs/matrix_json.hpp"

namespace opabs::tools {
namespace {

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "opabs-lab");
  return parse_config(static_cast<int>(args.size()), args.data());
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<const char*> args) {
  args.insert(args.begin(), "opabs-lab");
  std::ostringstream out, err;
  const int code = run_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseConfigTest, Defaults) {
  const RunConfig cfg = parse({});
  EXPECT_EQ(cfg.dims, (std::vector<std::size_t>{2, 3, 4, 8}));
  EXPECT_EQ(cfg.trials, 100u);
  EXPECT_EQ(cfg.master_seed, 42u);
  EXPECT_EQ(cfg.claim_ids.size(), catalog().size());
  EXPECT_EQ(cfg.format, Format::kText);
}

TEST(ParseConfigTest, ExplicitValues) {
  const RunConfig cfg =
      parse({"--claims", "C-TRI", "--dims", "2", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(cfg.claim_ids, (std::vector<std::string>{"C-TRI"}));
  EXPECT_EQ(cfg.dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(cfg.trials, 100u);
  EXPECT_EQ(cfg.master_seed, 7u);
  EXPECT_EQ(cfg.first_trial, 0u);
}

TEST(ParseConfigTest, SeedWithTrial) {
  const RunConfig cfg = parse({"--seed", "11:250", "--tol-rel", "1e-8"});
  EXPECT_EQ(cfg.master_seed, 11u);
  EXPECT_EQ(cfg.first_trial, 250u);
  EXPECT_EQ(cfg.pol.rel, 1e-8);
}

TEST(ParseConfigTest, Selections) {
  EXPECT_EQ(parse({"--claims", "registry"}).claim_ids.size(), 5u);
  EXPECT_EQ(parse({"--claims", "theorems"}).claim_ids.size(), catalog().size() - 5);
  EXPECT_EQ(parse({"--claims", "C-TRI,CE-4,C-TRI"}).claim_ids.size(), 2u);
}

TEST(ParseConfigTest, UsageErrors) {
  EXPECT_THROW(parse({"--format", "yaml"}), UsageError);
  EXPECT_THROW(parse({"--bogus"}), UsageError);
  EXPECT_THROW(parse({"--trials", "0"}), UsageError);
  EXPECT_THROW(parse({"--dims", "2,x"}), UsageError);
  EXPECT_THROW(parse({"--dims", "0"}), UsageError);
  EXPECT_THROW(parse({"--seed", "-1"}), UsageError);
  EXPECT_THROW(parse({"--claims", "C-NOPE"}), UsageError);
  EXPECT_THROW(parse({"--tol-rel", "0"}), UsageError);
  EXPECT_THROW(parse({"--claims", "all", "--matrix-file", "a.json"}), UsageError);
}

TEST(EmitReportTest, EmptyReportPasses) {
  RunConfig cfg;
  cfg.claim_ids.clear();
  const auto j = nlohmann::json::parse(emit_report(SuiteReport{}, cfg, Format::kJson));
  EXPECT_TRUE(j["claims"].empty());
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(EmitReportTest, JsonShapeAndKeyOrder) {
  RunConfig cfg;
  cfg.claim_ids = {"C-TRI", "CE-4"};
  const SuiteReport report = run_suite(cfg.claim_ids, {2}, 5, 42);
  const std::string text = emit_report(report, cfg, Format::kJson);
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "version", "claims", "verdict",
                                            "wall_time_s"}));
  ASSERT_EQ(j["claims"].size(), 2u);
  const auto& tri = j["claims"][0];
  EXPECT_EQ(tri["id"], "C-TRI");
  EXPECT_EQ(tri["trials"], 5);
  EXPECT_TRUE(tri["violations"].is_array());
  EXPECT_TRUE(tri.contains("hypothesis_failures"));
  EXPECT_TRUE(tri.contains("worst_residual"));
  EXPECT_TRUE(tri.contains("note"));
  EXPECT_EQ(j["claims"][1]["violations"][0]["seed"], "registry");
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(EmitReportTest, ViolationMakesVerdictFail) {
  RunConfig cfg;
  cfg.claim_ids = {"C-POWZ"};
  const SuiteReport report = run_suite(cfg.claim_ids, {3}, 5, 1, TolerancePolicy{1e-15, 1e-300});
  const auto j = nlohmann::json::parse(emit_report(report, cfg, Format::kJson));
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_FALSE(j["claims"][0]["violations"].empty());
}

TEST(RunMainTest, ExitCodes) {
  EXPECT_EQ(run({"--list"}).code, kExitOk);
  EXPECT_EQ(run({"--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run({"--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(run({"--claims", "C-POWZ", "--dims", "3", "--trials", "3", "--tol-rel", "1e-15",
                 "--tol-abs", "1e-300"})
                .code,
            kExitFailure);
}

TEST(RunMainTest, RegistryOnly) {
  const CliRun r = run({"--claims", "registry", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["claims"].size(), 5u);
  for (const auto& c : j["claims"]) EXPECT_TRUE(c["reproduced"].get<bool>());
}

TEST(RunMainTest, UserMatricesFailingHypothesis) {
  const auto dir = std::filesystem::temp_directory_path() / "opabs_harness_test";
  std::filesystem::create_directories(dir);
  const auto a = (dir / "a.json").string();
  const auto b = (dir / "b.json").string();
  std::ofstream(a) << to_matrix_json(ComplexMatrix::from_rows({{-1, 1}, {1, -1}}));
  std::ofstream(b) << to_matrix_json(ComplexMatrix::from_rows({{2, 0}, {0, 0}}));
  const CliRun r = run({"--claims", "C-TRI", "--matrix-file", a.c_str(), "--matrix-file",
                     b.c_str(), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["claims"][0]["hypothesis_failures"], 1);
  EXPECT_EQ(j["claims"][0]["hypothesis_failure_records"][0]["verdict"], "HYPOTHESIS_FAIL");
  EXPECT_EQ(run({"--claims", "C-TRI", "--matrix-file", (dir / "missing.json").c_str()}).code,
            kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST(RunMainTest, NullProbe) {
  const CliRun r = run({"--claims", "C-TRI", "--dims", "2", "--trials", "100", "--null-probe",
                     "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["probe"][0]["violations"].get<int>(), 0);
}

}  // namespace
}  // namespace opabs::tools
