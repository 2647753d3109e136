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

#include "opabs/suite.hpp"

#include <gtest/gtest.h>

namespace opabs {
namespace {

void clear_time(SuiteReport& r) { r.wall_time_seconds = 0.0; }

TEST(RunSuiteTest, RejectsBadArguments) {
  EXPECT_THROW(run_suite({"C-TRI"}, {2}, 0, 42), std::invalid_argument);
  EXPECT_THROW(run_suite({"C-TRI"}, {}, 1, 42), std::invalid_argument);
  EXPECT_THROW(run_suite({"C-NOPE"}, {2}, 1, 42), std::invalid_argument);
}

TEST(RunSuiteTest, CountsSumToTrials) {
  const SuiteReport r = run_suite({"C-TRI", "C-PRODSA", "CE-4"}, {2, 3}, 20, 42);
  ASSERT_EQ(r.claims.size(), 3u);
  for (const ClaimSummary& s : r.claims) {
    EXPECT_EQ(s.passes + s.hypothesis_failures + s.violations.size() + s.errors.size(),
              s.trials)
        << s.id;
  }
  EXPECT_EQ(r.claims[0].trials, 40u);
  EXPECT_EQ(r.claims[1].dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.claims[1].trials, 20u);
  EXPECT_EQ(r.claims[2].trials, 1u);
  EXPECT_TRUE(r.claims[2].reproduced.value_or(false));
  EXPECT_TRUE(r.pass());
}

TEST(RunSuiteTest, SerialAndParallelAgree) {
  const std::vector<std::string> ids{"C-EIGHT", "C-NFOLD", "T-LH", "CE-0"};
  SuiteReport serial = run_suite(ids, {2, 4}, 30, 9, {}, {1, 0});
  SuiteReport parallel = run_suite(ids, {2, 4}, 30, 9, {}, {4, 0});
  clear_time(serial);
  clear_time(parallel);
  EXPECT_EQ(serial.claims, parallel.claims);
}

TEST(RunSuiteTest, FirstTrialOffsetReplaysInPlace) {
  const SuiteReport full = run_suite({"C-ABSDIFF-"}, {3}, 10, 5);
  const SuiteReport one = run_suite({"C-ABSDIFF-"}, {3}, 1, 5, {}, {1, 7});
  const ClaimResult r = replay("C-ABSDIFF-", 3, 5, 7);
  EXPECT_EQ(one.claims[0].passes, 1u);
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_EQ(full.claims[0].passes, 10u);
}

TEST(RunSuiteTest, TightToleranceProducesReplayableViolations) {
  // At a tolerance far below round-off, equality claims fail; every
  // reported seed must replay to the identical result.
  const TolerancePolicy tight{1e-15, 1e-300};
  const SuiteReport r = run_suite({"C-POWZ"}, {3}, 20, 3, tight);
  const ClaimSummary& s = r.claims[0];
  ASSERT_FALSE(s.violations.empty());
  EXPECT_FALSE(r.pass());
  for (const TrialRecord& v : s.violations) {
    const auto colon = v.seed.find(':');
    const std::uint64_t master = std::stoull(v.seed.substr(0, colon));
    const std::uint64_t trial = std::stoull(v.seed.substr(colon + 1));
    const ClaimResult again = replay(s.id, v.dim, master, trial, tight);
    EXPECT_EQ(again.verdict, Verdict::kViolation);
    EXPECT_EQ(again.residuals, v.residuals);
    EXPECT_EQ(again.excess, v.excess);
  }
}

TEST(RunInstanceTest, HypothesisFailureIsNotAViolation) {
  std::vector<ComplexMatrix> pair{ComplexMatrix::from_rows({{-1, 1}, {1, -1}}),
                                  ComplexMatrix::from_rows({{2, 0}, {0, 0}})};
  const SuiteReport r = run_instance("C-TRI", pair);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.claims[0].hypothesis_failures, 1u);
  EXPECT_EQ(r.claims[0].hypothesis_records.size(), 1u);
  EXPECT_THROW(run_instance("C-TRI", {ComplexMatrix::identity(2)}), std::invalid_argument);
}

}  // namespace
}  // namespace opabs
