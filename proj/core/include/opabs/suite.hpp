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

#ifndef OPABS_SUITE_HPP_
#define OPABS_SUITE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "opabs/claims.hpp"

namespace opabs {

struct SuiteOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Index of the first trial; lets a single trial be replayed in place.
  std::uint64_t first_trial = 0;
};

/// A trial reported individually (violations, hypothesis failures of
/// user instances, registry results).
struct TrialRecord {
  /// "master:trial", or "registry" / "user" for fixed instances.
  std::string seed;
  std::size_t dim = 0;
  Verdict verdict = Verdict::kPass;
  std::vector<Residual> residuals;
  std::vector<Flag> flags;
  double excess = 0.0;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ErrorRecord {
  std::string seed;
  std::size_t dim = 0;
  std::string message;
  friend bool operator==(const ErrorRecord&, const ErrorRecord&) = default;
};

struct ClaimSummary {
  std::string id;
  Expectation expect = Expectation::kAlwaysHolds;
  std::string note;
  std::vector<std::size_t> dims;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t hypothesis_failures = 0;
  std::vector<TrialRecord> violations;
  std::vector<ErrorRecord> errors;
  /// Largest conclusion excess seen (> 0 means some conclusion failed).
  double worst_residual = -std::numeric_limits<double>::infinity();
  std::string worst_seed;
  std::size_t worst_dim = 0;
  /// Registry claims only: verdict, flags and values all as listed.
  std::optional<bool> reproduced;
  /// Registry claims only: printed-versus-computed value note, if any.
  std::string discrepancy;
  /// Records of hypothesis failures for fixed (user) instances.
  std::vector<TrialRecord> hypothesis_records;

  /// Always-holds claims: no violation and no error. Registry claims:
  /// reproduced exactly.
  bool ok() const;
  friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

struct SuiteReport {
  std::vector<ClaimSummary> claims;
  double wall_time_seconds = 0.0;
  bool pass() const;
};

/// Seed string used in reports, "master:trial".
std::string seed_string(std::uint64_t master, std::uint64_t trial);

/// Runs every (claim, dim, trial) with Seed(master, "<id>:<dim>", trial).
/// Claims with a fixed dimension run only there; registry claims are
/// evaluated once each. Throws std::invalid_argument on unknown ids,
/// trials == 0 or empty dims; per-trial numerical failures are recorded,
/// not thrown. The report (wall time aside) does not depend on threads.
SuiteReport run_suite(const std::vector<std::string>& claim_ids,
                      const std::vector<std::size_t>& dims, std::uint64_t trials,
                      std::uint64_t master, const TolerancePolicy& pol = {},
                      const SuiteOptions& options = {});

/// Checks user-supplied matrices against one claim.
SuiteReport run_instance(const std::string& claim_id, std::vector<ComplexMatrix> matrices,
                         const TolerancePolicy& pol = {});

/// Regenerates and rechecks one suite trial.
ClaimResult replay(const std::string& claim_id, std::size_t dim, std::uint64_t master,
                   std::uint64_t trial, const TolerancePolicy& pol = {});

}  // namespace opabs

#endif  // OPABS_SUITE_HPP_
