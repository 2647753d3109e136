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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <variant>

namespace opabs {
namespace {

using Outcome = std::variant<ClaimResult, std::string>;

std::string dim_tag(const Claim& claim, std::size_t dim) {
  return claim.id + ":" + std::to_string(dim);
}

ClaimResult run_trial(const Claim& claim, std::size_t dim, std::uint64_t master,
                      std::uint64_t trial, const TolerancePolicy& pol) {
  return check_claim(draw_instance(claim, dim, Seed{master, dim_tag(claim, dim), trial}), pol);
}

std::vector<Outcome> run_batch(const Claim& claim, std::size_t dim, std::uint64_t master,
                               std::uint64_t first, std::uint64_t count,
                               const TolerancePolicy& pol, unsigned threads) {
  std::vector<Outcome> out(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        out[i] = run_trial(claim, dim, master, first + i, pol);
      } catch (const std::exception& e) {
        out[i] = std::string(e.what());
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (n <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

TrialRecord record(const ClaimResult& r, std::string seed, std::size_t dim) {
  return TrialRecord{std::move(seed), dim, r.verdict, r.residuals, r.flags, r.excess};
}

void absorb(ClaimSummary& s, const ClaimResult& r, const std::string& seed, std::size_t dim) {
  switch (r.verdict) {
    case Verdict::kPass:
      ++s.passes;
      break;
    case Verdict::kViolation:
      s.violations.push_back(record(r, seed, dim));
      break;
    case Verdict::kHypothesisFail:
      ++s.hypothesis_failures;
      break;
  }
  if (r.hypothesis_ok && r.excess > s.worst_residual) {
    s.worst_residual = r.excess;
    s.worst_seed = seed;
    s.worst_dim = dim;
  }
}

ClaimSummary summarize_registry(const Claim& claim, const TolerancePolicy& pol) {
  ClaimSummary s;
  s.id = claim.id;
  s.expect = claim.expect;
  s.note = claim.note;
  for (const RegistryEntry& entry : registry()) {
    if (entry.instance.claim_id != claim.id) continue;
    const std::size_t dim = entry.instance.matrices.front().dim();
    s.dims = {dim};
    s.discrepancy = entry.discrepancy;
    ++s.trials;
    try {
      const RegistryOutcome o = reproduce(entry, pol);
      s.violations.push_back(record(o.result, "registry", dim));
      if (o.result.verdict == Verdict::kPass) ++s.passes;
      if (o.result.verdict == Verdict::kHypothesisFail) ++s.hypothesis_failures;
      if (o.result.excess > s.worst_residual) {
        s.worst_residual = o.result.excess;
        s.worst_seed = "registry";
        s.worst_dim = dim;
      }
      s.reproduced = s.reproduced.value_or(true) && o.reproduced();
    } catch (const std::exception& e) {
      s.errors.push_back(ErrorRecord{"registry", dim, e.what()});
      s.reproduced = false;
    }
  }
  return s;
}

std::vector<const Claim*> resolve(const std::vector<std::string>& ids) {
  std::vector<const Claim*> out;
  for (const std::string& id : ids) out.push_back(&find_claim(id));
  return out;
}

}  // namespace

bool ClaimSummary::ok() const {
  if (expect == Expectation::kRegistryViolation) return reproduced.value_or(false);
  return violations.empty() && errors.empty();
}

bool SuiteReport::pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimSummary& c) { return c.ok(); });
}

std::string seed_string(std::uint64_t master, std::uint64_t trial) {
  return std::to_string(master) + ":" + std::to_string(trial);
}

SuiteReport run_suite(const std::vector<std::string>& claim_ids,
                      const std::vector<std::size_t>& dims, std::uint64_t trials,
                      std::uint64_t master, const TolerancePolicy& pol,
                      const SuiteOptions& options) {
  if (trials == 0) throw std::invalid_argument("run_suite: trials must be >= 1");
  if (dims.empty()) throw std::invalid_argument("run_suite: dims must be non-empty");
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end()) {
    throw std::invalid_argument("run_suite: dims must be positive");
  }
  pol.validate();
  const std::vector<const Claim*> claims = resolve(claim_ids);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  for (const Claim* claim : claims) {
    if (claim->expect == Expectation::kRegistryViolation) {
      report.claims.push_back(summarize_registry(*claim, pol));
      continue;
    }
    ClaimSummary s;
    s.id = claim->id;
    s.expect = claim->expect;
    s.note = claim->note;
    s.dims = claim->ensemble.fixed_dim ? std::vector<std::size_t>{*claim->ensemble.fixed_dim}
                                       : dims;
    for (std::size_t dim : s.dims) {
      const std::vector<Outcome> batch =
          run_batch(*claim, dim, master, options.first_trial, trials, pol, threads);
      for (std::uint64_t i = 0; i < trials; ++i) {
        const std::string seed = seed_string(master, options.first_trial + i);
        ++s.trials;
        if (const auto* r = std::get_if<ClaimResult>(&batch[i])) {
          absorb(s, *r, seed, dim);
        } else {
          s.errors.push_back(ErrorRecord{seed, dim, std::get<std::string>(batch[i])});
        }
      }
    }
    report.claims.push_back(std::move(s));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_instance(const std::string& claim_id, std::vector<ComplexMatrix> matrices,
                         const TolerancePolicy& pol) {
  pol.validate();
  const Claim& claim = find_claim(claim_id);
  if (!claim.arity.accepts(matrices.size())) {
    throw std::invalid_argument(claim_id + ": expected " + std::to_string(claim.arity.min) +
                                " to " + std::to_string(claim.arity.max) + " matrices, got " +
                                std::to_string(matrices.size()));
  }
  const std::size_t dim = matrices.front().dim();
  for (const ComplexMatrix& m : matrices) {
    if (m.dim() != dim) throw DimensionMismatch(claim_id + ": matrices differ in dimension");
  }
  const auto start = std::chrono::steady_clock::now();
  ClaimSummary s;
  s.id = claim.id;
  s.expect = claim.expect;
  s.note = claim.note;
  s.dims = {dim};
  s.trials = 1;
  try {
    const ClaimResult r = check_claim(ClaimInstance{claim.id, std::move(matrices), std::nullopt}, pol);
    absorb(s, r, "user", dim);
    if (r.verdict == Verdict::kHypothesisFail) s.hypothesis_records.push_back(record(r, "user", dim));
    // A user instance is not a registry entry; an expected-violation
    // claim is satisfied when the violation appears.
    if (claim.expect == Expectation::kRegistryViolation) {
      s.reproduced = r.verdict == Verdict::kViolation;
    }
  } catch (const std::exception& e) {
    s.errors.push_back(ErrorRecord{"user", dim, e.what()});
  }
  SuiteReport report;
  report.claims.push_back(std::move(s));
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClaimResult replay(const std::string& claim_id, std::size_t dim, std::uint64_t master,
                   std::uint64_t trial, const TolerancePolicy& pol) {
  return run_trial(find_claim(claim_id), dim, master, trial, pol);
}

}  // namespace opabs
