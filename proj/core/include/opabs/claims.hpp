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

#ifndef OPABS_CLAIMS_HPP_
#define OPABS_CLAIMS_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opabs/generators.hpp"
#include "opabs/matrix.hpp"

namespace opabs {

enum class Expectation {
  kAlwaysHolds,
  kRegistryViolation,
};

enum class Verdict {
  kPass,
  kViolation,
  kHypothesisFail,
};

std::string to_string(Expectation e);
std::string to_string(Verdict v);

struct Residual {
  std::string name;
  double value = 0.0;
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct Flag {
  std::string name;
  bool value = false;
  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Accumulates the checks making up one side (hypothesis or conclusion)
/// of a claim. `excess` is the worst signed overshoot past a threshold:
/// positive exactly when some check failed.
class Evaluation {
 public:
  /// ||x - y||_F against rel * max(1, ||x||_F, ||y||_F) + abs.
  void equal(std::string name, const ComplexMatrix& x, const ComplexMatrix& y,
             const TolerancePolicy& pol);
  /// x <= y in the Loewner order; records lambda_min(y - x).
  void loewner(std::string name, const ComplexMatrix& x, const ComplexMatrix& y,
               const TolerancePolicy& pol);
  /// lhs <= rhs + slack.
  void scalar_leq(std::string name, double lhs, double rhs, double slack);
  /// Records a predicate's residual and folds in its margin.
  void require(std::string name, bool holds, double residual, double margin);
  /// Informational flag; does not affect ok().
  void flag(std::string name, bool value);

  bool ok() const noexcept { return ok_; }
  double excess() const noexcept { return excess_; }
  const std::vector<Residual>& residuals() const noexcept { return residuals_; }
  const std::vector<Flag>& flags() const noexcept { return flags_; }

 private:
  bool ok_ = true;
  double excess_ = -std::numeric_limits<double>::infinity();
  std::vector<Residual> residuals_;
  std::vector<Flag> flags_;
};

struct Arity {
  std::size_t min = 1;
  std::size_t max = 1;
  bool accepts(std::size_t count) const { return count >= min && count <= max; }
};

using SlotPredicate =
    std::function<void(std::span<const ComplexMatrix>, const TolerancePolicy&, Evaluation&)>;
using SlotSampler = std::function<std::vector<ComplexMatrix>(std::size_t, Rng&)>;

/// One checkable statement: hypothesis and conclusion over matrix slots,
/// plus the ensemble its instances are drawn from.
struct Claim {
  std::string id;
  std::string description;
  /// The statement in symbols, e.g. "AB=BA, A normal => |A||B| = |B||A|".
  std::string statement;
  Arity arity;
  EnsembleSpec ensemble;
  Expectation expect = Expectation::kAlwaysHolds;
  SlotPredicate hypothesis;
  SlotPredicate conclusion;
  /// Draws a hypothesis-satisfying tuple; empty for registry claims.
  SlotSampler sampler;
  /// Annotation shown in reports (e.g. the finite-dimension note for
  /// claims phrased with hyponormal operands).
  std::string note;
};

/// Every claim, theorem suite first, registry claims (CE-*) last.
std::span<const Claim> catalog();

/// Throws std::invalid_argument for unknown ids.
const Claim& find_claim(std::string_view id);

struct ClaimInstance {
  std::string claim_id;
  std::vector<ComplexMatrix> matrices;
  /// nullopt for registry or user-supplied instances.
  std::optional<Seed> seed;
};

struct ClaimResult {
  std::string claim_id;
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  Verdict verdict = Verdict::kHypothesisFail;
  /// Hypothesis residuals are prefixed "hyp:".
  std::vector<Residual> residuals;
  std::vector<Flag> flags;
  /// Worst conclusion overshoot; > 0 iff the conclusion failed.
  double excess = 0.0;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

/// Draws the tuple for (claim, n, seed). Registry claims cannot be drawn.
ClaimInstance draw_instance(const Claim& claim, std::size_t n, const Seed& seed);

/// Evaluates hypothesis and conclusion. Both sides are always evaluated so
/// that hypothesis failures still report the conclusion residuals.
/// Numerical failures (singular inverse, eigensolver non-convergence)
/// propagate as NumericalError / DomainError.
ClaimResult check_claim(const ClaimInstance& instance, const TolerancePolicy& pol = {});

/// Expected matrix value attached to a registry entry.
struct ExpectedValue {
  std::string name;
  ComplexMatrix value;
};

/// One of the five fixed counterexamples.
struct RegistryEntry {
  ClaimInstance instance;
  /// Flags check_claim must report (the hypotheses that were dropped).
  std::vector<Flag> expected_flags;
  /// Closed-form values of the quantities involved.
  std::vector<ExpectedValue> expected_values;
  /// Non-empty when a commonly displayed value disagrees with direct
  /// computation; the registry always stores the computed value.
  std::string discrepancy;
};

std::vector<RegistryEntry> registry();

/// Named quantities (|A|, |B|, |AB|, ...) computed for a registry entry.
std::vector<ExpectedValue> registry_values(const ClaimInstance& instance,
                                           const TolerancePolicy& pol = {});

struct RegistryOutcome {
  ClaimResult result;
  bool verdict_matches = false;
  bool flags_match = false;
  bool values_match = false;
  double worst_value_residual = 0.0;
  bool reproduced() const { return verdict_matches && flags_match && values_match; }
};

/// Checks one registry entry: the verdict must be VIOLATION, flags as
/// listed, and every expected value within value_tolerance (Frobenius).
RegistryOutcome reproduce(const RegistryEntry& entry, const TolerancePolicy& pol = {},
                          double value_tolerance = 1e-10);

/// Conclusion-only run against unconstrained general tuples.
struct ProbeOutcome {
  std::string claim_id;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::optional<Seed> first_violation;
};

ProbeOutcome null_probe(const Claim& claim, std::size_t n, std::size_t trials,
                        std::uint64_t master, const TolerancePolicy& pol = {});

}  // namespace opabs

#endif  // OPABS_CLAIMS_HPP_
