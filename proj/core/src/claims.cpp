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

#include "opabs/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opabs/calculus.hpp"
#include "opabs/predicates.hpp"

namespace opabs {

std::string to_string(Expectation e) {
  return e == Expectation::kAlwaysHolds ? "always_holds" : "registry_violation";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kViolation: return "VIOLATION";
    case Verdict::kHypothesisFail: return "HYPOTHESIS_FAIL";
  }
  return "UNKNOWN";
}

void Evaluation::equal(std::string name, const ComplexMatrix& x,
                       const ComplexMatrix& y, const TolerancePolicy& pol) {
  const double r = frobenius_norm(subtract(x, y));
  const double bound = pol.bound(std::max(frobenius_norm(x), frobenius_norm(y)));
  require(std::move(name), r <= bound, r, bound - r);
}

void Evaluation::loewner(std::string name, const ComplexMatrix& x,
                         const ComplexMatrix& y, const TolerancePolicy& pol) {
  const LoewnerVerdict v = loewner_leq(x, y, pol);
  require(std::move(name), v.holds, v.witness_lambda_min, v.margin);
}

void Evaluation::scalar_leq(std::string name, double lhs, double rhs, double slack) {
  const double gap = lhs - rhs;
  require(std::move(name), gap <= slack, gap, slack - gap);
}

void Evaluation::require(std::string name, bool holds, double residual, double margin) {
  ok_ = ok_ && holds;
  excess_ = std::max(excess_, -margin);
  residuals_.push_back({std::move(name), residual});
}

void Evaluation::flag(std::string name, bool value) {
  flags_.push_back({std::move(name), value});
}

const Claim& find_claim(std::string_view id) {
  for (const Claim& c : catalog()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown claim id: " + std::string(id));
}

ClaimInstance draw_instance(const Claim& claim, std::size_t n, const Seed& seed) {
  if (!claim.sampler) {
    throw std::invalid_argument("claim " + claim.id + " has no ensemble to draw from");
  }
  Rng rng(seed);
  return {claim.id, claim.sampler(n, rng), seed};
}

ClaimResult check_claim(const ClaimInstance& instance, const TolerancePolicy& pol) {
  const Claim& claim = find_claim(instance.claim_id);
  const auto& slots = instance.matrices;
  if (!claim.arity.accepts(slots.size())) {
    throw std::invalid_argument("claim " + claim.id + " expects " +
                                std::to_string(claim.arity.min) + ".." +
                                std::to_string(claim.arity.max) + " matrices, got " +
                                std::to_string(slots.size()));
  }
  for (const ComplexMatrix& m : slots) {
    if (m.dim() != slots.front().dim()) {
      throw DimensionMismatch("claim " + claim.id + ": slot dimensions differ");
    }
  }

  Evaluation hyp;
  claim.hypothesis(slots, pol, hyp);

  Evaluation concl;
  bool conclusion_defined = true;
  try {
    claim.conclusion(slots, pol, concl);
  } catch (const DomainError&) {
    // Outside the hypotheses a conclusion may not even be well-formed
    // (e.g. a square root of an indefinite product).
    if (hyp.ok()) throw;
    conclusion_defined = false;
  }

  ClaimResult r;
  r.claim_id = claim.id;
  r.hypothesis_ok = hyp.ok();
  r.conclusion_ok = conclusion_defined && concl.ok();
  for (const Residual& x : hyp.residuals()) r.residuals.push_back({"hyp:" + x.name, x.value});
  for (const Residual& x : concl.residuals()) r.residuals.push_back(x);
  r.flags = hyp.flags();
  r.flags.insert(r.flags.end(), concl.flags().begin(), concl.flags().end());
  if (!conclusion_defined) r.flags.push_back({"conclusion_undefined", true});
  r.excess = std::isfinite(concl.excess()) ? concl.excess() : 0.0;
  if (!conclusion_defined) r.excess = std::numeric_limits<double>::infinity();
  if (!r.hypothesis_ok) {
    r.verdict = Verdict::kHypothesisFail;
  } else {
    r.verdict = r.conclusion_ok ? Verdict::kPass : Verdict::kViolation;
  }
  return r;
}

namespace {

ComplexMatrix absm(const ComplexMatrix& x, const TolerancePolicy& pol) {
  return abs_value(x, pol).matrix();
}

ComplexMatrix diag2(double a, double b) {
  const std::array<double, 2> d{a, b};
  return ComplexMatrix::diagonal(std::span<const double>(d));
}

}  // namespace

std::vector<RegistryEntry> registry() {
  using M = ComplexMatrix;
  std::vector<RegistryEntry> out;
  const double r5 = std::sqrt(5.0);
  const double r2 = std::numbers::sqrt2;

  out.push_back(
      {{"CE-0", {M::from_rows({{1, 1}, {0, 1}}), M::from_rows({{0, 1}, {0, 0}})}, std::nullopt},
       {{"A normal", false}, {"B normal", false}},
       {{"AB", M::from_rows({{0, 1}, {0, 0}})},
        {"BA", M::from_rows({{0, 1}, {0, 0}})},
        {"|A|", M::from_rows({{2.0 / r5, 1.0 / r5}, {1.0 / r5, 3.0 / r5}})},
        {"|B|", diag2(0, 1)}},
       ""});
  out.push_back(
      {{"CE-1", {diag2(2, -1), M::from_rows({{0, 1}, {1, 0}})}, std::nullopt},
       {{"AB normal", false}},
       {{"AB", M::from_rows({{0, 2}, {-1, 0}})},
        {"|AB|", diag2(1, 2)},
        {"|A|", diag2(2, 1)},
        {"|B|", diag2(1, 1)},
        {"|A||B|", diag2(2, 1)}},
       ""});
  out.push_back(
      {{"CE-2", {M::from_rows({{0, 1}, {2, 0}}), M::from_rows({{0, 2}, {1, 0}})}, std::nullopt},
       {{"A normal", false}, {"B normal", false}, {"AB self-adjoint", true}},
       {{"AB", diag2(1, 4)},
        {"|A|", diag2(2, 1)},
        {"|B|", diag2(1, 2)},
        {"|AB|", diag2(1, 4)},
        {"|A||B|", diag2(2, 2)}},
       "AB = diag(1,4) is already positive, so |AB| = diag(1,4); the value "
       "|AB| = diag(1,2) seen in print does not match direct computation (the "
       "inequality |AB| != |A||B| = diag(2,2) holds either way)"});
  out.push_back(
      {{"CE-3", {M::from_rows({{0, 2}, {1, 0}})}, std::nullopt},
       {{"A normal", false}},
       {{"A^2", diag2(2, 2)}, {"|A^2|", diag2(2, 2)}, {"|A|", diag2(1, 2)}, {"|A|^2", diag2(1, 4)}},
       "A^2 = 2I gives |A^2| = 2I and A*A = diag(1,4) gives |A|^2 = diag(1,4); the "
       "variant |A^2| = diag(sqrt2, sqrt2), |A|^2 = diag(2,1) seen in print does not "
       "match direct computation (the inequality |A^2| != |A|^2 holds either way)"});
  out.push_back(
      {{"CE-4", {M::from_rows({{-1, 1}, {1, -1}}), diag2(2, 0)}, std::nullopt},
       {{"AB=BA", false}},
       {{"|A|", M::from_rows({{1, -1}, {-1, 1}})},
        {"|B|", diag2(2, 0)},
        {"|A+B|", diag2(r2, r2)},
        {"|A|+|B|", M::from_rows({{3, -1}, {-1, 1}})}},
       ""});
  return out;
}

std::vector<ExpectedValue> registry_values(const ClaimInstance& instance,
                                           const TolerancePolicy& pol) {
  const auto& m = instance.matrices;
  const std::string& id = instance.claim_id;
  if (id == "CE-0") {
    return {{"AB", m[0] * m[1]}, {"BA", m[1] * m[0]},
            {"|A|", absm(m[0], pol)}, {"|B|", absm(m[1], pol)}};
  }
  if (id == "CE-1" || id == "CE-2") {
    const ComplexMatrix ab = m[0] * m[1];
    std::vector<ExpectedValue> v{{"AB", ab}, {"|AB|", absm(ab, pol)},
                                 {"|A|", absm(m[0], pol)}, {"|B|", absm(m[1], pol)},
                                 {"|A||B|", absm(m[0], pol) * absm(m[1], pol)}};
    return v;
  }
  if (id == "CE-3") {
    const ComplexMatrix sq = m[0] * m[0];
    const ComplexMatrix a = absm(m[0], pol);
    return {{"A^2", sq}, {"|A^2|", absm(sq, pol)}, {"|A|", a}, {"|A|^2", a * a}};
  }
  if (id == "CE-4") {
    return {{"|A|", absm(m[0], pol)}, {"|B|", absm(m[1], pol)},
            {"|A+B|", absm(m[0] + m[1], pol)},
            {"|A|+|B|", absm(m[0], pol) + absm(m[1], pol)}};
  }
  throw std::invalid_argument("no registry values for claim " + id);
}

RegistryOutcome reproduce(const RegistryEntry& entry, const TolerancePolicy& pol,
                          double value_tolerance) {
  RegistryOutcome out;
  out.result = check_claim(entry.instance, pol);
  out.verdict_matches = out.result.verdict == Verdict::kViolation;

  out.flags_match = true;
  for (const Flag& expected : entry.expected_flags) {
    const auto it = std::find_if(out.result.flags.begin(), out.result.flags.end(),
                                 [&](const Flag& f) { return f.name == expected.name; });
    if (it == out.result.flags.end() || it->value != expected.value) out.flags_match = false;
  }

  const std::vector<ExpectedValue> computed = registry_values(entry.instance, pol);
  out.values_match = true;
  for (const ExpectedValue& expected : entry.expected_values) {
    const auto it = std::find_if(computed.begin(), computed.end(),
                                 [&](const ExpectedValue& v) { return v.name == expected.name; });
    if (it == computed.end()) {
      out.values_match = false;
      continue;
    }
    const double r = frobenius_norm(subtract(it->value, expected.value));
    out.worst_value_residual = std::max(out.worst_value_residual, r);
    if (!(r <= value_tolerance)) out.values_match = false;
  }
  return out;
}

ProbeOutcome null_probe(const Claim& claim, std::size_t n, std::size_t trials,
                        std::uint64_t master, const TolerancePolicy& pol) {
  ProbeOutcome out;
  out.claim_id = claim.id;
  out.trials = trials;
  const std::string tag = "probe:" + claim.id + ":" + std::to_string(n);
  for (std::size_t t = 0; t < trials; ++t) {
    const Seed seed{master, tag, t};
    Rng rng(seed);
    std::vector<ComplexMatrix> slots;
    for (std::size_t i = 0; i < claim.arity.min; ++i) slots.push_back(gen_general(n, rng));
    Evaluation concl;
    try {
      claim.conclusion(slots, pol, concl);
    } catch (const std::exception&) {
      ++out.errors;
      continue;
    }
    if (!concl.ok()) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = seed;
    }
  }
  return out;
}

}  // namespace opabs
