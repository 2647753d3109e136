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

// The claim catalog. Each entry pairs a hypothesis with a conclusion over
// matrix slots; samplers build hypothesis-satisfying tuples directly.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "opabs/calculus.hpp"
#include "opabs/claims.hpp"
#include "opabs/predicates.hpp"

namespace opabs {
namespace {

using Slots = std::span<const ComplexMatrix>;
using Pol = TolerancePolicy;

constexpr char kCollapseNote[] =
    "hyponormal slot instantiated with normal matrices: in finite dimension a "
    "positive self-commutator has zero trace and therefore vanishes";

ComplexMatrix absm(const ComplexMatrix& x, const Pol& pol) {
  return abs_value(x, pol).matrix();
}

ComplexMatrix sqrtm(const ComplexMatrix& x, const Pol& pol) {
  return psd_sqrt(PsdMatrix::from(x, pol)).matrix();
}

ComplexMatrix pos_power(const ComplexMatrix& x, int m) {
  ComplexMatrix out = ComplexMatrix::identity(x.dim());
  for (int i = 0; i < m; ++i) out = out * x;
  return out;
}

double opnorm_scale(Slots s) {
  double m = 0.0;
  for (const ComplexMatrix& x : s) m = std::max(m, operator_norm(x));
  return m;
}

void need(Evaluation& ev, const std::string& name, const PredicateResult& p) {
  ev.require(name, p.holds, p.residual, p.margin);
}

void need_normal(Evaluation& ev, const std::string& name, const ComplexMatrix& x,
                 const Pol& pol) {
  need(ev, name + " normal", is_normal(x, pol));
}

void need_commute(Evaluation& ev, const std::string& name, const ComplexMatrix& x,
                  const ComplexMatrix& y, const Pol& pol) {
  need(ev, name, commutes(x, y, pol));
}

void need_pairwise_commute(Evaluation& ev, Slots s, const Pol& pol) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      need_commute(ev, "A" + std::to_string(i + 1) + "A" + std::to_string(j + 1) + " commute",
                   s[i], s[j], pol);
    }
  }
}

// Invertibility as accepted by inverse(): condition number <= 1e8.
void need_invertible(Evaluation& ev, const std::string& name, const ComplexMatrix& x) {
  const double kappa = condition_number(x);
  ev.require(name + " invertible (cond)", kappa <= kMaxConditionNumber, kappa,
             kMaxConditionNumber - kappa);
}

// A normal, B hyponormal, AB = BA.
void normal_hyponormal_commuting(Slots s, const Pol& pol, Evaluation& ev) {
  need_normal(ev, "A", s[0], pol);
  need(ev, "B hyponormal", is_hyponormal(s[1], pol));
  need_commute(ev, "AB=BA", s[0], s[1], pol);
}

void normal_commuting(Slots s, const Pol& pol, Evaluation& ev) {
  need_normal(ev, "A", s[0], pol);
  need_commute(ev, "AB=BA", s[0], s[1], pol);
}

void both_normal_commuting(Slots s, const Pol& pol, Evaluation& ev) {
  need_normal(ev, "A", s[0], pol);
  need_normal(ev, "B", s[1], pol);
  need_commute(ev, "AB=BA", s[0], s[1], pol);
}

void self_adjoint_pair_normal_product(Slots s, const Pol& pol, Evaluation& ev) {
  need(ev, "A self-adjoint", is_self_adjoint(s[0], pol));
  need(ev, "B self-adjoint", is_self_adjoint(s[1], pol));
  need_normal(ev, "AB", s[0] * s[1], pol);
}

std::vector<ComplexMatrix> family(std::size_t n, std::size_t k, Rng& rng,
                                  DiagonalLaw law = DiagonalLaw::kDisk) {
  return gen_commuting_normal_family(n, k, rng, law);
}

// Normal A with a commuting partner that is normal or not with equal odds.
std::vector<ComplexMatrix> normal_with_commuting_partner(std::size_t n, Rng& rng,
                                                         DiagonalLaw law) {
  if (rng.coin()) return family(n, 2, rng, law);
  return gen_commuting_family_with_general(n, 2, 1, rng, law);
}

std::vector<ComplexMatrix> as_vector(std::pair<ComplexMatrix, ComplexMatrix> p) {
  return {std::move(p.first), std::move(p.second)};
}

std::vector<ComplexMatrix> sa_pair_mixture(Rng& rng, bool favor_positive) {
  const std::size_t pick = rng.index(4);
  SaPairKind kind = SaPairKind::kAnticommuting;
  if (pick == 2) kind = SaPairKind::kCommutingIndefinite;
  if (pick == 3 || (favor_positive && pick == 1)) kind = SaPairKind::kCommutingPositive;
  return as_vector(gen_sa_pair_normal_product(rng, kind));
}

EnsembleSpec spec(EnsembleKind kind, std::size_t k = 1, DiagonalLaw law = DiagonalLaw::kDisk) {
  EnsembleSpec s;
  s.kind = kind;
  s.k = k;
  s.law = law;
  return s;
}

SlotSampler from_spec(EnsembleSpec s) {
  return [s](std::size_t n, Rng& rng) { return sample(s, n, rng); };
}

std::vector<Claim> build_catalog() {
  std::vector<Claim> c;
  const Arity two{2, 2};
  const Arity one{1, 1};
  const Arity three{3, 3};

  // ---- square roots of sums and products ------------------------------
  c.push_back({"L-SQRT-PROD", "product of commuting positive operators is positive",
               "AB=BA, A,B>=0 => AB>=0", two,
               spec(EnsembleKind::kCommutingPositivePair), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "A>=0", is_positive(s[0], pol));
                 need(ev, "B>=0", is_positive(s[1], pol));
                 need_commute(ev, "AB=BA", s[0], s[1], pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "AB>=0", is_positive(s[0] * s[1], pol));
               },
               from_spec(spec(EnsembleKind::kCommutingPositivePair)), ""});

  c.push_back({"L-SQRT-FACTOR", "square root factors over commuting positive operators",
               "AB=BA, A,B>=0 => sqrt(AB) = sqrt(A) sqrt(B)", two,
               spec(EnsembleKind::kCommutingPositivePair), Expectation::kAlwaysHolds,
               c.back().hypothesis,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix ab = s[0] * s[1];
                 const PredicateResult pos = is_positive(ab, pol);
                 if (!pos) {
                   need(ev, "AB>=0", pos);
                   return;
                 }
                 ev.equal("sqrt(AB) - sqrt(A)sqrt(B)", sqrtm(hermitian_part(ab), pol),
                          sqrtm(s[0], pol) * sqrtm(s[1], pol), pol);
               },
               from_spec(spec(EnsembleKind::kCommutingPositivePair)), ""});

  c.push_back({"L-SQRT-SUM", "square root is subadditive on commuting positive operators",
               "AB=BA, A,B>=0 => sqrt(A+B) <= sqrt(A) + sqrt(B)", two,
               spec(EnsembleKind::kCommutingPositivePair), Expectation::kAlwaysHolds,
               c.back().hypothesis,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(sqrtA+sqrtB-sqrt(A+B))", sqrtm(s[0] + s[1], pol),
                            sqrtm(s[0], pol) + sqrtm(s[1], pol), pol);
               },
               from_spec(spec(EnsembleKind::kCommutingPositivePair)), ""});

  // ---- operator monotonicity -------------------------------------------
  {
    EnsembleSpec ordered = spec(EnsembleKind::kOrderedPsdPair);
    auto ordered_hyp = [](Slots s, const Pol& pol, Evaluation& ev) {
      need(ev, "B>=0", is_positive(s[1], pol));
      ev.loewner("lmin(A-B)", s[1], s[0], pol);
    };
    c.push_back({"T-LH", "fractional powers preserve the Loewner order",
                 "A>=B>=0 => A^a >= B^a for a in {0.25, 0.5, 0.75}", two, ordered,
                 Expectation::kAlwaysHolds, ordered_hyp,
                 [](Slots s, const Pol& pol, Evaluation& ev) {
                   const PsdMatrix a = PsdMatrix::from(s[0], pol);
                   const PsdMatrix b = PsdMatrix::from(s[1], pol);
                   for (double alpha : {0.25, 0.5, 0.75}) {
                     ev.loewner("lmin(A^a-B^a) a=" + std::to_string(alpha).substr(0, 4),
                                psd_power(b, alpha).matrix(), psd_power(a, alpha).matrix(),
                                pol);
                   }
                 },
                 from_spec(ordered), ""});

    EnsembleSpec ordered_comm = ordered;
    ordered_comm.commuting = true;
    c.push_back({"R-SQMONO", "squaring preserves order on commuting positive pairs",
                 "A>=B>=0, AB=BA => A^2 >= B^2", two, ordered_comm,
                 Expectation::kAlwaysHolds,
                 [ordered_hyp](Slots s, const Pol& pol, Evaluation& ev) {
                   ordered_hyp(s, pol, ev);
                   need_commute(ev, "AB=BA", s[0], s[1], pol);
                 },
                 [](Slots s, const Pol& pol, Evaluation& ev) {
                   ev.loewner("lmin(A^2-B^2)", s[1] * s[1], s[0] * s[0], pol);
                 },
                 from_spec(ordered_comm), ""});
  }

  // ---- Fuglede equivalences --------------------------------------------
  c.push_back({"L-FUG", "commutation with a normal operator passes to adjoints",
               "A normal => (AB=BA <=> A*B=BA* <=> AB*=B*A <=> A*B*=B*A*)", two,
               spec(EnsembleKind::kCommutingFamilyWithGeneral, 2), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) { need_normal(ev, "A", s[0], pol); },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix a_adj = adjoint(s[0]);
                 const ComplexMatrix b_adj = adjoint(s[1]);
                 const std::array<PredicateResult, 4> cond{
                     commutes(s[0], s[1], pol), commutes(a_adj, s[1], pol),
                     commutes(s[0], b_adj, pol), commutes(a_adj, b_adj, pol)};
                 const std::array<const char*, 4> names{"AB=BA", "A*B=BA*", "AB*=B*A",
                                                        "A*B*=B*A*"};
                 double closest = std::numeric_limits<double>::infinity();
                 bool agree = true;
                 for (std::size_t i = 0; i < cond.size(); ++i) {
                   ev.flag(names[i], cond[i].holds);
                   closest = std::min(closest, std::abs(cond[i].margin));
                   agree = agree && cond[i].holds == cond[0].holds;
                 }
                 for (std::size_t i = 0; i < cond.size(); ++i) {
                   ev.require(std::string("||[.,.]|| ") + names[i], agree, cond[i].residual,
                              agree ? closest : -closest);
                 }
               },
               [](std::size_t n, Rng& rng) {
                 if (rng.coin()) return normal_with_commuting_partner(n, rng, DiagonalLaw::kDisk);
                 std::vector<ComplexMatrix> out = family(n, 1, rng);
                 out.push_back(gen_general(n, rng));
                 return out;
               },
               ""});

  // ---- absolute value and products -------------------------------------
  c.push_back({"C-ABSCOMM", "a normal operator's modulus commutes with a commuting partner's",
               "AB=BA, A normal => |A||B| = |B||A|", two,
               spec(EnsembleKind::kCommutingFamilyWithGeneral, 2), Expectation::kAlwaysHolds,
               normal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix a = absm(s[0], pol);
                 const ComplexMatrix b = absm(s[1], pol);
                 ev.equal("|A||B|-|B||A|", a * b, b * a, pol);
               },
               [](std::size_t n, Rng& rng) {
                 return normal_with_commuting_partner(n, rng, DiagonalLaw::kDisk);
               },
               ""});

  {
    EnsembleSpec sa = spec(EnsembleKind::kSaPairNormalProduct);
    sa.fixed_dim = 2;
    c.push_back({"C-PRODSA", "modulus is multiplicative on self-adjoint pairs with normal product",
                 "A,B self-adjoint, AB normal => |AB| = |A||B|", two, sa,
                 Expectation::kAlwaysHolds, self_adjoint_pair_normal_product,
                 [](Slots s, const Pol& pol, Evaluation& ev) {
                   ev.equal("|AB|-|A||B|", absm(s[0] * s[1], pol),
                            absm(s[0], pol) * absm(s[1], pol), pol);
                 },
                 [](std::size_t, Rng& rng) { return sa_pair_mixture(rng, false); }, ""});

    c.push_back({"C-PRODSA-COR", "|A||B| is self-adjoint; positive factors give a positive product",
                 "A,B self-adjoint, AB normal => |A||B| = |B||A|; if also A,B>=0 then AB>=0",
                 two, sa, Expectation::kAlwaysHolds, self_adjoint_pair_normal_product,
                 [](Slots s, const Pol& pol, Evaluation& ev) {
                   const ComplexMatrix a = absm(s[0], pol);
                   const ComplexMatrix b = absm(s[1], pol);
                   ev.equal("|A||B|-|B||A|", a * b, b * a, pol);
                   const bool positive_pair = is_positive(s[0], pol).holds &&
                                              is_positive(s[1], pol).holds;
                   ev.flag("A,B>=0", positive_pair);
                   if (positive_pair) need(ev, "AB>=0", is_positive(s[0] * s[1], pol));
                 },
                 [](std::size_t, Rng& rng) { return sa_pair_mixture(rng, true); }, ""});
  }

  c.push_back({"C-PRODNORM", "modulus is multiplicative when one commuting factor is normal",
               "AB=BA, A normal => |AB| = |A||B|", two,
               spec(EnsembleKind::kCommutingFamilyWithGeneral, 2), Expectation::kAlwaysHolds,
               normal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.equal("|AB|-|A||B|", absm(s[0] * s[1], pol),
                          absm(s[0], pol) * absm(s[1], pol), pol);
               },
               [](std::size_t n, Rng& rng) {
                 return normal_with_commuting_partner(n, rng, DiagonalLaw::kDisk);
               },
               ""});

  c.push_back({"C-EIGHT", "all eight products of commuting normals share one modulus",
               "AB=BA, A,B normal => |AB|=|A*B|=|AB*|=|A*B*|=|B*A*|=|B*A|=|BA*|=|BA|", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               both_normal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix& a = s[0];
                 const ComplexMatrix& b = s[1];
                 const ComplexMatrix as = adjoint(a);
                 const ComplexMatrix bs = adjoint(b);
                 const ComplexMatrix ref = absm(a * b, pol);
                 const std::array<std::pair<const char*, ComplexMatrix>, 7> others{{
                     {"|A*B|", as * b},   {"|AB*|", a * bs},  {"|A*B*|", as * bs},
                     {"|B*A*|", bs * as}, {"|B*A|", bs * a},  {"|BA*|", b * as},
                     {"|BA|", b * a}}};
                 for (const auto& [name, prod] : others) {
                   ev.equal(std::string("|AB|-") + name, ref, absm(prod, pol), pol);
                 }
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), ""});

  c.push_back({"C-INV1", "modulus is multiplicative against an inverted commuting factor",
               "AB=BA, A normal, B invertible => |AB^-1| = |A||B^-1|", two,
               spec(EnsembleKind::kCommutingFamilyWithGeneral, 2, DiagonalLaw::kAnnulus),
               Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 normal_commuting(s, pol, ev);
                 need_invertible(ev, "B", s[1]);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix b_inv = inverse(s[1]);
                 ev.equal("|AB^-1|-|A||B^-1|", absm(s[0] * b_inv, pol),
                          absm(s[0], pol) * absm(b_inv, pol), pol);
               },
               [](std::size_t n, Rng& rng) {
                 return normal_with_commuting_partner(n, rng, DiagonalLaw::kAnnulus);
               },
               ""});

  c.push_back({"C-INV2", "modulus of the inverse of a normal operator",
               "A normal, invertible => |A^-1| = |A|^-1", one,
               spec(EnsembleKind::kNormal, 1, DiagonalLaw::kAnnulus), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_normal(ev, "A", s[0], pol);
                 need_invertible(ev, "A", s[0]);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const std::size_t n = s[0].dim();
                 const ComplexMatrix prod = absm(inverse(s[0]), pol) * absm(s[0], pol);
                 const double r = frobenius_norm(subtract(prod, ComplexMatrix::identity(n)));
                 const double bound =
                     pol.bound(condition_number(s[0]) * std::sqrt(static_cast<double>(n)));
                 ev.require("|A^-1||A|-I", r <= bound, r, bound - r);
               },
               from_spec(spec(EnsembleKind::kNormal, 1, DiagonalLaw::kAnnulus)), ""});

  c.push_back({"C-NFOLD", "modulus of an n-fold commuting product with at most one non-normal factor",
               "pairwise commuting, all but one normal => |A1...Ak| = |A1|...|Ak| (k in {3,4})",
               Arity{3, 4}, spec(EnsembleKind::kCommutingFamilyWithGeneral, 4),
               Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_pairwise_commute(ev, s, pol);
                 std::size_t non_normal = 0;
                 for (const ComplexMatrix& x : s) non_normal += is_normal(x, pol).holds ? 0 : 1;
                 ev.require("non-normal factors", non_normal <= 1,
                            static_cast<double>(non_normal), 1.0 - static_cast<double>(non_normal));
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ComplexMatrix prod = s[0];
                 ComplexMatrix abs_prod = absm(s[0], pol);
                 for (std::size_t i = 1; i < s.size(); ++i) {
                   prod = prod * s[i];
                   abs_prod = abs_prod * absm(s[i], pol);
                 }
                 ev.equal("|prod|-prod|.|", absm(prod, pol), abs_prod, pol);
               },
               [](std::size_t n, Rng& rng) {
                 const std::size_t k = rng.coin() ? 3 : 4;
                 const std::size_t position = rng.index(k);
                 return gen_commuting_family_with_general(n, k, position, rng);
               },
               ""});

  c.push_back({"C-POWZ", "modulus commutes with integer powers of a normal operator",
               "A normal, invertible => |A^m| = |A|^m for m in -3..3", one,
               spec(EnsembleKind::kNormal, 1, DiagonalLaw::kAnnulus), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_normal(ev, "A", s[0], pol);
                 need_invertible(ev, "A", s[0]);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix a = s[0];
                 const ComplexMatrix abs_a = absm(a, pol);
                 const ComplexMatrix a_inv = inverse(a);
                 const ComplexMatrix abs_a_inv = inverse(abs_a);
                 for (int m = -3; m <= 3; ++m) {
                   const ComplexMatrix lhs = absm(m >= 0 ? pos_power(a, m) : pos_power(a_inv, -m), pol);
                   const ComplexMatrix rhs = m >= 0 ? pos_power(abs_a, m) : pos_power(abs_a_inv, -m);
                   ev.equal("|A^m|-|A|^m m=" + std::to_string(m), lhs, rhs, pol);
                 }
               },
               from_spec(spec(EnsembleKind::kNormal, 1, DiagonalLaw::kAnnulus)), ""});

  // ---- sums ---------------------------------------------------------------
  c.push_back({"L-ANTI", "square of an anti-symmetric operator is negative",
               "A* = -A => A^2 <= 0", one, spec(EnsembleKind::kAntiSymmetric),
               Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "A anti-symmetric", is_anti_symmetric(s[0], pol));
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(-A^2)", s[0] * s[0],
                            ComplexMatrix::zero(s[0].dim()), pol);
               },
               from_spec(spec(EnsembleKind::kAntiSymmetric)), ""});

  c.push_back({"L-REPART", "real part is dominated by the modulus for hyponormal operators",
               "T hyponormal => Re T <= |T|", one, spec(EnsembleKind::kNormal),
               Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "T hyponormal", is_hyponormal(s[0], pol));
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|T|-ReT)", hermitian_part(s[0]), absm(s[0], pol), pol);
               },
               from_spec(spec(EnsembleKind::kNormal)), kCollapseNote});

  c.push_back({"L-HYPROD", "A*B is hyponormal for commuting normal A and hyponormal B",
               "A normal, B hyponormal, AB=BA => A*B hyponormal", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               normal_hyponormal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "A*B hyponormal", is_hyponormal(adjoint(s[0]) * s[1], pol));
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), kCollapseNote});

  c.push_back({"C-TRI", "triangle inequality for the modulus",
               "A normal, B hyponormal, AB=BA => |A+B| <= |A|+|B|", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               normal_hyponormal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A|+|B|-|A+B|)", absm(s[0] + s[1], pol),
                            absm(s[0], pol) + absm(s[1], pol), pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), kCollapseNote});

  c.push_back({"C-REIM", "modulus is dominated by the moduli of real and imaginary parts",
               "T normal => |T| <= |Re T| + |Im T|", one, spec(EnsembleKind::kNormal),
               Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) { need_normal(ev, "T", s[0], pol); },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|ReT|+|ImT|-|T|)", absm(s[0], pol),
                            absm(hermitian_part(s[0]), pol) + absm(imaginary_part(s[0]), pol),
                            pol);
               },
               from_spec(spec(EnsembleKind::kNormal)), ""});

  c.push_back({"C-TRIMINUS", "triangle inequality for differences",
               "A normal, B hyponormal, AB=BA => |A-B| <= |A|+|B|", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               normal_hyponormal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A|+|B|-|A-B|)", absm(s[0] - s[1], pol),
                            absm(s[0], pol) + absm(s[1], pol), pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), kCollapseNote});

  c.push_back({"C-TRIN", "triangle inequality for a commuting family of three",
               "pairwise commuting, all normal but one hyponormal => |A1+A2+A3| <= |A1|+|A2|+|A3|",
               three, spec(EnsembleKind::kCommutingNormalFamily, 3), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_pairwise_commute(ev, s, pol);
                 std::size_t normal = 0;
                 bool all_hyponormal = true;
                 for (const ComplexMatrix& x : s) {
                   normal += is_normal(x, pol).holds ? 1 : 0;
                   all_hyponormal = all_hyponormal && is_hyponormal(x, pol).holds;
                 }
                 ev.require("normal members", normal + 1 >= s.size() && all_hyponormal,
                            static_cast<double>(normal),
                            static_cast<double>(normal + 1) - static_cast<double>(s.size()));
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ComplexMatrix sum = s[0];
                 ComplexMatrix abs_sum = absm(s[0], pol);
                 for (std::size_t i = 1; i < s.size(); ++i) {
                   sum = sum + s[i];
                   abs_sum = abs_sum + absm(s[i], pol);
                 }
                 ev.loewner("lmin(sum|Ai|-|sum Ai|)", absm(sum, pol), abs_sum, pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 3)), kCollapseNote});

  c.push_back({"C-SUMNORM", "sum of pairwise commuting normals is normal",
               "pairwise commuting normal A1,A2,A3 => A1+A2+A3 normal", three,
               spec(EnsembleKind::kCommutingNormalFamily, 3), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_pairwise_commute(ev, s, pol);
                 for (std::size_t i = 0; i < s.size(); ++i) {
                   need_normal(ev, "A" + std::to_string(i + 1), s[i], pol);
                 }
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need_normal(ev, "sum", s[0] + s[1] + s[2], pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 3)), ""});

  // Norm inequalities get additive slack tol * max(1, ||A||, ||B||).
  c.push_back({"C-NORMDIFF+", "norm of the modulus difference is bounded by the norm of the sum",
               "AB=BA, A,B normal => || |A|-|B| || <= ||A+B||", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               both_normal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.scalar_leq("|| |A|-|B| || - ||A+B||",
                               operator_norm(absm(s[0], pol) - absm(s[1], pol)),
                               operator_norm(s[0] + s[1]), pol.bound(opnorm_scale(s)));
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), ""});

  c.push_back({"C-NORMDIFF-", "norm of the modulus difference is bounded by the norm of the difference",
               "AB=BA, A,B normal => || |A|-|B| || <= ||A-B||", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               both_normal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.scalar_leq("|| |A|-|B| || - ||A-B||",
                               operator_norm(absm(s[0], pol) - absm(s[1], pol)),
                               operator_norm(s[0] - s[1]), pol.bound(opnorm_scale(s)));
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), ""});

  c.push_back({"L-SANDWICH", "an order-sandwiched self-adjoint operator has smaller norm",
               "S>=0, T self-adjoint, -S <= T <= S => ||T|| <= ||S||", two,
               spec(EnsembleKind::kSandwichPair), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "S>=0", is_positive(s[0], pol));
                 need(ev, "T self-adjoint", is_self_adjoint(s[1], pol));
                 ev.loewner("lmin(T+S)", -s[0], s[1], pol);
                 ev.loewner("lmin(S-T)", s[1], s[0], pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.scalar_leq("||T||-||S||", operator_norm(s[1]), operator_norm(s[0]),
                               pol.bound(opnorm_scale(s)));
               },
               from_spec(spec(EnsembleKind::kSandwichPair)), ""});

  c.push_back({"C-ABSDIFF-", "modulus difference is dominated by the modulus of the difference",
               "A normal, B hyponormal, AB=BA => ||A|-|B|| <= |A-B|", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               normal_hyponormal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A-B|-||A|-|B||)",
                            absm(absm(s[0], pol) - absm(s[1], pol), pol), absm(s[0] - s[1], pol),
                            pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), kCollapseNote});

  c.push_back({"C-ABSDIFF+", "modulus difference is dominated by the modulus of the sum",
               "A normal, B hyponormal, AB=BA => ||A|-|B|| <= |A+B|", two,
               spec(EnsembleKind::kCommutingNormalFamily, 2), Expectation::kAlwaysHolds,
               normal_hyponormal_commuting,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A+B|-||A|-|B||)",
                            absm(absm(s[0], pol) - absm(s[1], pol), pol), absm(s[0] + s[1], pol),
                            pol);
               },
               from_spec(spec(EnsembleKind::kCommutingNormalFamily, 2)), kCollapseNote});

  c.push_back({"C-NEGCROSS", "triangle inequality under a non-positive cross term",
               "AB=BA, A normal, A*B+B*A <= 0 => |A+B| <= |A|+|B|", two,
               spec(EnsembleKind::kNegativeCrossPair), Expectation::kAlwaysHolds,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 normal_commuting(s, pol, ev);
                 const ComplexMatrix cross = adjoint(s[0]) * s[1] + adjoint(s[1]) * s[0];
                 ev.loewner("lmin(-(A*B+B*A))", cross, ComplexMatrix::zero(cross.dim()), pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A|+|B|-|A+B|)", absm(s[0] + s[1], pol),
                            absm(s[0], pol) + absm(s[1], pol), pol);
               },
               from_spec(spec(EnsembleKind::kNegativeCrossPair)), ""});

  // ---- counterexample registry ------------------------------------------
  EnsembleSpec reg = spec(EnsembleKind::kRegistry);
  reg.fixed_dim = 2;
  auto flag_normal = [](Evaluation& ev, const char* name, const ComplexMatrix& x,
                        const Pol& pol) { ev.flag(name, is_normal(x, pol).holds); };

  c.push_back({"CE-0", "commuting pair whose moduli do not commute",
               "AB=BA but |A||B| != |B||A| (A, B not normal)", two, reg,
               Expectation::kRegistryViolation,
               [flag_normal](Slots s, const Pol& pol, Evaluation& ev) {
                 need_commute(ev, "AB=BA", s[0], s[1], pol);
                 flag_normal(ev, "A normal", s[0], pol);
                 flag_normal(ev, "B normal", s[1], pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix a = absm(s[0], pol);
                 const ComplexMatrix b = absm(s[1], pol);
                 ev.equal("|A||B|-|B||A|", a * b, b * a, pol);
               },
               {}, ""});

  c.push_back({"CE-1", "self-adjoint pair with non-normal product",
               "A,B self-adjoint, AB not normal: |AB| != |A||B|", two, reg,
               Expectation::kRegistryViolation,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "A self-adjoint", is_self_adjoint(s[0], pol));
                 need(ev, "B self-adjoint", is_self_adjoint(s[1], pol));
                 ev.flag("AB normal", is_normal(s[0] * s[1], pol).holds);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.equal("|AB|-|A||B|", absm(s[0] * s[1], pol),
                          absm(s[0], pol) * absm(s[1], pol), pol);
               },
               {}, ""});

  c.push_back({"CE-2", "non-normal pair with self-adjoint product",
               "A,B not normal, AB self-adjoint: |AB| != |A||B|", two, reg,
               Expectation::kRegistryViolation,
               [flag_normal](Slots s, const Pol& pol, Evaluation& ev) {
                 need_normal(ev, "AB", s[0] * s[1], pol);
                 ev.flag("AB self-adjoint", is_self_adjoint(s[0] * s[1], pol).holds);
                 flag_normal(ev, "A normal", s[0], pol);
                 flag_normal(ev, "B normal", s[1], pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.equal("|AB|-|A||B|", absm(s[0] * s[1], pol),
                          absm(s[0], pol) * absm(s[1], pol), pol);
               },
               {}, ""});

  c.push_back({"CE-3", "non-normal matrix whose square's modulus is not the squared modulus",
               "A not normal: |A^2| != |A|^2", one, reg, Expectation::kRegistryViolation,
               [flag_normal](Slots s, const Pol& pol, Evaluation& ev) {
                 flag_normal(ev, "A normal", s[0], pol);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 const ComplexMatrix a = absm(s[0], pol);
                 ev.equal("|A^2|-|A|^2", absm(s[0] * s[0], pol), a * a, pol);
               },
               {}, ""});

  c.push_back({"CE-4", "non-commuting self-adjoint pair breaking the triangle inequality",
               "A,B self-adjoint, AB != BA: |A+B| <= |A|+|B| fails", two, reg,
               Expectation::kRegistryViolation,
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 need(ev, "A self-adjoint", is_self_adjoint(s[0], pol));
                 need(ev, "B self-adjoint", is_self_adjoint(s[1], pol));
                 ev.flag("AB=BA", commutes(s[0], s[1], pol).holds);
               },
               [](Slots s, const Pol& pol, Evaluation& ev) {
                 ev.loewner("lmin(|A|+|B|-|A+B|)", absm(s[0] + s[1], pol),
                            absm(s[0], pol) + absm(s[1], pol), pol);
               },
               {}, ""});

  return c;
}

}  // namespace

std::span<const Claim> catalog() {
  static const std::vector<Claim> claims = build_catalog();
  return claims;
}

}  // namespace opabs
