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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opabs/matrix_json.hpp"

namespace opabs::tools {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

std::vector<std::string> select_claims(const std::string& selection) {
  std::vector<std::string> ids;
  const bool all = selection == "all";
  if (all || selection == "theorems" || selection == "registry") {
    for (const Claim& c : catalog()) {
      const bool reg = c.expect == Expectation::kRegistryViolation;
      if (all || (selection == "registry") == reg) ids.push_back(c.id);
    }
    return ids;
  }
  for (const std::string& id : split(selection, ',')) {
    try {
      find_claim(id);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown claim id '" + id + "' (see --list)");
    }
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json to_json(const TrialRecord& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["dim"] = r.dim;
  j["verdict"] = to_string(r.verdict);
  ordered_json res = ordered_json::object();
  for (const Residual& x : r.residuals) res[x.name] = finite_or_null(x.value);
  j["residuals"] = std::move(res);
  if (!r.flags.empty()) {
    ordered_json flags = ordered_json::object();
    for (const Flag& f : r.flags) flags[f.name] = f.value;
    j["flags"] = std::move(flags);
  }
  j["excess"] = finite_or_null(r.excess);
  return j;
}

ordered_json to_json(const ClaimSummary& s) {
  ordered_json j;
  j["id"] = s.id;
  j["expect"] = to_string(s.expect);
  j["dims"] = s.dims;
  j["trials"] = s.trials;
  j["passes"] = s.passes;
  ordered_json violations = ordered_json::array();
  for (const TrialRecord& r : s.violations) violations.push_back(to_json(r));
  j["violations"] = std::move(violations);
  j["hypothesis_failures"] = s.hypothesis_failures;
  if (!s.hypothesis_records.empty()) {
    ordered_json recs = ordered_json::array();
    for (const TrialRecord& r : s.hypothesis_records) recs.push_back(to_json(r));
    j["hypothesis_failure_records"] = std::move(recs);
  }
  ordered_json errors = ordered_json::array();
  for (const ErrorRecord& e : s.errors) {
    errors.push_back({{"seed", e.seed}, {"dim", e.dim}, {"message", e.message}});
  }
  j["numerical_errors"] = std::move(errors);
  j["worst_residual"] = finite_or_null(s.worst_residual);
  if (!s.worst_seed.empty()) {
    j["worst_seed"] = s.worst_seed;
    j["worst_dim"] = s.worst_dim;
  }
  if (s.reproduced) j["reproduced"] = *s.reproduced;
  if (!s.discrepancy.empty()) j["discrepancy"] = s.discrepancy;
  if (!s.note.empty()) j["note"] = s.note;
  j["ok"] = s.ok();
  return j;
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["claims"] = cfg.claim_ids;
  j["dims"] = cfg.dims;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.first_trial == 0 ? std::to_string(cfg.master_seed)
                                   : seed_string(cfg.master_seed, cfg.first_trial);
  j["tol_rel"] = cfg.pol.rel;
  j["tol_abs"] = cfg.pol.abs;
  j["threads"] = cfg.threads;
  ordered_json files = ordered_json::array();
  for (const auto& p : cfg.matrix_files) files.push_back(p.string());
  j["matrix_files"] = std::move(files);
  return j;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

std::string text_report(const SuiteReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "claim" << std::setw(20) << "expect" << std::right
     << std::setw(8) << "trials" << std::setw(8) << "pass" << std::setw(8) << "hypfail"
     << std::setw(8) << "viol" << std::setw(8) << "errors" << std::setw(12) << "worst"
     << "  status\n";
  for (const ClaimSummary& s : report.claims) {
    os << std::left << std::setw(14) << s.id << std::setw(20) << to_string(s.expect)
       << std::right << std::setw(8) << s.trials << std::setw(8) << s.passes << std::setw(8)
       << s.hypothesis_failures << std::setw(8) << s.violations.size() << std::setw(8)
       << s.errors.size() << std::setw(12) << format_double(s.worst_residual) << "  "
       << (s.ok() ? "ok" : "FAIL") << "\n";
  }
  for (const ClaimSummary& s : report.claims) {
    const std::size_t shown = std::min<std::size_t>(s.violations.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const TrialRecord& r = s.violations[i];
      os << "  " << s.id << " " << to_string(r.verdict) << " seed=" << r.seed
         << " dim=" << r.dim << " excess=" << format_double(r.excess) << "\n";
    }
    if (s.violations.size() > shown) {
      os << "  " << s.id << " ... " << (s.violations.size() - shown) << " more\n";
    }
    for (const TrialRecord& r : s.hypothesis_records) {
      os << "  " << s.id << " HYPOTHESIS_FAIL seed=" << r.seed << " dim=" << r.dim << "\n";
      for (const Residual& x : r.residuals) {
        os << "    " << x.name << " = " << format_double(x.value) << "\n";
      }
    }
    if (!s.discrepancy.empty()) os << "  " << s.id << " note: " << s.discrepancy << "\n";
    for (const ErrorRecord& e : s.errors) {
      os << "  " << s.id << " ERROR seed=" << e.seed << " dim=" << e.dim << ": " << e.message
         << "\n";
    }
  }
  os << "verdict: " << (report.pass() ? "pass" : "fail") << "  wall time "
     << std::fixed << std::setprecision(2) << report.wall_time_seconds << "s\n";
  return os.str();
}

std::string probe_report(const std::vector<ProbeOutcome>& outcomes, const RunConfig& cfg,
                         Format format) {
  if (format == Format::kJson) {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["version"] = OPABS_VERSION;
    ordered_json rows = ordered_json::array();
    for (const ProbeOutcome& o : outcomes) {
      ordered_json row;
      row["id"] = o.claim_id;
      row["trials"] = o.trials;
      row["violations"] = o.violations;
      row["errors"] = o.errors;
      row["first_violation"] =
          o.first_violation ? ordered_json(seed_string(o.first_violation->master,
                                                       o.first_violation->trial))
                            : ordered_json(nullptr);
      rows.push_back(std::move(row));
    }
    j["probe"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << std::left << std::setw(14) << "claim" << std::right << std::setw(8) << "trials"
     << std::setw(12) << "violations" << std::setw(8) << "errors" << "\n";
  for (const ProbeOutcome& o : outcomes) {
    os << std::left << std::setw(14) << o.claim_id << std::right << std::setw(8) << o.trials
       << std::setw(12) << o.violations << std::setw(8) << o.errors
       << (o.violations == 0 ? "  holds on general inputs" : "") << "\n";
  }
  return os.str();
}

}  // namespace

RunConfig parse_config(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Numerical checks of operator absolute value identities and inequalities",
               "opabs-lab"};
  std::string dims_text = "2,3,4,8";
  std::string seed_text = "42";
  std::string format_text = "text";
  std::vector<std::string> files;
  app.add_option("--claims", cfg.selection,
                 "Claim ids (comma separated), 'all', 'theorems' or 'registry'");
  app.add_option("--dims", dims_text, "Matrix dimensions, e.g. 2,3,4");
  app.add_option("--trials", cfg.trials, "Trials per (claim, dim)");
  app.add_option("--seed", seed_text, "Master seed S, or S:T to start at trial T");
  app.add_option("--tol-rel", cfg.pol.rel, "Relative tolerance");
  app.add_option("--tol-abs", cfg.pol.abs, "Absolute tolerance");
  app.add_option("--format", format_text, "Report format: text or json");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--matrix-file", files,
                 "JSON matrix file bound to the next slot of a single claim");
  app.add_flag("--list", cfg.list, "Print the claim catalog and exit");
  app.add_flag("--null-probe", cfg.null_probe,
               "Run conclusions on unconstrained general matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    cfg.help = true;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (format_text == "text") {
    cfg.format = Format::kText;
  } else if (format_text == "json") {
    cfg.format = Format::kJson;
  } else {
    throw UsageError("--format must be text or json, got '" + format_text + "'");
  }

  cfg.dims.clear();
  for (const std::string& d : split(dims_text, ',')) {
    const std::uint64_t v = parse_u64(d, "dimension");
    if (v == 0) throw UsageError("dimensions must be positive");
    cfg.dims.push_back(static_cast<std::size_t>(v));
  }
  if (cfg.dims.empty()) throw UsageError("--dims must list at least one dimension");
  if (cfg.trials == 0) throw UsageError("--trials must be at least 1");

  const auto colon = seed_text.find(':');
  cfg.master_seed = parse_u64(seed_text.substr(0, colon), "seed");
  if (colon != std::string::npos) {
    cfg.first_trial = parse_u64(seed_text.substr(colon + 1), "trial index");
  }

  try {
    cfg.pol.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  cfg.claim_ids = select_claims(cfg.selection);
  cfg.matrix_files.assign(files.begin(), files.end());
  if (!cfg.matrix_files.empty() && cfg.claim_ids.size() != 1) {
    throw UsageError("--matrix-file requires exactly one claim in --claims");
  }
  return cfg;
}

std::string emit_report(const SuiteReport& report, const RunConfig& cfg, Format format) {
  if (format == Format::kText) return text_report(report);
  ordered_json j;
  j["config"] = config_json(cfg);
  j["version"] = OPABS_VERSION;
  ordered_json claims = ordered_json::array();
  for (const ClaimSummary& s : report.claims) claims.push_back(to_json(s));
  j["claims"] = std::move(claims);
  j["verdict"] = report.pass() ? "pass" : "fail";
  j["wall_time_s"] = report.wall_time_seconds;
  return j.dump(2) + "\n";
}

std::string emit_catalog(Format format) {
  if (format == Format::kJson) {
    ordered_json rows = ordered_json::array();
    for (const Claim& c : catalog()) {
      ordered_json row;
      row["id"] = c.id;
      row["description"] = c.description;
      row["statement"] = c.statement;
      row["arity"] = {{"min", c.arity.min}, {"max", c.arity.max}};
      row["ensemble"] = to_string(c.ensemble.kind);
      if (c.ensemble.fixed_dim) row["fixed_dim"] = *c.ensemble.fixed_dim;
      row["expect"] = to_string(c.expect);
      if (!c.note.empty()) row["note"] = c.note;
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const Claim& c : catalog()) {
    os << std::left << std::setw(14) << c.id << std::setw(6)
       << (c.arity.min == c.arity.max
               ? std::to_string(c.arity.min)
               : std::to_string(c.arity.min) + "-" + std::to_string(c.arity.max))
       << std::setw(30) << to_string(c.ensemble.kind) << c.statement << "\n";
  }
  return os.str();
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.help) {
    out << cfg.help_text;
    return kExitOk;
  }
  if (cfg.list) {
    out << emit_catalog(cfg.format);
    return kExitOk;
  }
  if (cfg.null_probe) {
    std::vector<ProbeOutcome> outcomes;
    for (const std::string& id : cfg.claim_ids) {
      const Claim& claim = find_claim(id);
      if (claim.expect != Expectation::kAlwaysHolds) continue;
      for (std::size_t dim : cfg.dims) {
        outcomes.push_back(null_probe(claim, dim, cfg.trials, cfg.master_seed, cfg.pol));
      }
    }
    out << probe_report(outcomes, cfg, cfg.format);
    return kExitOk;
  }

  SuiteReport report;
  if (!cfg.matrix_files.empty()) {
    std::vector<ComplexMatrix> matrices;
    try {
      for (const auto& path : cfg.matrix_files) matrices.push_back(load_matrix_file(path));
      report = run_instance(cfg.claim_ids.front(), std::move(matrices), cfg.pol);
    } catch (const std::invalid_argument& e) {
      err << "opabs-lab: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    SuiteOptions options;
    options.threads = cfg.threads;
    options.first_trial = cfg.first_trial;
    report = run_suite(cfg.claim_ids, cfg.dims, cfg.trials, cfg.master_seed, cfg.pol, options);
  }
  out << emit_report(report, cfg, cfg.format);
  if (!report.pass()) {
    for (const ClaimSummary& s : report.claims) {
      if (!s.ok()) err << "opabs-lab: " << s.id << " failed\n";
    }
    return kExitFailure;
  }
  return kExitOk;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(argc, argv);
  } catch (const UsageError& e) {
    err << "opabs-lab: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace opabs::tools
