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

#ifndef OPABS_TOOLS_HARNESS_HPP_
#define OPABS_TOOLS_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "opabs/suite.hpp"

namespace opabs::tools {

/// Bad flags or flag values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson };

struct RunConfig {
  /// The --claims argument as given ("all", "registry", "theorems" or ids).
  std::string selection = "all";
  std::vector<std::string> claim_ids;
  std::vector<std::size_t> dims{2, 3, 4, 8};
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 42;
  std::uint64_t first_trial = 0;
  TolerancePolicy pol;
  Format format = Format::kText;
  unsigned threads = 1;
  std::vector<std::filesystem::path> matrix_files;
  bool list = false;
  bool null_probe = false;
  bool help = false;
  std::string help_text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Throws UsageError on unknown flags, malformed values, unknown claim ids
/// or an inconsistent combination (e.g. --matrix-file with several claims).
RunConfig parse_config(int argc, const char* const* argv);

std::string emit_report(const SuiteReport& report, const RunConfig& cfg, Format format);
std::string emit_catalog(Format format);

/// Runs the configured action, writing the report to out and diagnostics
/// to err. Returns the process exit code.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_config + execute with usage errors mapped to exit code 2.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opabs::tools

#endif  // OPABS_TOOLS_HARNESS_HPP_
