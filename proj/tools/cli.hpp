// Copyright 2026 The hbsiegel Authors
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
//
#ifndef HBSIEGEL_TOOLS_CLI_HPP
#define HBSIEGEL_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hbsiegel::cli {

using nlohmann::json;

enum ExitCode : int { kAllPass = 0, kVerificationFailure = 1, kInputError = 2 };

struct RunConfig {
  json field;              // field description
  std::string field_path;  // echoed in reports only
  long level = 3;
  unsigned precision = 64;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::uint64_t budget = 100000;
  std::size_t taus = 5;    // torsion-suite: points tau per torsion point
  std::string object;      // map: matrix | point | torsion
  json input;              // map: the object to map
};

struct CheckRecord {
  std::string name;
  bool passed = true;
  json data = json::object();
};

struct Report {
  std::string command;
  std::vector<CheckRecord> records;
  json config = json::object();

  std::size_t failures() const;
  int exit_code() const { return failures() == 0 ? kAllPass : kVerificationFailure; }
  /// One JSON object per line, records in order, then the summary line.
  std::string to_jsonl() const;
};

json config_echo(const RunConfig& cfg);

// Commands throw hbsiegel::Error for input problems; run() maps those to
// exit code 2.
Report cmd_field_info(const RunConfig& cfg);
Report cmd_verify_embedding(const RunConfig& cfg);
Report cmd_map(const RunConfig& cfg);
Report cmd_torsion_suite(const RunConfig& cfg);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbsiegel::cli

#endif  // HBSIEGEL_TOOLS_CLI_HPP
