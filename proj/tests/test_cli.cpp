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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace hbsiegel::cli {
namespace {

const std::filesystem::path kData = HBSIEGEL_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::vector<json> lines;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "hbsiegel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o{run(static_cast<int>(argv.size()), argv.data(), out, err), out.str(), {}};
  std::istringstream in(o.out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line.front() == '{') o.lines.push_back(json::parse(line));
  return o;
}

std::string data(const char* name) { return (kData / name).string(); }

const json& summary(const Outcome& o) { return o.lines.back().at("summary"); }

TEST(Cli, FieldInfo) {
  const Outcome o = run_args({"field-info", "--field", data("phi.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.lines.front().at("data").at("discriminant"), "5");
  EXPECT_EQ(summary(o).at("failed"), 0);
  const Outcome g1 = run_args({"field-info", "--field", data("rationals.json")});
  EXPECT_EQ(g1.code, 0);
  EXPECT_EQ(g1.lines.front().at("data").at("discriminant"), "1");
}

TEST(Cli, NonTotallyRealIsInputError) {
  const Outcome o = run_args({"field-info", "--field", data("gaussian.json")});
  EXPECT_EQ(o.code, 2);
  ASSERT_EQ(o.lines.size(), 1u);
  EXPECT_EQ(o.lines[0].at("error").at("code"), "NotTotallyReal");
}

TEST(Cli, VerifyEmbeddingPasses) {
  for (const char* f : {"phi.json", "rationals.json", "sqrt2.json"}) {
    const Outcome o = run_args({"verify-embedding", "--field", data(f), "--level", "3", "--seed", "42"});
    EXPECT_EQ(o.code, 0) << f;
    EXPECT_EQ(summary(o).at("failed"), 0) << f;
    const std::vector<std::string> order = {"dual_basis_duality", "trace_form_standard", "iota_bar_homomorphism",
                                            "sl_to_sp2g_z",       "gamma_prime_to_gamma_n", "equivariance",
                                            "half_space",         "interval_duality",       "interval_conjugation"};
    ASSERT_EQ(o.lines.size(), order.size() + 1) << f;
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(o.lines[i].at("check"), order[i]);
  }
}

TEST(Cli, CorruptedBasisStopsBeforeSuites) {
  const Outcome o = run_args({"verify-embedding", "--field", data("phi_not_order.json")});
  EXPECT_EQ(o.code, 2);
  ASSERT_EQ(o.lines.size(), 1u);
  EXPECT_EQ(o.lines[0].at("error").at("code"), "NotAnOrder");
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run_args({"verify-embedding", "--field", data("phi.json"), "--level", "2"}).code, 2);
  EXPECT_EQ(run_args({"verify-embedding", "--field", data("phi.json"), "--trials", "0"}).code, 2);
  EXPECT_EQ(run_args({"field-info", "--field", data("phi.json"), "--precision", "0"}).code, 2);
  EXPECT_EQ(run_args({"field-info"}).code, 2);
  EXPECT_EQ(run_args({"no-such-command"}).code, 2);
  EXPECT_EQ(run_args({"field-info", "--field", data("missing.json")}).code, 2);
  EXPECT_EQ(run_args({"field-info", "--field", data("malformed.json")}).code, 2);
  EXPECT_EQ(run_args({"map", "--field", data("phi.json"), "--object", "curve", "--input", data("phi.json")}).code,
            2);
}

TEST(Cli, MapExamples) {
  const Outcome m = run_args(
      {"map", "--field", data("phi.json"), "--object", "matrix", "--input", data("phi_matrix.json")});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.lines[0].at("data").at("image").at("matrix"),
            json::parse(R"([["1","0","1","0"],["0","1","0","1"],["0","0","1","0"],["0","0","0","1"]])"));
  EXPECT_EQ(m.lines[0].at("data").at("image").at("nu"), "1");

  const Outcome p = run_args(
      {"map", "--field", data("phi.json"), "--object", "point", "--input", data("phi_point_i.json")});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.lines[0].at("data").at("image").at("im"), json::parse(R"([["2","1"],["1","3"]])"));
  EXPECT_EQ(p.lines[0].at("data").at("image").at("re"), json::parse(R"([["0","0"],["0","0"]])"));

  const Outcome t = run_args(
      {"map", "--field", data("phi.json"), "--object", "torsion", "--input", data("phi_torsion_dual.json")});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.lines[0].at("data").at("image"), json::parse(R"(["1/3","0","0","0"])"));
  EXPECT_EQ(t.lines[0].at("data").at("order"), 3);
}

TEST(Cli, MapMembershipFailures) {
  // The torsion file has 3y not integral.
  for (const auto& [object, file] : std::vector<std::pair<std::string, const char*>>{
           {"matrix", "phi_matrix_bad.json"}, {"point", "phi_point_bad.json"}, {"torsion", "phi_torsion_bad.json"}}) {
    const std::string input = data(file);
    const Outcome o = run_args({"map", "--field", data("phi.json"), "--object", object, "--input", input});
    EXPECT_EQ(o.code, 1) << object;
    EXPECT_EQ(o.lines[0].at("status"), "fail") << object;
    EXPECT_TRUE(o.lines[0].at("data").contains("reason")) << object;
  }
}

TEST(Cli, TorsionSuite) {
  const Outcome o = run_args({"torsion-suite", "--field", data("phi.json"), "--level", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.lines[0].at("check"), "transport_table");
  EXPECT_EQ(o.lines[0].at("data").at("points").size(), 81u);
  EXPECT_EQ(summary(o).at("failed"), 0);

  const Outcome one = run_args({"torsion-suite", "--field", data("phi.json"), "--level", "1"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.lines[0].at("data").at("points").size(), 1u);

  const Outcome over = run_args({"torsion-suite", "--field", data("phi.json"), "--level", "3", "--budget", "10"});
  EXPECT_EQ(over.code, 2);
  EXPECT_EQ(over.lines[0].at("error").at("code"), "BudgetExceeded");
}

TEST(Cli, ReportExitCodeFollowsFailures) {
  Report r{"test", {{"a", true, json::object()}}, json::object()};
  EXPECT_EQ(r.exit_code(), 0);
  r.records.push_back({"b", false, {{"witness", 1}}});
  EXPECT_EQ(r.exit_code(), 1);
  const std::string text = r.to_jsonl();
  EXPECT_NE(text.find(R"("failed":1)"), std::string::npos);
}

TEST(Cli, DeterministicReports) {
  const std::vector<std::string> args = {"verify-embedding", "--field", data("cubic49.json"), "--seed", "7"};
  const Outcome a = run_args(args), b = run_args(args);
  EXPECT_EQ(a.out, b.out);
  const auto file = std::filesystem::temp_directory_path() / "hbsiegel_report.jsonl";
  std::vector<std::string> with_json = args;
  with_json.insert(with_json.end(), {"--json", file.string()});
  const Outcome c = run_args(with_json);
  std::ifstream in(file, std::ios::binary);
  const std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(saved, a.out);
  EXPECT_EQ(c.out, a.out);
}

int run_process(const std::string& args, std::string* out) {
  const std::string cmd = std::string(HBSIEGEL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return -1;
  std::array<char, 4096> buf{};
  std::string text;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) text.append(buf.data(), n);
  const int status = pclose(p);
  if (out != nullptr) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ProcessExitCodes) {
  std::string first, second;
  EXPECT_EQ(run_process("verify-embedding --field " + data("phi.json"), &first), 0);
  EXPECT_EQ(run_process("verify-embedding --field " + data("phi.json"), &second), 0);
  EXPECT_EQ(first, second);
  EXPECT_EQ(run_process("field-info --field " + data("gaussian.json"), nullptr), 2);
  EXPECT_EQ(run_process("map --field " + data("phi.json") + " --object matrix --input " + data("phi_matrix_bad.json"),
                        nullptr),
            1);
  EXPECT_EQ(run_process("torsion-suite --field " + data("phi.json") + " --budget 10", nullptr), 2);
  EXPECT_EQ(run_process("--bogus", nullptr), 2);
  EXPECT_EQ(run_process("--version", nullptr), 0);
}

}  // namespace
}  // namespace hbsiegel::cli
