// Copyright 2026 The lustab Authors
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#ifndef LUSTAB_CLI_PATH
#error "LUSTAB_CLI_PATH must name the lustab executable"
#endif
#ifndef LUSTAB_SAMPLES_DIR
#error "LUSTAB_SAMPLES_DIR must name the samples directory"
#endif

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LUSTAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lustab_cli_test_" + name);
}

}  // namespace

TEST(cli, analyze_named_ghz) {
  const CliRun r = run("analyze --state ghz --n 5 --json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("kernel_dim"), 4);
  EXPECT_TRUE(j.at("blocks").empty());
  EXPECT_EQ(j.at("classification").at("bound_value"), 4);
  EXPECT_TRUE(j.at("classification").at("saturated").get<bool>());
}

TEST(cli, analyze_text_report) {
  const CliRun r = run("analyze --state singlet");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("kernel"), std::string::npos);
}

TEST(cli, analyze_ket_file) {
  const auto path = scratch("w3.ket");
  std::ofstream(path) << "|001> + |010> + |100>\n";
  const CliRun r = run("analyze --json --input " + path.string());
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("kernel_dim"), 1);
  std::filesystem::remove(path);
}

TEST(cli, out_flag_writes_file) {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  ASSERT_EQ(run("analyze --state block4 --json --out " + path.string()).status, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("kernel_dim"), 3);
  std::filesystem::remove(path);
}

TEST(cli, table_matches) {
  const CliRun r = run("table --n-max 6 --json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("all_match").get<bool>());
  for (const auto& row : j.at("rows")) EXPECT_TRUE(row.at("match").get<bool>()) << row.at("row");
}

TEST(cli, catalog_lists_entries) {
  const CliRun r = run("catalog");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("block4"), std::string::npos);
  EXPECT_NE(r.out.find("ghz(7)"), std::string::npos);
}

TEST(cli, scan_runs) {
  const CliRun r = run("scan --n 3 --trials 5 --json");
  ASSERT_EQ(r.status, 0);
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("hits").empty());
}

TEST(cli, input_errors_exit_2) {
  EXPECT_EQ(run("analyze --input /nonexistent/state.ket").status, 2);
  EXPECT_EQ(run("analyze --state ghz --n 4 --tol 1").status, 2);
  EXPECT_EQ(run("analyze --state ghz --n 4 --alpha 0").status, 2);
  EXPECT_EQ(run("analyze --state cluster --n 4").status, 2);
  EXPECT_EQ(run("scan --n 2").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);

  const auto path = scratch("bad.ket");
  std::ofstream(path) << "|01> + |0x>\n";
  EXPECT_EQ(run("analyze --input " + path.string()).status, 2);
  std::filesystem::remove(path);
}

TEST(cli, samples_analyze_to_known_dimensions) {
  const std::pair<const char*, int> want[] = {{"singlet.ket", 3},   {"block4.ket", 3},     {"m4.json", 3},
                                              {"ghz5_ratio.ket", 4}, {"ghz3_float.ket", 2}, {"w3.ket", 1}};
  for (const auto& [file, dim] : want) {
    const CliRun r = run(std::string("analyze --json --input ") + LUSTAB_SAMPLES_DIR + "/" + file);
    ASSERT_EQ(r.status, 0) << file;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("kernel_dim"), dim) << file;
  }
}
