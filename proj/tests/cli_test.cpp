// Copyright 2026 The isotree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the isotree executable end to end.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "isotree/format.hpp"
#include "support.hpp"

namespace isotree {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ISOTREE_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("isotree_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  fs::path dir_;
};

bool has_line(const std::string& out, const std::string& prefix) {
  return out.starts_with(prefix + "\n") || out.starts_with(prefix + " ") ||
         out.find("\n" + prefix + "\n") != std::string::npos ||
         out.find("\n" + prefix + " ") != std::string::npos;
}

TEST_F(Cli, Profile) {
  Result r = run("profile --d 5 --kmax 16");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has_line(r.out, "16 13"));
  r = run("profile --d 4 --kmax 15");
  EXPECT_TRUE(has_line(r.out, "15 11"));
  r = run("profile --d 2 --kmax 5");
  EXPECT_TRUE(has_line(r.out, "1 1"));
  for (int k = 2; k <= 5; ++k) EXPECT_TRUE(has_line(r.out, std::to_string(k) + " 2")) << k;
}

TEST_F(Cli, AnalyzeExamples) {
  Result r = run("analyze " + file("star3.txt", write_domain(testing::three_star())));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("size=16 boundary=13 tau=2 optimal=yes\n")) << r.out;
  r = run("analyze " + file("hub2.txt", write_domain(testing::two_hub())));
  EXPECT_TRUE(r.out.starts_with("size=16 boundary=14 tau=6 optimal=no\n")) << r.out;
  r = run("analyze " + file("one.txt", "isotree-domain v1\nd 3\nn 1\n"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("tau=undefined optimal=yes"), std::string::npos) << r.out;
}

TEST_F(Cli, BundledSamples) {
  const std::string data = ISOTREE_DATA_DIR;
  EXPECT_TRUE(run("analyze " + data + "/three_star.txt").out.starts_with(
      "size=16 boundary=13 tau=2 optimal=yes\n"));
  EXPECT_TRUE(run("analyze " + data + "/two_hub.txt").out.starts_with(
      "size=16 boundary=14 tau=6 optimal=no\n"));
}

TEST_F(Cli, Stems) {
  EXPECT_EQ(run("stems --tau-max 2").out, "0:1 1:1 2:3\n");
  EXPECT_NE(run("stems --tau-max 3").out.find("3:7"), std::string::npos);
  EXPECT_EQ(run("stems --tau-max 0").out, "0:1\n");
  const std::string out_dir = (dir_ / "stems").string();
  EXPECT_EQ(run("stems --tau-max 2 --out-dir " + out_dir).status, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NO_THROW(parse_stem(text));
    ++files;
  }
  EXPECT_EQ(files, 5);
}

TEST_F(Cli, DecomposeReconstructRoundTrip) {
  const std::string f2 = file("hub2.txt", write_domain(testing::two_hub()));
  const std::string datum = (dir_ / "datum.txt").string();
  ASSERT_EQ(run("decompose " + f2 + " --out " + datum).status, 0);
  const Result r = run("reconstruct " + datum);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(is_isomorphic(parse_domain(r.out).tree(), testing::two_hub().tree()));
}

TEST_F(Cli, WitnessAndDot) {
  const std::string w = (dir_ / "w.txt").string();
  ASSERT_EQ(run("witness --d 4 --k 15 --out " + w).status, 0);
  const Result a = run("analyze " + w);
  EXPECT_TRUE(a.out.starts_with("size=15 boundary=11 ")) << a.out;
  const Result dot = run("export-dot " + file("star3.txt", write_domain(testing::three_star())));
  EXPECT_EQ(dot.status, 0);
  EXPECT_TRUE(dot.out.starts_with("graph domain {"));
  const Result stem = run("export-dot " + file("s.txt", "isotree-stem v1\nn 1\nred\nblue 0\n"));
  EXPECT_NE(stem.out.find("color=blue"), std::string::npos);
}

TEST_F(Cli, EnumerateAndVerify) {
  Result r = run("enumerate --d 3 --k 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("d=3 k=5 classes=2 profile=4\n")) << r.out;
  const std::string jsonl = (dir_ / "r.jsonl").string();
  r = run("verify --d 2 --kmax 8 --jsonl " + jsonl);
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(fs::file_size(jsonl) > 0);
  r = run("verify --d 3 --kmax 6");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("counterexample for full_equivalences"), std::string::npos) << r.out;
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("nosuch").status, 2);
  EXPECT_EQ(run("profile --d 1 --kmax 3").status, 2);
  EXPECT_EQ(run("profile --d x --kmax 3").status, 2);
  EXPECT_EQ(run("analyze").status, 2);
  EXPECT_EQ(run("analyze " + (dir_ / "missing.txt").string()).status, 1);
  EXPECT_EQ(run("analyze " + file("bad.txt", "isotree-domain v1\nd 3\nn 3\ne 0 1\n")).status, 1);
  EXPECT_EQ(run("analyze " + file("deg.txt", "isotree-domain v1\nd 2\nn 4\ne 0 1\ne 0 2\ne 0 3\n"))
                .status,
            1);
  EXPECT_EQ(run("export-dot " + file("junk.txt", "junk\n")).status, 1);
}

TEST_F(Cli, Budget) {
  EXPECT_EQ(run("enumerate --d 3 --k 17").status, 2);
  EXPECT_EQ(run("enumerate --d 3 --k 6", "ISOTREE_BUDGET=5").status, 2);
  EXPECT_EQ(run("enumerate --d 3 --k 6", "ISOTREE_BUDGET=6").status, 0);
  EXPECT_EQ(run("stems --tau-max 3", "ISOTREE_BUDGET=6").status, 2);
  EXPECT_EQ(run("verify --d 3 --kmax 6", "ISOTREE_BUDGET=abc").status, 2);
}

}  // namespace
}  // namespace isotree
