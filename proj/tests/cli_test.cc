// Copyright 2026 The satproof Authors
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

#include "satproof/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace satproof {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("satproof_cli_" + std::string(
                                  ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    Write("f.cnf", "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
    Write("p.drat", "1 0\n0\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void Write(const std::string& name, const std::string& content) {
    std::ofstream(Path(name), std::ios::binary) << content;
  }

  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "satproof");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return RunCli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CheckDratVerified) {
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.drat")}), kExitOk);
  EXPECT_EQ(out_.str(), "s VERIFIED\n");
}

TEST_F(CliTest, CheckDratRejected) {
  Write("broken.drat", "-1 2 0\n");
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("broken.drat")}), kExitRejected);
  EXPECT_EQ(out_.str().rfind("s NOT VERIFIED\n", 0), 0u);
}

TEST_F(CliTest, ParseAndUsageErrors) {
  Write("junk.drat", "1 x 0\n");
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("junk.drat")}), kExitUsage);
  EXPECT_EQ(Run({"check", "drat", Path("missing.cnf"), Path("p.drat")}), kExitUsage);
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.drat"), "--mode", "x"}),
            kExitUsage);
  EXPECT_EQ(Run({}), kExitUsage);
}

TEST_F(CliTest, CrossModeDeletion) {
  Write("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  Write("d.drat", "d 1 0\n0\n");
  EXPECT_EQ(Run({"check", "drat", Path("u.cnf"), Path("d.drat")}), kExitRejected);
  EXPECT_EQ(Run({"check", "drat", Path("u.cnf"), Path("d.drat"), "--mode",
                 "operational"}),
            kExitOk);
}

TEST_F(CliTest, TrimThenCheckLrat) {
  ASSERT_EQ(Run({"trim", Path("f.cnf"), Path("p.drat"), "--out-lrat", Path("p.lrat"),
                 "--out-drat", Path("t.drat"), "--out-core", Path("core.cnf")}),
            kExitOk);
  EXPECT_EQ(Read("p.lrat"), "5 1 0 1 3 0\n6 0 5 2 4 0\n");
  EXPECT_EQ(Run({"check", "lrat", Path("f.cnf"), Path("p.lrat")}), kExitOk);
  EXPECT_EQ(Run({"check", "drat", Path("core.cnf"), Path("t.drat")}), kExitOk);
}

TEST_F(CliTest, TrimRefusesInvalidProof) {
  Write("broken.drat", "-1 2 0\n");
  EXPECT_EQ(Run({"trim", Path("f.cnf"), Path("broken.drat"), "--out-lrat",
                 Path("p.lrat")}),
            kExitRejected);
  EXPECT_FALSE(fs::exists(Path("p.lrat")));
}

TEST_F(CliTest, SolveTranslateAndCheckPigeonhole) {
  ASSERT_EQ(Run({"gen", "php", "3", "--out", Path("php.cnf")}), kExitOk);
  ASSERT_EQ(Run({"solve", Path("php.cnf"), "--proof", Path("php.drat"), "--seed", "4"}),
            kExitOk);
  EXPECT_EQ(out_.str().rfind("s UNSATISFIABLE\n", 0), 0u);
  ASSERT_EQ(Run({"to-er", Path("php.cnf"), Path("php.drat"), "--out", Path("php.er")}),
            kExitOk);
  EXPECT_EQ(Run({"check", "er", Path("php.cnf"), Path("php.er")}), kExitOk);
}

TEST_F(CliTest, BinaryDratAutoDetected) {
  Write("p.bin", std::string("a\x02\x00" "a\x00", 5));
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.bin")}), kExitOk);
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.bin"), "--binary"}), kExitOk);
  EXPECT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.bin"), "--text"}), kExitUsage);
}

TEST_F(CliTest, CountersAreDeterministic) {
  ASSERT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.drat"), "--counters"}), kExitOk);
  const std::string first = out_.str();
  EXPECT_NE(first.find("c visited_clauses "), std::string::npos);
  ASSERT_EQ(Run({"check", "drat", Path("f.cnf"), Path("p.drat"), "--counters"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, BatchMode) {
  Write("bad.drat", "1 0\n");
  Write("list", Path("f.cnf") + " " + Path("p.drat") + "\n" + Path("f.cnf") + " " +
                    Path("bad.drat") + "\n");
  EXPECT_EQ(Run({"check", "drat", "--batch", Path("list"), "--jobs", "2"}), kExitRejected);
  const std::string out = out_.str();
  EXPECT_LT(out.find("s VERIFIED"), out.find("s NOT VERIFIED"));
}

TEST_F(CliTest, GenRandomIsDeterministic) {
  const std::vector<std::string> args = {"gen", "random", "--vars", "6", "--clauses",
                                         "10", "--width", "3", "--seed", "9"};
  ASSERT_EQ(Run(args), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(first.rfind("p cnf 6 10\n", 0), 0u);
}

}  // namespace
}  // namespace satproof
