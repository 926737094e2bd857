// Copyright 2026 The Authors.
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

#include "noneven/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace noneven {
namespace {

using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("noneven_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int call(std::vector<std::string> args) {
    args.insert(args.begin(), "noneven");
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }
  json result() const { return json::parse(out_.str()); }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

const char* kTriangle = "# directed triangle\n3 3\n-1 0 1\n1 -1 0\n0 1 -1\n";
const char* kK23 = "digraph\na1 b1\na1 b2\na1 b3\na2 b1\na2 b2\na2 b3\n";
const char* kK22 = "digraph\na1 b1 p\na1 b2 q\na2 b1 r\na2 b2 s\n";

TEST_F(CliTest, OddCircuitOnTriangle) {
  ASSERT_EQ(call({"odd-circuit", file("t.txt", kTriangle)}), 0);
  const json r = result();
  EXPECT_TRUE(r["found"].get<bool>());
  EXPECT_EQ(r["circuit"], json({"e1", "e2", "e3"}));
  EXPECT_EQ(r["method"], "directed-basis");
}

TEST_F(CliTest, OddDijoinOnOneDirections) {
  ASSERT_EQ(call({"odd-dijoin", file("k23.txt", kK23)}), 0);
  EXPECT_FALSE(result()["found"].get<bool>());
  EXPECT_FALSE(result()["odd_zero_sum"].empty());
  ASSERT_EQ(call({"odd-dijoin", file("k22.txt", kK22)}), 0);
  EXPECT_TRUE(result()["found"].get<bool>());
}

TEST_F(CliTest, FarkasReportsLabels) {
  ASSERT_EQ(call({"farkas", "e2", file("t.txt", kTriangle)}), 0);
  EXPECT_EQ(result()["kind"], "directed-circuit");
  EXPECT_EQ(result()["set"], json({"e1", "e2", "e3"}));
  EXPECT_EQ(call({"farkas", "e9", file("t.txt", kTriangle)}), kExitParseError);
}

TEST_F(CliTest, BondMatroidOfDigraph) {
  ASSERT_EQ(call({"non-even", "--bond", file("k23.txt", kK23)}), 0);
  EXPECT_FALSE(result()["non_even"].get<bool>());
  ASSERT_EQ(call({"non-even", "--bond", "--method", "reduction", file("k22.txt", kK22)}), 0);
  EXPECT_TRUE(result()["non_even"].get<bool>());
  EXPECT_EQ(result()["method"], "reduction");
}

TEST_F(CliTest, BasisAndTc) {
  const std::string path =
      file("pendant.txt", "digraph\na b\nb c\nc a\nc d\n");
  ASSERT_EQ(call({"tc", path}), 0);
  EXPECT_EQ(result()["totally_cyclic_part"], json({"e1", "e2", "e3"}));
  EXPECT_EQ(result()["removed"], json({"e4"}));
  ASSERT_EQ(call({"basis", path}), 0);
  EXPECT_EQ(result()["basis"].size(), 1U);
}

TEST_F(CliTest, EvenCircuitBothMethods) {
  const std::string path = file("c4.txt", "digraph\na b\nb c\nc d\nd a\n");
  ASSERT_EQ(call({"even-circuit", path}), 0);
  EXPECT_TRUE(result()["found"].get<bool>());
  ASSERT_EQ(call({"even-circuit", "--method", "reduction", path}), 0);
  EXPECT_TRUE(result()["found"].get<bool>());
}

TEST_F(CliTest, DFamilyClosedForm) {
  ASSERT_EQ(call({"d-family", "2", "3", "2"}), 0);
  EXPECT_FALSE(result()["has_odd_dijoin"].get<bool>());
  EXPECT_EQ(result()["clause"], "wide");
  ASSERT_EQ(call({"d-family", "1", "3", "1"}), 0);
  EXPECT_TRUE(result()["has_odd_dijoin"].get<bool>());
  EXPECT_EQ(result()["method"], "closed-form");
}

TEST_F(CliTest, MinimalObstruction) {
  ASSERT_EQ(call({"minimal-obstruction", file("k23.txt", kK23)}), 0);
  EXPECT_TRUE(result()["minimal_obstruction"].get<bool>());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(call({"odd-circuit", file("bad.txt", "2 2\n1 0\n")}), kExitParseError);
  EXPECT_EQ(call({"odd-circuit", (dir_ / "missing.txt").string()}), kExitParseError);
  EXPECT_EQ(call({"frobnicate"}), kExitParseError);
  EXPECT_EQ(call({"odd-dijoin", file("t.txt", kTriangle)}), kExitParseError);
  // Not totally unimodular.
  EXPECT_EQ(call({"tc", file("ntu.txt", "2 2\n1 1\n-1 1\n")}), kExitParseError);
  EXPECT_EQ(call({"non-even", "--bound", "2", file("t.txt", kTriangle)}),
            kExitBoundExceeded);
}

TEST_F(CliTest, BoundOverrideWarns) {
  ASSERT_EQ(call({"non-even", "--bound", "20", file("t.txt", kTriangle)}), 0);
  EXPECT_NE(err_.str().find("may be slow"), std::string::npos);
  ASSERT_EQ(call({"non-even", "--bound", "10", file("t.txt", kTriangle)}), 0);
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CliTest, OutputFileAndStability) {
  const std::string in = file("k22.txt", kK22);
  const std::string target = (dir_ / "out.json").string();
  ASSERT_EQ(call({"odd-dijoin", in, "-o", target}), 0);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream f(target);
  std::stringstream written;
  written << f.rdbuf();
  ASSERT_EQ(call({"odd-dijoin", in, "--json"}), 0);
  EXPECT_EQ(out_.str(), written.str());
}

}  // namespace
}  // namespace noneven
