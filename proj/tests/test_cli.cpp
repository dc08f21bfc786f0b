// Copyright 2026 The wtgc Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "wtgc/io.hpp"

namespace wtgc {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return testing::fixture_path(name); }

TEST(Cli, Eval) {
  auto r = run({"eval", "--grammar", fx("fx1.wtg"), "--tree", "sigma(gamma(gamma(alpha)),gamma(alpha))"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\n");
  r = run({"eval", "--grammar", fx("fx1.wtg"), "--tree", "sigma(alpha,alpha)"});
  EXPECT_EQ(r.out, "-inf\n");
  r = run({"eval", "--grammar", fx("fx3.wtg"), "--tree", "phi(gamma(alpha))", "--format", "json"});
  EXPECT_EQ(r.out, "{\"weight\":\"2\"}\n");
}

TEST(Cli, ImageEval) {
  const auto r = run({"image-eval", "--grammar", fx("fx3.wtg"), "--hom", fx("fx3.hom"), "--tree",
                      "sigma(gamma(gamma(gamma(alpha))),gamma(gamma(alpha)))", "--oracle-size", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "9\n");
}

TEST(Cli, Errors) {
  auto r = run({"eval", "--grammar", fx("fx1.wtg"), "--tree", "sigma(alpha"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
  r = run({"eval", "--grammar", fx("missing.wtg"), "--tree", "alpha"});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  r = run({"decide", "empty", "--grammar", fx("fx1.wtg")});
  EXPECT_EQ(r.code, 2);
  r = run({"eval", "--grammar", fx("fx1.wtg"), "--tree", "alpha", "--oracle-size", "13"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, DecideExitCodes) {
  auto r = run({"decide", "empty", "--grammar", fx("fx4.wtg")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "scope: extension\nnonempty\n");
  r = run({"decide", "finite", "--grammar", fx("fx3.wtg"), "--hom", fx("fx3.hom")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "scope: image\ninfinite\n");
}

TEST(Cli, Oracle) {
  const auto r = run({"oracle", "--fixtures", WTGC_FIXTURE_DIR, "--oracle-size", "6"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, TransformRoundTrips) {
  const auto r = run({"transform", "normalize", "--grammar", fx("fx1.wtg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(classify(parse_grammar(r.out)).normalized);
}

TEST(Cli, Golden) {
  const bool update = std::getenv("WTGC_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : testing::golden_cases()) {
    const auto r = run(c.args);
    EXPECT_NE(r.code, 2) << c.name << ": " << r.err;
    const std::string path = testing::golden_path(c.name);
    if (update) {
      std::ofstream(path) << read_file(std::string(WTGC_GOLDEN_DIR) + "/HEADER") << '\n' << r.out;
      continue;
    }
    EXPECT_EQ(r.out, testing::read_golden(c.name)) << c.name;
  }
}

}  // namespace
}  // namespace wtgc
