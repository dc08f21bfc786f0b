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

#ifndef WTGC_TESTS_GOLDEN_CASES_HPP
#define WTGC_TESTS_GOLDEN_CASES_HPP

#include <string>
#include <vector>

#include "test_support.hpp"
#include "wtgc/io.hpp"

namespace wtgc::testing {

/// CLI invocations whose stdout is pinned in tests/golden/<name>.txt.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

inline std::vector<GoldenCase> golden_cases() {
  auto fx = [](const std::string& name) { return fixture_path(name); };
  return {
      {"derivs_fx1", {"derivs", "--grammar", fx("fx1.wtg"), "--tree", "sigma(gamma(gamma(alpha)),gamma(alpha))"}},
      {"image_fx3", {"image", "--grammar", fx("fx3.wtg"), "--hom", fx("fx3.hom")}},
      {"image_stage_one_fx3", {"image", "--stage-one", "--grammar", fx("fx3.wtg"), "--hom", fx("fx3.hom")}},
      {"union_fx2", {"union", "--grammar", fx("fx2_g.wtg"), "--other", fx("fx2_gp.wtg")}},
      {"normalize_fx4", {"transform", "normalize", "--grammar", fx("fx4.wtg")}},
      {"eliminate_fx6", {"transform", "eliminate-zero", "--grammar", fx("fx6.wtg")}},
      {"support_fx2_gp", {"support", "--grammar", fx("fx2_gp.wtg")}},
      {"decide_finite_fx3_image", {"decide", "finite", "--grammar", fx("fx3.wtg"), "--hom", fx("fx3.hom"), "--explain"}},
      {"decide_empty_fx4", {"decide", "empty", "--grammar", fx("fx4.wtg"), "--explain"}},
      {"separation_3", {"separation", "--n", "3"}},
  };
}

inline std::string golden_path(const std::string& name) { return std::string(WTGC_GOLDEN_DIR) + "/" + name + ".txt"; }

/// The pinned output: the file without its leading `#` block and the blank
/// line after it.
inline std::string read_golden(const std::string& name) {
  std::string text = read_file(golden_path(name));
  std::size_t at = 0;
  while (at < text.size() && text[at] == '#') {
    const auto eol = text.find('\n', at);
    at = eol == std::string::npos ? text.size() : eol + 1;
  }
  if (at > 0 && at < text.size() && text[at] == '\n') ++at;
  return text.substr(at);
}

}  // namespace wtgc::testing

#endif  // WTGC_TESTS_GOLDEN_CASES_HPP
