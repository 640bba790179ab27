// Copyright 2026 The weylkit Authors
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

#ifndef WEYLKIT_REPORT_HPP_
#define WEYLKIT_REPORT_HPP_

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace weylkit {

// One checked law on one fixture.
struct LawCheck {
  std::string law;
  std::string fixture;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string fixture) : fixture_(std::move(fixture)) {}

  const std::string& fixture() const { return fixture_; }
  const std::vector<LawCheck>& checks() const { return checks_; }

  // Records a law; `counterexample` is kept only on failure.
  bool check(std::string law, bool passed, std::string counterexample = {}) {
    checks_.push_back({std::move(law), fixture_, passed,
                       passed ? std::string{} : std::move(counterexample)});
    return passed;
  }

  void merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const LawCheck& c) { return c.passed; });
  }
  bool passed(const std::string& law) const {
    bool seen = false;
    for (const auto& c : checks_)
      if (c.law == law) {
        if (!c.passed) return false;
        seen = true;
      }
    return seen;
  }
  std::vector<LawCheck> failures() const {
    std::vector<LawCheck> out;
    for (const auto& c : checks_)
      if (!c.passed) out.push_back(c);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Report& r) {
    for (const auto& c : r.checks_) {
      os << (c.passed ? "PASS " : "FAIL ") << c.law;
      if (!c.fixture.empty()) os << " [" << c.fixture << "]";
      if (!c.passed && !c.counterexample.empty()) os << ": " << c.counterexample;
      os << '\n';
    }
    return os;
  }

 private:
  std::string fixture_;
  std::vector<LawCheck> checks_;
};

}  // namespace weylkit

#endif  // WEYLKIT_REPORT_HPP_
