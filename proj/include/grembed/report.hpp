/*
   Copyright 2026 The grembed Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef GREMBED_REPORT_HPP
#define GREMBED_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grembed/ring.hpp"
#include "grembed/serialize.hpp"

namespace grembed {

enum class Verdict { Pass, Fail, ExpectedFailureObserved };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::ExpectedFailureObserved:
      return "expected-failure-observed";
  }
  return "?";
}

/// Outcome of one verification run.
///
/// A run either expects no counterexample (verdict pass iff `failures` is
/// empty) or, with `expect_failure`, expects at least one witness (verdict
/// expected-failure-observed iff `failures` is nonempty).
struct CheckReport {
  std::string name;
  Ring ring;
  std::map<std::string, long long> parameters;
  std::uint64_t cases_checked = 0;
  std::vector<Json> failures;
  std::chrono::nanoseconds elapsed{0};
  bool expect_failure = false;
  Verdict verdict = Verdict::Pass;

  void finalize() {
    if (expect_failure) {
      verdict = failures.empty() ? Verdict::Fail : Verdict::ExpectedFailureObserved;
    } else {
      verdict = failures.empty() ? Verdict::Pass : Verdict::Fail;
    }
  }

  /// True for pass, and for expected-failure-observed when a failure was expected.
  bool ok() const { return verdict != Verdict::Fail; }

  /// One-line machine-readable summary.
  std::string summary_line() const {
    std::string s = "CHECK " + name + " ring=" + ring.to_string();
    for (const auto& [k, v] : parameters) s += " " + k + "=" + std::to_string(v);
    s += " cases=" + std::to_string(cases_checked);
    s += " failures=" + std::to_string(failures.size());
    s += " elapsed_ms=" + std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    s += " verdict=" + to_string(verdict);
    return s;
  }
};

inline Json to_json(const CheckReport& r) {
  return {{"name", r.name},
          {"ring", to_json(r.ring)},
          {"parameters", r.parameters},
          {"cases_checked", r.cases_checked},
          {"failures", r.failures},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
          {"expect_failure", r.expect_failure},
          {"verdict", to_string(r.verdict)}};
}

/// Merges `part` into `total`: counts add, witnesses concatenate.
inline void absorb(CheckReport& total, const CheckReport& part) {
  total.cases_checked += part.cases_checked;
  total.failures.insert(total.failures.end(), part.failures.begin(), part.failures.end());
  total.elapsed += part.elapsed;
}

}  // namespace grembed

#endif  // GREMBED_REPORT_HPP
