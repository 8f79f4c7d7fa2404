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

#pragma once

// Brute-force verification: every domain of T_d of a given size up to
// isomorphism (equivalently, every unlabeled tree with maximum degree <= d),
// the true profile obtained by exhaustive minimization, and a sweep that
// re-checks each structural statement on every enumerated domain.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotree/domain.hpp"

namespace isotree {

// kBadParameter if d < 2 or k < 1.
std::vector<Domain> enumerate_domains(int d, int k);

struct BruteProfile {
  std::int64_t min_boundary = 0;
  std::vector<Domain> minimizers;
};

BruteProfile brute_profile(int d, int k);

struct CheckResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  // First failing domain, in domain format v1.
  std::optional<std::string> counterexample;
  std::string first_failure;
};

struct VerificationReport {
  int d = 0;
  int k_max = 0;
  std::int64_t domains = 0;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool all_passed() const;
};

// Runs every check on every domain with 1 <= |D| <= k_max.
// kBadParameter unless d >= 2 and k_max >= 2.
VerificationReport verify_suite(int d, int k_max);

std::string format_report(const VerificationReport& report);
// One JSON object per line and per check.
std::string report_jsonl(const VerificationReport& report);

}  // namespace isotree
