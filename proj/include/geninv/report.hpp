// Copyright 2026 The geninv Authors.
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

// Tallies produced by the system verifiers and the suite runner.

#ifndef GENINV_REPORT_HPP_
#define GENINV_REPORT_HPP_

#include <string>
#include <vector>

namespace geninv {

struct TheoremTally {
  std::string name;
  int samples = 0;
  int failures = 0;
  /// Samples on which the hypothesis (or left side of an iff) held.
  int positives = 0;
  double worst_residual = 0.0;
};

struct VerificationReport {
  std::string suite;
  int samples = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::vector<TheoremTally> theorems;
  /// First few failure descriptions, in sample order.
  std::vector<std::string> messages;

  static constexpr std::size_t kMaxMessages = 20;

  bool passed() const { return failures == 0; }

  TheoremTally& tally(const std::string& name);
  const TheoremTally* find(const std::string& name) const;

  /// One outcome for `theorem`. `residual` feeds worst_residual; pass 0 for
  /// outcomes that carry no meaningful residual.
  void record(const std::string& theorem, bool ok, double residual, bool positive = false,
              const std::string& what = {});

  /// Appends another report's tallies; `samples` adds up.
  void merge(const VerificationReport& other);
};

}  // namespace geninv

#endif  // GENINV_REPORT_HPP_
