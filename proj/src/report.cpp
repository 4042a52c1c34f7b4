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

#include "geninv/report.hpp"

#include <algorithm>

namespace geninv {

TheoremTally& VerificationReport::tally(const std::string& name) {
  for (auto& t : theorems) {
    if (t.name == name) return t;
  }
  theorems.push_back(TheoremTally{name});
  return theorems.back();
}

const TheoremTally* VerificationReport::find(const std::string& name) const {
  for (const auto& t : theorems) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

void VerificationReport::record(const std::string& theorem, bool ok, double residual,
                                bool positive, const std::string& what) {
  TheoremTally& t = tally(theorem);
  ++t.samples;
  if (positive) ++t.positives;
  t.worst_residual = std::max(t.worst_residual, residual);
  worst_residual = std::max(worst_residual, residual);
  if (!ok) {
    ++t.failures;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(what.empty() ? theorem : what);
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  if (suite.empty()) suite = other.suite;
  samples += other.samples;
  failures += other.failures;
  worst_residual = std::max(worst_residual, other.worst_residual);
  for (const auto& t : other.theorems) {
    TheoremTally& dst = tally(t.name);
    dst.samples += t.samples;
    dst.failures += t.failures;
    dst.positives += t.positives;
    dst.worst_residual = std::max(dst.worst_residual, t.worst_residual);
  }
  for (const auto& m : other.messages) {
    if (messages.size() >= kMaxMessages) break;
    messages.push_back(m);
  }
}

}  // namespace geninv
