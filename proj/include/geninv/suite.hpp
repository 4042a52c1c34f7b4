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

// Theorem suites run over a random ensemble.
//
// Biconditionals are scored in both directions: a sample fails when the two
// sides disagree. Conditional statements are scored only on samples where the
// hypothesis holds. Samples are evaluated concurrently, but each one owns its
// engine and its result slot, so reports do not depend on scheduling.

#ifndef GENINV_SUITE_HPP_
#define GENINV_SUITE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "geninv/ensemble.hpp"
#include "geninv/report.hpp"

namespace geninv {

/// Every id accepted by run_suite, in documentation order.
const std::vector<std::string>& suite_ids();
bool is_suite_id(std::string_view id);

/// Evaluates one suite on a single matrix. `seed` drives any auxiliary
/// random matrices the suite draws (B, F, Z, perturbations).
VerificationReport run_suite_sample(std::string_view id, const CMatrix& a, std::uint64_t seed,
                                    const Tolerance& tol = {});

/// Runs the suite on gen(spec). threads = 0 picks the hardware concurrency.
/// Throws UnknownId for an unknown suite and InvalidSpec for a bad spec.
VerificationReport run_suite(std::string_view id, const EnsembleSpec& spec,
                             const Tolerance& tol = {}, unsigned threads = 0);

}  // namespace geninv

#endif  // GENINV_SUITE_HPP_
