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

// Seeded random matrix ensembles with prescribed structure.
//
// Sample i of a spec is generated from its own engine, seeded from
// (spec.seed, i), so any sample can be regenerated in isolation and the
// sequence does not depend on evaluation order.

#ifndef GENINV_ENSEMBLE_HPP_
#define GENINV_ENSEMBLE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "geninv/numkernel.hpp"

namespace geninv {

enum class EnsembleClass {
  kGeneric,         // complex gaussian entries
  kFixedRank,       // (n x r)(r x n) gaussian product
  kFixedIndex,      // S (C + J) S^-1 with a nilpotent block of index k
  kCoreEp,          // U (C + N) U*
  kEp,              // U (C + 0) U*
  kKEp,             // EP and nilpotent samples interleaved
  kNilpotent,       // S N S^-1
  kIntegerSmall,    // integer entries in [-3, 3]
  kIdempotentCore,  // S (I_r + N) S^-1, unitary S on even samples
  kMixed,           // cycles through the structured classes above
};

struct EnsembleSpec {
  int size = 5;
  int count = 1;
  std::uint64_t seed = 42;
  EnsembleClass cls = EnsembleClass::kGeneric;
  /// r for fixed_rank, k for fixed_index; -1 draws it per sample.
  int param = -1;

  /// Throws InvalidSpec when the spec cannot be generated.
  void validate() const;
  /// Canonical class text, e.g. "fixed_rank(2)".
  std::string class_name() const;
};

/// Parses "generic", "fixed_rank(2)", "fixed_index(3)", ... into cls/param.
/// Throws InvalidSpec on unknown names or malformed parameters.
void parse_ensemble_class(std::string_view text, EnsembleSpec& spec);

std::vector<CMatrix> gen(const EnsembleSpec& spec);
CMatrix gen_sample(const EnsembleSpec& spec, std::size_t i);

/// Seed of sample i; a splitmix64 mix of the two inputs.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i);

// Building blocks, exposed for tests and for the suites.
using Engine = std::mt19937_64;

CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Engine& rng);
CMatrix random_unitary(Eigen::Index n, Engine& rng);
/// U diag(s) V with s uniform in [0.5, 2] and U, V unitary.
CMatrix well_conditioned(Eigen::Index n, Engine& rng);
/// Strictly upper triangular, superdiagonal moduli in [0.5, 1.5]; index m.
CMatrix nilpotent_block(Eigen::Index m, Engine& rng);
/// Block diagonal of nilpotent blocks whose largest block has size k.
CMatrix nilpotent_with_index(Eigen::Index m, Eigen::Index k, Engine& rng);

}  // namespace geninv

#endif  // GENINV_ENSEMBLE_HPP_
