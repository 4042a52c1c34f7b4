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

// Matrix equation systems with a unique solution, and the affine solution
// families of AX = A_c A^+ and XA = A^+ A_c.
//
// With P_A = A A^+ and Q_A = A^+ A:
//
//   a2         X P_A = X,        X A = A^d                      X = A^d A^+
//   a2_dual    Q_A X = X,        A X = A^d                      X = A^+ A^d
//   a1         X A^3 X = X,      A X = A^d A^+,  X A = A^+ A^d  X = A^+ A^d A^+
//   remark_i   Q_A X P_A = X,    A X = A^d A^+                  X = A^+ A^d A^+
//   remark_ii  Q_A X P_A = X,    A X A = A^d                    X = A^+ A^d A^+
//   remark_iii Q_A X P_A = X,    X A = A^+ A^d                  X = A^+ A^d A^+
//   remark_iv  X P_A = X,        X A = A^+ A^d                  X = A^+ A^d A^+
//   remark_v   Q_A X = X,        A X = A^d A^+                  X = A^+ A^d A^+
//   a101       A^k X = A^(k+1),  A X = X A,  X A^d X = X        X = A_c
//   kj43       A^3 X = A A^d,    (I - A^k (A^k)^+) X = 0        X = A^+ A^d A^+
//
// kj43 is only claimed for core-EP A.
//
// Uniqueness is probed by refutation: the designated solution is moved along
// a random direction that keeps one equation satisfied where possible, and
// at least one equation must then fail by a clear margin.

#ifndef GENINV_SYSTEMS_HPP_
#define GENINV_SYSTEMS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geninv/numkernel.hpp"
#include "geninv/report.hpp"

namespace geninv {

enum class SystemId {
  kA2,
  kA2Dual,
  kA1,
  kRemarkI,
  kRemarkII,
  kRemarkIII,
  kRemarkIV,
  kRemarkV,
  kA101,
  kKj43,
};

inline constexpr std::array<SystemId, 10> kAllSystems = {
    SystemId::kA2,       SystemId::kA2Dual,   SystemId::kA1,       SystemId::kRemarkI,
    SystemId::kRemarkII, SystemId::kRemarkIII, SystemId::kRemarkIV, SystemId::kRemarkV,
    SystemId::kA101,     SystemId::kKj43};

std::string_view to_string(SystemId id);
std::optional<SystemId> parse_system_id(std::string_view s);

struct SystemOptions {
  int perturbations = 10;
  std::uint64_t seed = 7;
  /// A perturbation must push some equation residual above this.
  double min_violation = 1e-4;
};

/// Residual of one equation: ||lhs - rhs||_F and the relative form.
struct EquationResidual {
  std::string equation;
  Check check;
};

/// Designated solution of the system for A.
CMatrix designated_solution(const CMatrix& a, SystemId id, const Tolerance& tol = {});

/// Residuals of every equation of the system at X.
std::vector<EquationResidual> system_residuals(const CMatrix& a, const CMatrix& x, SystemId id,
                                               const Tolerance& tol = {});

/// Substitutes the designated solution, then perturbs it. Tallies are
/// "<id>:solution" (one entry per equation, residual relative) and
/// "<id>:uniqueness" (one entry per perturbation, residual = the largest
/// absolute equation residual reached). Throws PreconditionViolated for kj43
/// on non-core-EP input and DimensionMismatch for non-square A.
VerificationReport verify_system(const CMatrix& a, SystemId id, const Tolerance& tol = {},
                                 const SystemOptions& opts = {});

/// Overload taking the textual id; throws UnknownId.
VerificationReport verify_system(const CMatrix& a, std::string_view id,
                                 const Tolerance& tol = {}, const SystemOptions& opts = {});

enum class SolutionFamily { kQ1, kQ2 };

/// q1: X = A^{+,d} + F (I - A A^+), which solves X A = A^+ A_c.
/// q2: X = A^{d,+} + (I - A^+ A) F, which solves A X = A_c A^+.
/// Throws ClosedFormMismatch if the member misses its equation.
CMatrix solution_family(const CMatrix& a, const CMatrix& f, SolutionFamily which,
                        const Tolerance& tol = {});

/// Residual of the family member's equation.
Check solution_family_check(const CMatrix& a, const CMatrix& f, SolutionFamily which,
                            const Tolerance& tol = {});

}  // namespace geninv

#endif  // GENINV_SYSTEMS_HPP_
