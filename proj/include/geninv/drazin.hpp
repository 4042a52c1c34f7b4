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

// Index, Drazin and group inverses, core-nilpotent splitting and the
// canonical projectors.

#ifndef GENINV_DRAZIN_HPP_
#define GENINV_DRAZIN_HPP_

#include <cmath>
#include <string>
#include <utility>

#include "geninv/factor.hpp"

namespace geninv {

/// Smallest k >= 0 with rank(A^k) = rank(A^(k+1)); A^0 = I. The zero matrix
/// has index 1. The rank of A^j is measured against s^j with
/// s = max(||A||_2, scale); pass the norm of a parent matrix as `scale` when A
/// is a computed block whose true value may be zero.
template <typename Derived>
int index(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}, double scale = 0.0) {
  require_square(a, "index");
  const int n = static_cast<int>(a.rows());
  const double norm = std::max(spectral_norm(a), scale);
  PlainOf<Derived> power = identity_like(a);
  double reference = 1.0;
  int rank_k = n;
  for (int k = 0; k < n; ++k) {
    power = power * a;
    reference *= norm;
    const int rank_next = numerical_rank(power, tol, reference);
    if (rank_next == rank_k) return k;
    rank_k = rank_next;
  }
  return n;
}

/// Greville form A^k (A^(2k+1))^+ A^k for an explicit k. Any k >= Ind(A)
/// gives the Drazin inverse.
template <typename Derived>
PlainOf<Derived> drazin_greville(const Eigen::MatrixBase<Derived>& a, int k,
                                 const Tolerance& tol = {}, double scale = 0.0) {
  require_square(a, "drazin");
  const PlainOf<Derived> ak = mat_power(a, k);
  const double reference = std::pow(std::max(spectral_norm(a), scale), 2 * k + 1);
  return ak * pinv(mat_power(a, 2 * k + 1), tol, reference) * ak;
}

template <typename Derived>
PlainOf<Derived> drazin(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return drazin_greville(a, index(a, tol), tol);
}

template <typename Derived>
PlainOf<Derived> group_inverse(const Eigen::MatrixBase<Derived>& a,
                               const Tolerance& tol = {}) {
  const int k = index(a, tol);
  if (k > 1) {
    throw IndexTooLarge("group inverse requires Ind(A) <= 1, got Ind(A) = " +
                        std::to_string(k));
  }
  return drazin_greville(a, k, tol);
}

template <typename Scalar>
struct CoreNilpotent {
  Matrix<Scalar> core;       // A_c = A A^d A
  Matrix<Scalar> nilpotent;  // A_n = A - A_c
  int index = 0;
};

template <typename Derived>
CoreNilpotent<typename Derived::Scalar> core_nilpotent(const Eigen::MatrixBase<Derived>& a,
                                                       const Tolerance& tol = {}) {
  const int k = index(a, tol);
  const PlainOf<Derived> ad = drazin_greville(a, k, tol);
  CoreNilpotent<typename Derived::Scalar> out;
  out.core = a * ad * a;
  out.nilpotent = a - out.core;
  out.index = k;
  return out;
}

/// (P_A, Q_A) = (A A^+, A^+ A).
template <typename Derived>
std::pair<PlainOf<Derived>, PlainOf<Derived>> projectors(const Eigen::MatrixBase<Derived>& a,
                                                         const Tolerance& tol = {}) {
  const PlainOf<Derived> ap = pinv(a, tol);
  return {a * ap, ap * a};
}

/// A A^d: the projector onto R(A^k) along N(A^k).
template <typename Derived>
PlainOf<Derived> spectral_projector(const Eigen::MatrixBase<Derived>& a,
                                    const Tolerance& tol = {}) {
  return a * drazin(a, tol);
}

}  // namespace geninv

#endif  // GENINV_DRAZIN_HPP_
