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

#ifndef GENINV_HS_DERIVED_HPP_
#define GENINV_HS_DERIVED_HPP_

#include "geninv/factor.hpp"
#include "geninv/geninv.hpp"

namespace geninv {

/// Blocks derived from the r x r core Sigma Q of a Hartwig-Spindelbock
/// factorisation.
template <typename Scalar>
struct HsDerived {
  Matrix<Scalar> core_drazin;   // (Sigma Q)^d
  Matrix<Scalar> core_coreep;   // (Sigma Q)^(+), the core-EP inverse
  Matrix<Scalar> Qhat;          // Q (Sigma Q)^d
  Matrix<Scalar> SigmaTilde;    // Qhat ((Sigma Q)^d)^2
  Matrix<Scalar> QTilde;        // Q (Sigma Q)^(+)
  Matrix<Scalar> Delta;         // Qhat Qhat^+
  Matrix<Scalar> DeltaHat;      // SigmaTilde SigmaTilde^+
  Matrix<Scalar> DeltaTilde;    // QTilde QTilde^+
};

template <typename Scalar>
HsDerived<Scalar> hs_derived(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  // Sigma Q can be zero in exact arithmetic; judge its rank on the scale of A.
  const auto g = ingredients(h.SigmaQ(), tol, static_cast<double>(h.sigma(0)));
  HsDerived<Scalar> d;
  d.core_drazin = g.drazin;
  d.core_coreep = core_ep_inv(g, tol);
  d.Qhat = h.Q * d.core_drazin;
  d.SigmaTilde = d.Qhat * d.core_drazin * d.core_drazin;
  d.QTilde = h.Q * d.core_coreep;
  d.Delta = d.Qhat * pinv(d.Qhat, tol);
  d.DeltaHat = d.SigmaTilde * pinv(d.SigmaTilde, tol);
  d.DeltaTilde = d.QTilde * pinv(d.QTilde, tol);
  return d;
}

/// Hermitian and idempotent within tolerance.
template <typename Derived>
Check orthogonal_projector_check(const Eigen::MatrixBase<Derived>& p, const Tolerance& tol = {}) {
  return compare(p, p.adjoint(), tol) && compare(p * p, p, tol);
}

}  // namespace geninv

#endif  // GENINV_HS_DERIVED_HPP_
