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

// Block expressions of the generalized inverses in Hartwig-Spindelbock
// coordinates. These are cross-checks for the product formulas in
// geninv.hpp, never the primary route.

#ifndef GENINV_CLOSED_FORMS_HPP_
#define GENINV_CLOSED_FORMS_HPP_

#include "geninv/hs_derived.hpp"

namespace geninv {

template <typename Scalar>
Matrix<Scalar> pinv_block_form(const HsDecomp<Scalar>& h) {
  const Matrix<Scalar> sinv = h.sigma.cwiseInverse().template cast<Scalar>().asDiagonal();
  return h.assemble(h.Q.adjoint() * sinv, h.zeros(h.r, h.tail()), h.P.adjoint() * sinv,
                    h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
Matrix<Scalar> drazin_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  const Matrix<Scalar>& cd = d.core_drazin;
  return h.assemble(cd, cd * cd * h.SigmaP(), h.zeros(h.tail(), h.r),
                    h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
Matrix<Scalar> core_part_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  const Matrix<Scalar> s = h.Sigma();
  return h.assemble(s * d.Qhat * h.SigmaQ(), s * d.Qhat * h.SigmaP(), h.zeros(h.tail(), h.r),
                    h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
Matrix<Scalar> dmp_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  return h.assemble(d.core_drazin, h.zeros(h.r, h.tail()), h.zeros(h.tail(), h.r),
                    h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
Matrix<Scalar> mpd_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  const Matrix<Scalar> right = d.core_drazin * h.SigmaP();
  const Matrix<Scalar> qq = h.Q.adjoint() * d.Qhat;
  const Matrix<Scalar> pq = h.P.adjoint() * d.Qhat;
  return h.assemble(qq, qq * right, pq, pq * right);
}

template <typename Scalar>
Matrix<Scalar> cmp_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  return h.assemble(h.Q.adjoint() * d.Qhat, h.zeros(h.r, h.tail()), h.P.adjoint() * d.Qhat,
                    h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
Matrix<Scalar> mpdmp_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d) {
  return h.assemble(h.Q.adjoint() * d.SigmaTilde, h.zeros(h.r, h.tail()),
                    h.P.adjoint() * d.SigmaTilde, h.zeros(h.tail(), h.tail()));
}

/// (A^{+,d,+})^+ = U [[St^+ Q, St^+ P], [0, 0]] U*.
template <typename Scalar>
Matrix<Scalar> mpdmp_pinv_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                     const Tolerance& tol = {}) {
  const Matrix<Scalar> sp = pinv(d.SigmaTilde, tol);
  return h.assemble(sp * h.Q, sp * h.P, h.zeros(h.tail(), h.r), h.zeros(h.tail(), h.tail()));
}

/// (A^{C,(+)})^+ = U [[Qt^+ Q, Qt^+ P], [0, 0]] U*.
template <typename Scalar>
Matrix<Scalar> cce_pinv_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                   const Tolerance& tol = {}) {
  const Matrix<Scalar> qp = pinv(d.QTilde, tol);
  return h.assemble(qp * h.Q, qp * h.P, h.zeros(h.tail(), h.r), h.zeros(h.tail(), h.tail()));
}

/// (A^{c,+})^+ = U [[Qhat^+ Q, Qhat^+ P], [0, 0]] U*.
template <typename Scalar>
Matrix<Scalar> cmp_pinv_block_form(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                   const Tolerance& tol = {}) {
  const Matrix<Scalar> qp = pinv(d.Qhat, tol);
  return h.assemble(qp * h.Q, qp * h.P, h.zeros(h.tail(), h.r), h.zeros(h.tail(), h.tail()));
}

template <typename Scalar>
struct DualPath {
  Matrix<Scalar> value;  // primary route
  Check agreement;       // primary vs closed form
};

/// Moore-Penrose inverse of the MPDMP matrix, computed directly and checked
/// against the block closed form. Throws ClosedFormMismatch on disagreement.
template <typename Derived>
DualPath<typename Derived::Scalar> mpdmp_pinv_checked(const Eigen::MatrixBase<Derived>& a,
                                                      const Tolerance& tol = {}) {
  using Scalar = typename Derived::Scalar;
  const auto h = hs_decompose(a, tol);
  const auto d = hs_derived(h, tol);
  DualPath<Scalar> out;
  out.value = pinv(mpdmp(a, tol), tol);
  out.agreement = compare(out.value, mpdmp_pinv_block_form(h, d, tol), tol);
  if (!out.agreement.holds) {
    throw ClosedFormMismatch("mpdmp_pinv: direct and block forms differ by " +
                             std::to_string(out.agreement.residual));
  }
  return out;
}

template <typename Derived>
PlainOf<Derived> mpdmp_pinv(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return mpdmp_pinv_checked(a, tol).value;
}

}  // namespace geninv

#endif  // GENINV_CLOSED_FORMS_HPP_
