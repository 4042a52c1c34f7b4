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

// Matrix classes (EP, core-EP, k-EP) and EP-ness criteria for the composite
// inverses. Every predicate is a residual test under the shared Tolerance and
// returns a Check so the residual travels with the decision. Criteria stated
// in Hartwig-Spindelbock blocks have an intrinsic counterpart (`*_direct`)
// that they must agree with.

#ifndef GENINV_CLASSIFY_HPP_
#define GENINV_CLASSIFY_HPP_

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "geninv/closed_forms.hpp"

namespace geninv {

struct LabeledCheck {
  std::string label;
  Check check;
};

/// XY = YX, with the rounding scale of the products taken into account.
template <typename DA, typename DB>
Check commute_check(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y,
                    const Tolerance& tol) {
  return compare(x * y, y * x, tol, frobenius(x) * frobenius(y));
}

/// M M^+ = M^+ M.
template <typename Derived>
Check ep_check(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol = {}) {
  require_square(m, "is_ep");
  const PlainOf<Derived> mp = pinv(m, tol);
  return commute_check(m, mp, tol);
}

template <typename Derived>
bool is_ep(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return ep_check(a, tol).holds;
}

template <typename Scalar>
Check core_ep_check(const Ingredients<Scalar>& g, const Tolerance& tol = {}) {
  return commute_check(g.mp, g.core, tol);
}

template <typename Derived>
bool is_core_ep(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return core_ep_check(ingredients(a, tol), tol).holds;
}

/// A^k A^+ = A^+ A^k with k = Ind(A).
template <typename Scalar>
Check k_ep_check(const Ingredients<Scalar>& g, const Tolerance& tol = {}) {
  return commute_check(g.power_k, g.mp, tol);
}

template <typename Derived>
bool is_k_ep(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return k_ep_check(ingredients(a, tol), tol).holds;
}

/// The block form of core-EPness:
///   (a) Q* Qhat = (Sigma Q)^d,  (b) P* Qhat = 0,  (c) (Sigma Q)^d Sigma P = 0.
template <typename Scalar>
std::array<Check, 3> core_ep_block_conditions(const HsDecomp<Scalar>& h,
                                              const HsDerived<Scalar>& d,
                                              const Tolerance& tol = {}) {
  const Matrix<Scalar> sp = h.SigmaP();
  return {compare(h.Q.adjoint() * d.Qhat, d.core_drazin, tol,
                  frobenius(h.Q) * frobenius(d.Qhat)),
          is_zero(h.P.adjoint() * d.Qhat, tol, frobenius(h.P) * frobenius(d.Qhat)),
          is_zero(d.core_drazin * sp, tol, frobenius(d.core_drazin) * frobenius(sp))};
}

template <typename Scalar>
std::array<Check, 3> core_ep_block_conditions(const HsDecomp<Scalar>& h,
                                              const Tolerance& tol = {}) {
  return core_ep_block_conditions(h, hs_derived(h, tol), tol);
}

/// The seven equivalent statements of core-EPness, in order:
///   (i)   A^+ A_c = A_c A^+
///   (ii)  A^{+,d,+} = (A^d)^3
///   (iii) A^{+,d,+} A^{d,+} = (A^d)^4
///   (iv)  A^{+,d,+} A = A A^{+,d,+}
///   (v)   A^{+,d,+} A_c = A_c A^{+,d,+}
///   (vi)  A^{+,d,+} A^d = A^d A^{+,d,+}
///   (vii) A^{+,d,+} A^d = (A^{d,+})^4
template <typename Scalar>
std::array<LabeledCheck, 7> core_ep_conditions(const Ingredients<Scalar>& g,
                                               const Tolerance& tol = {}) {
  const Matrix<Scalar> x = mpdmp(g);
  const Matrix<Scalar> dp = dmp(g);
  const Matrix<Scalar>& ad = g.drazin;
  const Matrix<Scalar> ad2 = ad * ad;
  const Matrix<Scalar> dp2 = dp * dp;
  const double nx = frobenius(x);
  const double nd = frobenius(ad);
  const double nmp = frobenius(g.mp);
  return {LabeledCheck{"i", core_ep_check(g, tol)},
          LabeledCheck{"ii", compare(x, ad2 * ad, tol, nmp * nmp * nd + nd * nd * nd)},
          LabeledCheck{"iii", compare(x * dp, ad2 * ad2, tol, nx * frobenius(dp) + std::pow(nd, 4))},
          LabeledCheck{"iv", commute_check(x, g.a, tol)},
          LabeledCheck{"v", commute_check(x, g.core, tol)},
          LabeledCheck{"vi", commute_check(x, ad, tol)},
          LabeledCheck{"vii", compare(x * ad, dp2 * dp2, tol, nx * nd + std::pow(frobenius(dp), 4))}};
}

template <typename Scalar>
struct ClassReport {
  int rank = 0;
  int index = 0;
  Check ep;
  Check core_ep;
  Check k_ep;
  std::array<LabeledCheck, 7> core_ep_conditions;
  /// (a), (b), (c); empty for the zero matrix, which has no factorisation.
  std::vector<LabeledCheck> block_conditions;
  /// Conditions whose verdict differs from `core_ep`.
  std::vector<std::string> warnings;

  bool is_ep() const { return ep.holds; }
  bool is_core_ep() const { return core_ep.holds; }
  bool is_k_ep() const { return k_ep.holds; }
  bool consistent() const { return warnings.empty(); }
};

template <typename Derived>
ClassReport<typename Derived::Scalar> core_ep_equiv_report(const Eigen::MatrixBase<Derived>& a,
                                                           const Tolerance& tol = {}) {
  using Scalar = typename Derived::Scalar;
  const auto g = ingredients(a, tol);
  ClassReport<Scalar> rep;
  rep.rank = g.rank;
  rep.index = g.index;
  rep.ep = commute_check(g.a, g.mp, tol);
  rep.core_ep = core_ep_check(g, tol);
  rep.k_ep = k_ep_check(g, tol);
  rep.core_ep_conditions = core_ep_conditions(g, tol);
  for (const auto& c : rep.core_ep_conditions) {
    if (c.check.holds != rep.core_ep.holds) {
      rep.warnings.push_back("condition (" + c.label + ") disagrees with core-EP test");
    }
  }
  if (g.rank > 0) {
    const auto blocks = core_ep_block_conditions(hs_decompose(a, tol), tol);
    rep.block_conditions = {{"a", blocks[0]}, {"b", blocks[1]}, {"c", blocks[2]}};
    const bool all = blocks[0].holds && blocks[1].holds && blocks[2].holds;
    if (all != rep.core_ep.holds) {
      rep.warnings.push_back("block conditions (a)-(c) disagree with core-EP test");
    }
  }
  return rep;
}

// EP-ness of A^{c,+}: Q* Delta Q = Qhat^+ Qhat and Delta P = 0.
template <typename Scalar>
Check cmp_ep_criterion(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                       const Tolerance& tol = {}) {
  const Matrix<Scalar> rhs = pinv(d.Qhat, tol) * d.Qhat;
  return compare(h.Q.adjoint() * d.Delta * h.Q, rhs, tol) &&
         is_zero(d.Delta * h.P, tol, frobenius(d.Delta) * frobenius(h.P));
}

template <typename Derived>
Check cmp_ep_direct(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return ep_check(cmp(a, tol), tol);
}

// EP-ness of A^{+,d,+}: Q* DeltaHat Q = St^+ St and DeltaHat P = 0.
template <typename Scalar>
Check mpdmp_ep_criterion(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                         const Tolerance& tol = {}) {
  const Matrix<Scalar> rhs = pinv(d.SigmaTilde, tol) * d.SigmaTilde;
  return compare(h.Q.adjoint() * d.DeltaHat * h.Q, rhs, tol) &&
         is_zero(d.DeltaHat * h.P, tol, frobenius(d.DeltaHat) * frobenius(h.P));
}

template <typename Derived>
Check mpdmp_ep_direct(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return ep_check(mpdmp(a, tol), tol);
}

/// Consequences of an EP MPDMP matrix, as residual checks:
/// [PP*, DeltaHat] = 0, [QQ*, DeltaHat] = 0, DeltaHat = Q St^+ St Q*.
/// Throws PreconditionViolated when the criterion does not hold.
template <typename Scalar>
std::array<Check, 3> mpdmp_ep_consequences(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                           const Tolerance& tol = {}) {
  if (!mpdmp_ep_criterion(h, d, tol).holds) {
    throw PreconditionViolated("mpdmp_ep_consequences: A^{+,d,+} is not EP");
  }
  const Matrix<Scalar> pp = h.P * h.P.adjoint();
  const Matrix<Scalar> qq = h.Q * h.Q.adjoint();
  const Matrix<Scalar> st = d.SigmaTilde;
  return {commute_check(pp, d.DeltaHat, tol), commute_check(qq, d.DeltaHat, tol),
          compare(d.DeltaHat, h.Q * pinv(st, tol) * st * h.Q.adjoint(), tol)};
}

/// Same consequences for the CCE inverse with DeltaTilde and QTilde.
template <typename Scalar>
std::array<Check, 3> cce_ep_consequences(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                         const Tolerance& tol = {}) {
  const Matrix<Scalar> pp = h.P * h.P.adjoint();
  const Matrix<Scalar> qq = h.Q * h.Q.adjoint();
  const Matrix<Scalar>& qt = d.QTilde;
  return {commute_check(pp, d.DeltaTilde, tol), commute_check(qq, d.DeltaTilde, tol),
          compare(d.DeltaTilde, h.Q * pinv(qt, tol) * qt * h.Q.adjoint(), tol)};
}

// EP-ness of A^{C,(+)}: Q* DeltaTilde Q = Qt^+ Qt and DeltaTilde P = 0. A
// positive verdict whose consequences fail raises ClosedFormMismatch.
template <typename Scalar>
Check cce_ep_criterion(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                       const Tolerance& tol = {}) {
  const Matrix<Scalar> rhs = pinv(d.QTilde, tol) * d.QTilde;
  const Check c = compare(h.Q.adjoint() * d.DeltaTilde * h.Q, rhs, tol) &&
                  is_zero(d.DeltaTilde * h.P, tol, frobenius(d.DeltaTilde) * frobenius(h.P));
  if (c.holds) {
    for (const Check& q : cce_ep_consequences(h, d, tol)) {
      if (!q.holds) {
        throw ClosedFormMismatch("cce_ep_criterion: criterion holds but a consequence fails");
      }
    }
  }
  return c;
}

template <typename Derived>
Check cce_ep_direct(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return ep_check(cce(a, tol), tol);
}

/// (A^{d,+})^+ commutes with A^d iff (Sigma Q)^d is EP and
/// (Sigma Q)^d Sigma P = 0.
template <typename Scalar>
Check dmp_pinv_commute_criterion(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                 const Tolerance& tol = {}) {
  const Matrix<Scalar> sp = h.SigmaP();
  return ep_check(d.core_drazin, tol) &&
         is_zero(d.core_drazin * sp, tol, frobenius(d.core_drazin) * frobenius(sp));
}

/// The same criterion with the second condition reduced to Q Sigma P = 0.
/// The reduction is only valid when Ind(Sigma Q) <= 1; kept so the gap can be
/// exhibited.
template <typename Scalar>
Check dmp_pinv_commute_criterion_reduced(const HsDecomp<Scalar>& h, const HsDerived<Scalar>& d,
                                         const Tolerance& tol = {}) {
  const Matrix<Scalar> sp = h.SigmaP();
  return ep_check(d.core_drazin, tol) &&
         is_zero(h.Q * sp, tol, frobenius(h.Q) * frobenius(sp));
}

template <typename Derived>
Check dmp_pinv_commute_direct(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  const auto g = ingredients(a, tol);
  return commute_check(pinv(dmp(g), tol), g.drazin, tol);
}

/// A^{c,+} is EP iff A^{+,d} (A^{c,+})^+ = (A^{c,+})^+ A^{d,+}.
template <typename Derived>
Check wqrt_criterion(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  const auto g = ingredients(a, tol);
  if (g.rank == 0) throw ZeroMatrix("wqrt_criterion: A must be nonzero");
  const auto cp = pinv(cmp(g), tol);
  const auto pd = mpd(g);
  const auto dp = dmp(g);
  return compare(pd * cp, cp * dp, tol, frobenius(cp) * (frobenius(pd) + frobenius(dp)));
}

// Overloads taking only the factorisation.
template <typename Scalar>
Check cmp_ep_criterion(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  return cmp_ep_criterion(h, hs_derived(h, tol), tol);
}
template <typename Scalar>
Check mpdmp_ep_criterion(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  return mpdmp_ep_criterion(h, hs_derived(h, tol), tol);
}
template <typename Scalar>
Check cce_ep_criterion(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  return cce_ep_criterion(h, hs_derived(h, tol), tol);
}
template <typename Scalar>
std::array<Check, 3> mpdmp_ep_consequences(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  return mpdmp_ep_consequences(h, hs_derived(h, tol), tol);
}
template <typename Scalar>
Check dmp_pinv_commute_criterion(const HsDecomp<Scalar>& h, const Tolerance& tol = {}) {
  return dmp_pinv_commute_criterion(h, hs_derived(h, tol), tol);
}

}  // namespace geninv

#endif  // GENINV_CLASSIFY_HPP_
