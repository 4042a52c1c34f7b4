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

// Composite generalized inverses built from Moore-Penrose and Drazin
// products:
//
//   DMP    A^{d,+}   = A^d A A^+
//   MPD    A^{+,d}   = A^+ A A^d
//   CMP    A^{c,+}   = A^+ A_c A^+
//   MPDMP  A^{+,d,+} = A^+ A^d A^+
//   core-EP A^(+)    = A^d A^k (A^k)^+
//   CCE    A^{C,(+)} = A^+ A A^(+) A A^+

#ifndef GENINV_GENINV_HPP_
#define GENINV_GENINV_HPP_

#include <cmath>
#include <utility>

#include "geninv/drazin.hpp"

namespace geninv {

/// The ingredients shared by every composite inverse, computed once.
template <typename Scalar>
struct Ingredients {
  Matrix<Scalar> a;
  Matrix<Scalar> mp;       // A^+
  Matrix<Scalar> drazin;   // A^d
  Matrix<Scalar> core;     // A_c
  Matrix<Scalar> power_k;  // A^k
  int index = 0;
  int rank = 0;
  /// Reference norm for rank decisions: max(||A||_2, caller scale).
  double scale = 0.0;
};

/// `scale` is the norm of a parent matrix when A is a computed block (see
/// index()).
template <typename Derived>
Ingredients<typename Derived::Scalar> ingredients(const Eigen::MatrixBase<Derived>& a,
                                                  const Tolerance& tol = {}, double scale = 0.0) {
  require_square(a, "generalized inverse");
  Ingredients<typename Derived::Scalar> g;
  g.a = a;
  g.scale = std::max(spectral_norm(a), scale);
  g.index = index(a, tol, g.scale);
  g.rank = numerical_rank(a, tol, g.scale);
  g.mp = pinv(a, tol, g.scale);
  g.drazin = drazin_greville(a, g.index, tol, g.scale);
  g.core = g.a * g.drazin * g.a;
  g.power_k = mat_power(a, g.index);
  return g;
}

template <typename Scalar>
Matrix<Scalar> dmp(const Ingredients<Scalar>& g) { return g.drazin * g.a * g.mp; }
template <typename Scalar>
Matrix<Scalar> mpd(const Ingredients<Scalar>& g) { return g.mp * g.a * g.drazin; }
template <typename Scalar>
Matrix<Scalar> cmp(const Ingredients<Scalar>& g) { return g.mp * g.core * g.mp; }
template <typename Scalar>
Matrix<Scalar> mpdmp(const Ingredients<Scalar>& g) { return g.mp * g.drazin * g.mp; }

template <typename Scalar>
Matrix<Scalar> core_ep_inv(const Ingredients<Scalar>& g, const Tolerance& tol = {}) {
  const double reference = std::pow(g.scale, g.index);
  return g.drazin * g.power_k * pinv(g.power_k, tol, reference);
}

template <typename Scalar>
Matrix<Scalar> cce(const Ingredients<Scalar>& g, const Tolerance& tol = {}) {
  return g.mp * g.a * core_ep_inv(g, tol) * g.a * g.mp;
}

template <typename Derived>
PlainOf<Derived> dmp(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return dmp(ingredients(a, tol));
}
template <typename Derived>
PlainOf<Derived> mpd(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return mpd(ingredients(a, tol));
}
template <typename Derived>
PlainOf<Derived> cmp(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return cmp(ingredients(a, tol));
}
template <typename Derived>
PlainOf<Derived> mpdmp(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return mpdmp(ingredients(a, tol));
}
template <typename Derived>
PlainOf<Derived> core_ep_inv(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return core_ep_inv(ingredients(a, tol), tol);
}
template <typename Derived>
PlainOf<Derived> cce(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  return cce(ingredients(a, tol), tol);
}

/// DMP and MPD through Moore-Penrose inverses of powers only:
///   A^{d,+} = A^k (A^(2k+1))^+ A^(k+1) A^+,
///   A^{+,d} = A^+ A^(k+1) (A^(2k+1))^+ A^k.
template <typename Derived>
std::pair<PlainOf<Derived>, PlainOf<Derived>> greville_forms(const Eigen::MatrixBase<Derived>& a,
                                                             const Tolerance& tol = {}) {
  require_square(a, "greville_forms");
  const int k = index(a, tol);
  const PlainOf<Derived> ak = mat_power(a, k);
  const PlainOf<Derived> ak1 = ak * a;
  const double reference = std::pow(spectral_norm(a), 2 * k + 1);
  const PlainOf<Derived> middle = pinv(mat_power(a, 2 * k + 1), tol, reference);
  const PlainOf<Derived> ap = pinv(a, tol);
  return {ak * middle * ak1 * ap, ap * ak1 * middle * ak};
}

template <typename Scalar>
struct InverseReport {
  Matrix<Scalar> mp, drazin, dmp, mpd, cmp, mpdmp, core_ep, cce;
  Matrix<Scalar> core;  // A_c, carried for convenience
  int index = 0;
  int rank = 0;
};

template <typename Scalar>
InverseReport<Scalar> inverse_report(const Ingredients<Scalar>& g, const Tolerance& tol = {}) {
  InverseReport<Scalar> r;
  r.mp = g.mp;
  r.drazin = g.drazin;
  r.dmp = dmp(g);
  r.mpd = mpd(g);
  r.cmp = cmp(g);
  r.mpdmp = mpdmp(g);
  r.core_ep = core_ep_inv(g, tol);
  r.cce = g.mp * g.a * r.core_ep * g.a * g.mp;
  r.core = g.core;
  r.index = g.index;
  r.rank = g.rank;
  return r;
}

template <typename Derived>
InverseReport<typename Derived::Scalar> inverse_report(const Eigen::MatrixBase<Derived>& a,
                                                       const Tolerance& tol = {}) {
  return inverse_report(ingredients(a, tol), tol);
}

}  // namespace geninv

#endif  // GENINV_GENINV_HPP_
