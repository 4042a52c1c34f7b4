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

// Binary relations A <=^g B defined by a generalized inverse g of A:
//
//   A <=^g B  iff  A^g A = A^g B  and  A A^g = B A^g,
//
// for g in {d, (d,+), (+,d), (c,+)}. Relations are evaluated as stated; no
// partial-order axioms are assumed.

#ifndef GENINV_ORDERS_HPP_
#define GENINV_ORDERS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "geninv/classify.hpp"

namespace geninv {

enum class OrderKind { kDrazin, kDmp, kMpd, kCmp };

inline constexpr std::array<OrderKind, 4> kAllOrderKinds = {
    OrderKind::kDrazin, OrderKind::kDmp, OrderKind::kMpd, OrderKind::kCmp};

inline std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::kDrazin: return "drazin";
    case OrderKind::kDmp: return "dmp";
    case OrderKind::kMpd: return "mpd";
    case OrderKind::kCmp: return "cmp";
  }
  return "?";
}

inline std::optional<OrderKind> parse_order_kind(std::string_view s) {
  for (OrderKind k : kAllOrderKinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct OrderReport {
  OrderKind kind = OrderKind::kDrazin;
  bool holds = false;
  Check left;   // A^g A = A^g B
  Check right;  // A A^g = B A^g

  double left_residual() const { return left.residual; }
  double right_residual() const { return right.residual; }
};

template <typename Scalar>
Matrix<Scalar> order_inverse(const Ingredients<Scalar>& g, OrderKind kind) {
  switch (kind) {
    case OrderKind::kDrazin: return g.drazin;
    case OrderKind::kDmp: return dmp(g);
    case OrderKind::kMpd: return mpd(g);
    case OrderKind::kCmp: return cmp(g);
  }
  return g.drazin;
}

template <typename Scalar, typename DB>
OrderReport leq(const Ingredients<Scalar>& g, const Eigen::MatrixBase<DB>& b, OrderKind kind,
                const Tolerance& tol = {}) {
  require_same_shape(g.a, b, "leq");
  const Matrix<Scalar> x = order_inverse(g, kind);
  const double scale = frobenius(x) * (frobenius(g.a) + frobenius(b));
  OrderReport rep;
  rep.kind = kind;
  rep.left = compare(x * g.a, x * b, tol, scale);
  rep.right = compare(g.a * x, b * x, tol, scale);
  rep.holds = rep.left.holds && rep.right.holds;
  return rep;
}

template <typename DA, typename DB>
OrderReport leq(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, OrderKind kind,
                const Tolerance& tol = {}) {
  require_same_shape(a, b, "leq");
  return leq(ingredients(a, tol), b, kind, tol);
}

template <typename Scalar, typename DB>
std::array<OrderReport, 4> leq_all(const Ingredients<Scalar>& g, const Eigen::MatrixBase<DB>& b,
                                   const Tolerance& tol = {}) {
  std::array<OrderReport, 4> out;
  for (std::size_t i = 0; i < kAllOrderKinds.size(); ++i) out[i] = leq(g, b, kAllOrderKinds[i], tol);
  return out;
}

/// A <= A_c under all four relations; every entry should hold.
template <typename Derived>
std::array<OrderReport, 4> core_upper_bound_check(const Eigen::MatrixBase<Derived>& a,
                                                  const Tolerance& tol = {}) {
  const auto g = ingredients(a, tol);
  return leq_all(g, g.core, tol);
}

/// Three equivalent forms of A <=^{d,+} B:
///   (i)   the definition,
///   (ii)  A^d = A^d A^+ B = B (A^d)^2,
///   (iii) A^k = A^k A^+ B = B A^d A^k.
template <typename Scalar, typename DB>
std::array<Check, 3> dmp_order_characterizations(const Ingredients<Scalar>& g,
                                                 const Eigen::MatrixBase<DB>& b,
                                                 const Tolerance& tol = {}) {
  require_same_shape(g.a, b, "dmp_order_characterizations");
  const Matrix<Scalar> bm = b;
  const Matrix<Scalar>& ad = g.drazin;
  const Matrix<Scalar>& ak = g.power_k;
  const double nb = frobenius(bm);
  const double nd = frobenius(ad);
  const double nk = frobenius(ak);
  const double np = frobenius(g.mp);
  const OrderReport def = leq(g, bm, OrderKind::kDmp, tol);
  const Check second = compare(ad, ad * g.mp * bm, tol, nd * np * nb) &&
                       compare(ad, bm * ad * ad, tol, nb * nd * nd);
  const Check third = compare(ak, ak * g.mp * bm, tol, nk * np * nb) &&
                      compare(ak, bm * ad * ak, tol, nb * nd * nk);
  return {def.left && def.right, second, third};
}

/// Three equivalent forms of A <=^{+,d} B:
///   (i)   the definition,
///   (ii)  A^d = (A^d)^2 B = B A^+ A^d,
///   (iii) A^k = A^k A^d B = B A^+ A^k.
template <typename Scalar, typename DB>
std::array<Check, 3> mpd_order_characterizations(const Ingredients<Scalar>& g,
                                                 const Eigen::MatrixBase<DB>& b,
                                                 const Tolerance& tol = {}) {
  require_same_shape(g.a, b, "mpd_order_characterizations");
  const Matrix<Scalar> bm = b;
  const Matrix<Scalar>& ad = g.drazin;
  const Matrix<Scalar>& ak = g.power_k;
  const double nb = frobenius(bm);
  const double nd = frobenius(ad);
  const double nk = frobenius(ak);
  const double np = frobenius(g.mp);
  const OrderReport def = leq(g, bm, OrderKind::kMpd, tol);
  const Check second = compare(ad, ad * ad * bm, tol, nd * nd * nb) &&
                       compare(ad, bm * g.mp * ad, tol, nb * np * nd);
  const Check third = compare(ak, ak * ad * bm, tol, nk * nd * nb) &&
                      compare(ak, bm * g.mp * ak, tol, nb * np * nk);
  return {def.left && def.right, second, third};
}

template <typename DA, typename DB>
std::array<Check, 3> dmp_order_characterizations(const Eigen::MatrixBase<DA>& a,
                                                 const Eigen::MatrixBase<DB>& b,
                                                 const Tolerance& tol = {}) {
  return dmp_order_characterizations(ingredients(a, tol), b, tol);
}

template <typename DA, typename DB>
std::array<Check, 3> mpd_order_characterizations(const Eigen::MatrixBase<DA>& a,
                                                 const Eigen::MatrixBase<DB>& b,
                                                 const Tolerance& tol = {}) {
  return mpd_order_characterizations(ingredients(a, tol), b, tol);
}

}  // namespace geninv

#endif  // GENINV_ORDERS_HPP_
