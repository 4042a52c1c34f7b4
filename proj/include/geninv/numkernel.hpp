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

// Dense matrix aliases, checked arithmetic and the comparison policy shared
// by every other header.
//
// All functions are templated on the Eigen expression type and return plain
// (evaluated) matrices of the same scalar. The library is exercised with
// std::complex<double>, but real scalars work unchanged.

#ifndef GENINV_NUMKERNEL_HPP_
#define GENINV_NUMKERNEL_HPP_

#include <algorithm>
#include <complex>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "geninv/errors.hpp"

namespace geninv {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector =
    Eigen::Matrix<typename Eigen::NumTraits<Scalar>::Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = Matrix<Complex>;

/// Plain matrix type matching the scalar of an Eigen expression.
template <typename Derived>
using PlainOf = Matrix<typename Derived::Scalar>;

/// The single comparison policy. Passed explicitly to every predicate.
struct Tolerance {
  /// Absolute floor for matrix equality.
  double eq_abs = 1e-10;
  /// Relative Frobenius factor for matrix equality.
  double eq_rel = 1e-9;
  /// Singular-value cutoff factor, relative to the largest singular value.
  /// Unset means epsilon * max(m, n) * 64 for the matrix at hand.
  std::optional<double> rank_rel;

  template <typename Real = double>
  double rank_cutoff(Eigen::Index rows, Eigen::Index cols) const {
    if (rank_rel) return *rank_rel;
    return static_cast<double>(std::numeric_limits<Real>::epsilon()) *
           static_cast<double>(std::max(rows, cols)) * 64.0;
  }

  void validate() const {
    if (!(eq_abs > 0.0) || !(eq_rel > 0.0) || (rank_rel && !(*rank_rel > 0.0))) {
      throw InvalidSpec("tolerance fields must be strictly positive");
    }
  }
};

inline std::string shape_string(Eigen::Index r, Eigen::Index c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

template <typename DA, typename DB>
void require_same_shape(const Eigen::MatrixBase<DA>& a,
                        const Eigen::MatrixBase<DB>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": " +
                            shape_string(a.rows(), a.cols()) + " vs " +
                            shape_string(b.rows(), b.cols()));
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(what) + ": square matrix required, got " +
                            shape_string(a.rows(), a.cols()));
  }
}

template <typename Derived>
PlainOf<Derived> conj_transpose(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

template <typename DA, typename DB>
PlainOf<DA> matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape_string(a.rows(), a.cols()) +
                            " times " + shape_string(b.rows(), b.cols()));
  }
  return a * b;
}

template <typename Derived>
double frobenius(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<double>(a.norm());
}

template <typename Derived>
PlainOf<Derived> identity_like(const Eigen::MatrixBase<Derived>& a) {
  return PlainOf<Derived>::Identity(a.rows(), a.cols());
}

/// Outcome of one residual test. `residual` is ||lhs - rhs||_F and `scale`
/// is 1 + ||lhs||_F + ||rhs||_F (+ any factor scale supplied by the caller).
struct Check {
  bool holds = true;
  double residual = 0.0;
  double bound = 0.0;
  double scale = 1.0;

  /// Residual divided by the acceptance bound; <= 1 means `holds`.
  double ratio() const { return bound > 0.0 ? residual / bound : 0.0; }
  /// Scale-free residual, comparable to Tolerance::eq_rel.
  double relative() const { return residual / scale; }

  Check operator&&(const Check& other) const {
    Check out;
    out.holds = holds && other.holds;
    const bool mine = ratio() >= other.ratio();
    out.bound = mine ? bound : other.bound;
    out.scale = mine ? scale : other.scale;
    out.residual = mine ? residual : other.residual;
    return out;
  }
};

/// Compares lhs and rhs under `tol`:
///   ||lhs - rhs||_F <= eq_abs + eq_rel * (1 + ||lhs||_F + ||rhs||_F + scale).
/// `scale` lets callers testing a product against zero account for the size of
/// its factors.
template <typename DA, typename DB>
Check compare(const Eigen::MatrixBase<DA>& lhs, const Eigen::MatrixBase<DB>& rhs,
              const Tolerance& tol, double scale = 0.0) {
  require_same_shape(lhs, rhs, "compare");
  Check c;
  c.residual = frobenius(lhs - rhs);
  c.scale = 1.0 + frobenius(lhs) + frobenius(rhs) + scale;
  c.bound = tol.eq_abs + tol.eq_rel * c.scale;
  c.holds = c.residual <= c.bound;
  return c;
}

template <typename Derived>
Check is_zero(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol,
              double scale = 0.0) {
  return compare(a, PlainOf<Derived>::Zero(a.rows(), a.cols()), tol, scale);
}

template <typename DA, typename DB>
bool approx_eq(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
               const Tolerance& tol = {}) {
  return compare(a, b, tol).holds;
}

/// [a, b] = ab - ba.
template <typename DA, typename DB>
PlainOf<DA> commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return matmul(a, b) - matmul(b, a);
}

/// a^k by repeated multiplication; a^0 is the identity.
template <typename Derived>
PlainOf<Derived> mat_power(const Eigen::MatrixBase<Derived>& a, int k) {
  require_square(a, "mat_power");
  PlainOf<Derived> out = identity_like(a);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

/// Block helper: [[tl, tr], [bl, br]] with conforming sizes.
template <typename Scalar>
Matrix<Scalar> block2x2(const Matrix<Scalar>& tl, const Matrix<Scalar>& tr,
                        const Matrix<Scalar>& bl, const Matrix<Scalar>& br) {
  Matrix<Scalar> out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  out.topLeftCorner(tl.rows(), tl.cols()) = tl;
  out.topRightCorner(tr.rows(), tr.cols()) = tr;
  out.bottomLeftCorner(bl.rows(), bl.cols()) = bl;
  out.bottomRightCorner(br.rows(), br.cols()) = br;
  return out;
}

}  // namespace geninv

#endif  // GENINV_NUMKERNEL_HPP_
