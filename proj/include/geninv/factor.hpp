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

// Singular value decomposition, numerical rank, Moore-Penrose inverse and the
// Hartwig-Spindelbock factorisation
//
//   A = U [[Sigma Q, Sigma P], [0, 0]] U*,   Q Q* + P P* = I_r.

#ifndef GENINV_FACTOR_HPP_
#define GENINV_FACTOR_HPP_

#include <Eigen/SVD>

#include "geninv/numkernel.hpp"

namespace geninv {

template <typename Scalar>
struct SvdResult {
  Matrix<Scalar> U;       // m x m unitary
  RealVector<Scalar> S;   // min(m, n), nonincreasing
  Matrix<Scalar> V;       // n x n unitary
};

/// Full SVD, A = U diag(S) V*. Throws NonConvergence if the factors come back
/// non-finite (only possible for non-finite input).
template <typename Derived>
SvdResult<typename Derived::Scalar> svd(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Plain = Matrix<Scalar>;
  if (!a.allFinite()) throw NonConvergence("svd: input has non-finite entries");
  Eigen::JacobiSVD<Plain> solver(a.eval(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult<Scalar> out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  if (!out.U.allFinite() || !out.V.allFinite() || !out.S.allFinite()) {
    throw NonConvergence("svd: Jacobi sweeps produced non-finite factors");
  }
  return out;
}

/// Number of singular values above cutoff * max(sigma_max, reference) given
/// sorted values. `reference` lets callers measure a computed product such as
/// A^k against the scale ||A||^k it was formed from.
template <typename Vec>
int rank_from_singular_values(const Vec& s, double cutoff, double reference = 0.0) {
  if (s.size() == 0 || !(s(0) > 0)) return 0;
  const double threshold = cutoff * std::max(static_cast<double>(s(0)), reference);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (static_cast<double>(s(i)) > threshold) ++r;
  }
  return r;
}

template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {},
                   double reference = 0.0) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (a.size() == 0) return 0;
  const auto s = svd(a).S;
  return rank_from_singular_values(s, tol.rank_cutoff<Real>(a.rows(), a.cols()), reference);
}

/// Largest singular value; 0 for an empty matrix.
template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  return static_cast<double>(svd(a).S(0));
}

/// Moore-Penrose inverse V diag(S+) U*, inverting only singular values above
/// the rank cutoff.
template <typename Derived>
PlainOf<Derived> pinv(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {},
                      double reference = 0.0) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (a.size() == 0) return PlainOf<Derived>::Zero(a.cols(), a.rows());
  const auto f = svd(a);
  const int r = rank_from_singular_values(f.S, tol.rank_cutoff<Real>(a.rows(), a.cols()),
                                          reference);
  RealVector<typename Derived::Scalar> inv_s = f.S.head(r).cwiseInverse();
  return f.V.leftCols(r) * inv_s.asDiagonal() * f.U.leftCols(r).adjoint();
}

template <typename Scalar>
struct HsDecomp {
  Matrix<Scalar> U;          // n x n unitary
  RealVector<Scalar> sigma;  // r positive singular values, nonincreasing
  Matrix<Scalar> Q;          // r x r
  Matrix<Scalar> P;          // r x (n - r)
  int r = 0;

  Eigen::Index n() const { return U.rows(); }
  Matrix<Scalar> Sigma() const { return sigma.template cast<Scalar>().asDiagonal(); }
  Matrix<Scalar> SigmaQ() const { return Sigma() * Q; }
  Matrix<Scalar> SigmaP() const { return Sigma() * P; }

  /// U [[tl, tr], [bl, br]] U* for conforming r / (n - r) blocks.
  Matrix<Scalar> assemble(const Matrix<Scalar>& tl, const Matrix<Scalar>& tr,
                          const Matrix<Scalar>& bl, const Matrix<Scalar>& br) const {
    return U * block2x2(tl, tr, bl, br) * U.adjoint();
  }

  Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) const {
    return Matrix<Scalar>::Zero(rows, cols);
  }

  /// Size of the trailing block.
  Eigen::Index tail() const { return n() - r; }
};

/// Hartwig-Spindelbock factors from the SVD A = W diag(Sigma, 0) V*:
/// U := W and [Q | P] := first r rows of V* W.
template <typename Derived>
HsDecomp<typename Derived::Scalar> hs_decompose(const Eigen::MatrixBase<Derived>& a,
                                                const Tolerance& tol = {}) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  require_square(a, "hs_decompose");
  const auto f = svd(a);
  const int r = rank_from_singular_values(f.S, tol.rank_cutoff<Real>(a.rows(), a.cols()));
  if (r == 0) throw ZeroMatrix("hs_decompose: rank(A) = r > 0 is required");
  HsDecomp<Scalar> h;
  h.U = f.U;
  h.sigma = f.S.head(r);
  h.r = r;
  const Matrix<Scalar> qp = (f.V.adjoint() * f.U).topRows(r);
  h.Q = qp.leftCols(r);
  h.P = qp.rightCols(a.cols() - r);
  return h;
}

template <typename Scalar>
Matrix<Scalar> hs_reconstruct(const HsDecomp<Scalar>& h) {
  return h.assemble(h.SigmaQ(), h.SigmaP(), h.zeros(h.tail(), h.r),
                    h.zeros(h.tail(), h.tail()));
}

/// ||QQ* + PP* - I_r||_F.
template <typename Scalar>
double hs_constraint_residual(const HsDecomp<Scalar>& h) {
  const Matrix<Scalar> m = h.Q * h.Q.adjoint() + h.P * h.P.adjoint();
  return frobenius(m - Matrix<Scalar>::Identity(h.r, h.r));
}

}  // namespace geninv

#endif  // GENINV_FACTOR_HPP_
