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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fixtures.hpp"
#include "geninv/closed_forms.hpp"
#include "geninv/factor.hpp"

using namespace geninv;
using namespace geninv::testing;

TEST_CASE("conj_transpose") {
  CHECK(conj_transpose(cm({{0, 1}, {0, 0}})) == cm({{0, 0}, {1, 0}}));
  CMatrix i1(1, 1);
  i1(0, 0) = Complex(0, 1);
  CHECK(conj_transpose(i1)(0, 0) == Complex(0, -1));
  CHECK(conj_transpose(conj_transpose(A1())) == A1());
}

TEST_CASE("matmul") {
  CHECK(matmul(CMatrix::Identity(3, 3), A1()) == A1());
  CHECK(matmul(A3(), B3()) == cm({{4, 0, 0}, {0, 0, 0}, {4, 0, 0}}));
  const CMatrix a = A1();
  CHECK(matmul(matmul(a, a), a) == mat_power(a, 3));
  CHECK_THROWS_AS(matmul(cm({{1, 2}}), cm({{1, 2}})), DimensionMismatch);
}

TEST_CASE("approx_eq") {
  const Tolerance tol;
  CHECK(approx_eq(A1(), A1(), tol));
  CMatrix nudged = A1();
  nudged(0, 0) += 1e-13;
  CHECK(approx_eq(A1(), nudged, tol));
  CHECK_FALSE(approx_eq(A1(), A2(), tol));
  CHECK(approx_eq(A2(), A1(), tol) == approx_eq(A1(), A2(), tol));
  CHECK_THROWS_AS(approx_eq(A1(), cm({{1}}), tol), DimensionMismatch);
}

TEST_CASE("compare reports residual and bound") {
  const Tolerance tol;
  const Check c = compare(A1(), A2(), tol);
  CHECK_FALSE(c.holds);
  CHECK(c.residual == doctest::Approx(frobenius(A1() - A2())));
  CHECK(c.bound == doctest::Approx(tol.eq_abs + tol.eq_rel * (1 + frobenius(A1()) + frobenius(A2()))));
  CHECK(c.ratio() > 1.0);
}

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.eq_abs = 0.0;
  CHECK_THROWS_AS(t.validate(), InvalidSpec);
  Tolerance r;
  r.rank_rel = -1.0;
  CHECK_THROWS_AS(r.validate(), InvalidSpec);
}

TEST_CASE("svd") {
  const auto d = svd(cm({{3, 0}, {0, 1}}));
  CHECK(d.S(0) == doctest::Approx(3.0));
  CHECK(d.S(1) == doctest::Approx(1.0));

  const CMatrix a = A1();
  const auto f = svd(a);
  CMatrix s = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) s(i, i) = f.S(i);
  CHECK(frobenius(f.U * s * f.V.adjoint() - a) < 1e-12);
  CHECK(f.S(2) < 1e-14);
  CHECK(frobenius(f.U.adjoint() * f.U - CMatrix::Identity(3, 3)) < 1e-12);

  const auto z = svd(CMatrix::Zero(2, 3));
  CHECK(z.S.size() == 2);
  CHECK(z.S.maxCoeff() == 0.0);
}

TEST_CASE("numerical_rank") {
  CHECK(numerical_rank(A1()) == 2);
  CHECK(numerical_rank(CMatrix::Identity(5, 5)) == 5);
  CHECK(numerical_rank(A3()) == 2);
  CHECK(numerical_rank(CMatrix::Zero(3, 2)) == 0);
}

TEST_CASE("pinv fixtures") {
  CHECK(max_abs_diff(pinv(A1()), cm({{0.5, -0.25, 0}, {0, 0, 0}, {0, 0.5, 0}})) < 1e-12);
  CHECK(max_abs_diff(pinv(A2()), cm({{1, 0, 0}, {0, 0, 0}, {-1, 1, 0}})) < 1e-12);
  const CMatrix z = pinv(CMatrix::Zero(2, 4));
  CHECK(z.rows() == 4);
  CHECK(z.cols() == 2);
  CHECK(z.isZero());
}

TEST_CASE("hs_decompose on A1") {
  const CMatrix a = A1();
  const auto h = hs_decompose(a);
  CHECK(h.r == 2);
  CHECK(frobenius(hs_reconstruct(h) - a) <= 1e-10);
  CHECK(hs_constraint_residual(h) <= 1e-10);
  CHECK(max_abs_diff(pinv_block_form(h), pinv(a)) < 1e-12);
}

TEST_CASE("hs_decompose on a unitary matrix") {
  const CMatrix u = cm({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const auto h = hs_decompose(u);
  CHECK(h.r == 3);
  CHECK(h.P.cols() == 0);
  CHECK(frobenius(h.Sigma() - CMatrix::Identity(3, 3)) < 1e-12);
  CHECK(frobenius(h.Q * h.Q.adjoint() - CMatrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("hs_decompose on A3") {
  const auto h = hs_decompose(A3());
  CHECK(h.r == 2);
  CHECK(hs_constraint_residual(h) <= 1e-10);
}

TEST_CASE("hs_decompose rejects zero and rectangular input") {
  CHECK_THROWS_AS(hs_decompose(CMatrix::Zero(3, 3)), ZeroMatrix);
  CHECK_THROWS_AS(hs_decompose(CMatrix::Zero(3, 3)), PreconditionViolated);
  CHECK_THROWS_AS(hs_decompose(cm({{1, 2, 3}})), DimensionMismatch);
}

TEST_CASE("hs_derived blocks") {
  const Tolerance tol;
  const auto h = hs_decompose(A1());
  const auto d = hs_derived(h);
  CHECK(orthogonal_projector_check(d.Delta, tol).holds);
  CHECK(orthogonal_projector_check(d.DeltaHat, tol).holds);
  CHECK(orthogonal_projector_check(d.DeltaTilde, tol).holds);
  CHECK(frobenius(d.Delta - d.Delta.adjoint()) <= 1e-10);

  const CMatrix n = cm({{2, 1, 0}, {0, 3, 1}, {1, 0, 1}});
  const auto hn = hs_decompose(n);
  const auto dn = hs_derived(hn);
  CHECK(frobenius(dn.Qhat - hn.Q * hn.SigmaQ().inverse()) < 1e-10);
  CHECK(frobenius(dn.Delta - CMatrix::Identity(3, 3)) < 1e-10);

  const auto h2 = hs_decompose(cm({{1, 1}, {0, 0}}));
  const auto d2 = hs_derived(h2);
  CHECK(std::abs(frobenius(h2.P.adjoint() * d2.Qhat) - 0.5) < 1e-12);
}

TEST_CASE("Sigma Q of a square-zero matrix is judged against A") {
  const CMatrix a = jordan0(2);
  const auto h = hs_decompose(a);
  const auto d = hs_derived(h);
  CHECK(d.core_drazin.isZero(1e-12));
  CHECK(d.Qhat.isZero(1e-12));
}
