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

#include <cstdio>
#include <limits>

#include "fixtures.hpp"
#include "geninv/classify.hpp"
#include "geninv/ensemble.hpp"
#include "geninv/matrix_io.hpp"
#include "geninv/rational.hpp"
#include "geninv/suite.hpp"
#include "geninv/systems.hpp"

using namespace geninv;
using namespace geninv::testing;
using exact::GaussRational;
using exact::RMatrix;

namespace {

GaussRational q(long num, long den = 1) {
  mpq_class r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return GaussRational(r);
}

RMatrix rmat(std::initializer_list<std::initializer_list<GaussRational>> rows) {
  RMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

RMatrix exact_A1() { return RMatrix{{2, 0, 1}, {0, 0, 2}, {0, 0, 0}}; }
RMatrix exact_A2() { return RMatrix{{1, 0, 0}, {1, 0, 1}, {0, 0, 0}}; }
RMatrix exact_A3() { return RMatrix{{2, 0, 0}, {0, 0, 0}, {2, 2, 0}}; }

}  // namespace

// ---------------------------------------------------------------- oracle

TEST_CASE("exact pinv") {
  CHECK(exact::exact_pinv(exact_A1()) ==
        rmat({{q(1, 2), q(-1, 4), q(0)}, {q(0), q(0), q(0)}, {q(0), q(1, 2), q(0)}}));
  CHECK(exact::exact_pinv(RMatrix::identity(4)) == RMatrix::identity(4));
  CHECK(exact::exact_pinv(exact_A2()) == RMatrix{{1, 0, 0}, {0, 0, 0}, {-1, 1, 0}});
  CHECK(exact::exact_pinv(RMatrix(2, 3)).is_zero());
}

TEST_CASE("exact pinv satisfies the Penrose equations exactly") {
  RMatrix a{{1, 2, 0}, {2, 4, 0}, {0, 1, -1}};
  a(0, 2) = GaussRational(mpq_class(1), mpq_class(1, 3u));
  const RMatrix x = exact::exact_pinv(a);
  CHECK(a * x * a == a);
  CHECK(x * a * x == x);
  CHECK((a * x).adjoint() == a * x);
  CHECK((x * a).adjoint() == x * a);
}

TEST_CASE("exact drazin") {
  CHECK(exact::exact_drazin(exact_A1()) ==
        rmat({{q(1, 2), q(0), q(1, 4)}, {q(0), q(0), q(0)}, {q(0), q(0), q(0)}}));
  CHECK(exact::exact_drazin(exact_A3()) ==
        rmat({{q(1, 2), q(0), q(0)}, {q(0), q(0), q(0)}, {q(1, 2), q(0), q(0)}}));
  CHECK(exact::exact_drazin(RMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}).is_zero());
  CHECK(exact::exact_index(exact_A1()) == 2);
  CHECK(exact::exact_index(RMatrix::identity(3)) == 0);
  CHECK(exact::rank(exact_A3()) == 2);
}

TEST_CASE("exact inverses bundle") {
  const auto ex = exact::exact_inverses(exact_A2());
  CHECK(ex.index == 2);
  CHECK(ex.mpdmp == RMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(ex.dmp == RMatrix{{1, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  CHECK(ex.mpd == RMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
}

TEST_CASE("exact conversion of doubles") {
  CMatrix m(1, 2);
  m(0, 0) = Complex(0.1, -3.5);
  m(0, 1) = Complex(1e-300, 0);
  CHECK(RMatrix::from_cmatrix(m).to_cmatrix() == m);
  CHECK_THROWS_AS(exact::inverse(exact_A1()), PreconditionViolated);
}

// ------------------------------------------------------------- ensembles

TEST_CASE("core_ep samples are core-EP") {
  EnsembleSpec spec;
  spec.cls = EnsembleClass::kCoreEp;
  spec.count = 50;
  for (const CMatrix& a : gen(spec)) CHECK(is_core_ep(a));
}

TEST_CASE("fixed_index samples have the requested index") {
  for (int k : {1, 2, 3}) {
    EnsembleSpec spec;
    parse_ensemble_class("fixed_index(" + std::to_string(k) + ")", spec);
    spec.count = 20;
    for (const CMatrix& a : gen(spec)) CHECK(index(a) == k);
  }
}

TEST_CASE("other classes") {
  EnsembleSpec spec;
  spec.count = 20;
  spec.cls = EnsembleClass::kNilpotent;
  for (const CMatrix& a : gen(spec)) CHECK(drazin(a).isZero(1e-10));
  spec.cls = EnsembleClass::kEp;
  for (const CMatrix& a : gen(spec)) CHECK(is_ep(a));
  spec.cls = EnsembleClass::kKEp;
  for (const CMatrix& a : gen(spec)) CHECK(is_k_ep(a));
  parse_ensemble_class("fixed_rank(3)", spec);
  for (const CMatrix& a : gen(spec)) CHECK(numerical_rank(a) == 3);
  spec.cls = EnsembleClass::kIntegerSmall;
  spec.param = -1;
  for (const CMatrix& a : gen(spec)) {
    CHECK(a.imag().isZero(0.0));
    CHECK(a.real().maxCoeff() <= 3.0);
    CHECK(a.real().minCoeff() >= -3.0);
    CHECK((a.real().array() == a.real().array().round()).all());
  }
  spec.cls = EnsembleClass::kIdempotentCore;
  for (const CMatrix& a : gen(spec)) {
    const int k = index(a);
    CHECK(max_abs_diff(mat_power(a, k + 1), mat_power(a, k)) < 1e-8);
  }
}

TEST_CASE("generation is reproducible per seed") {
  EnsembleSpec spec;
  spec.cls = EnsembleClass::kMixed;
  spec.count = 12;
  spec.seed = 99;
  const auto first = gen(spec);
  const auto second = gen(spec);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == second[i]);
    CHECK(gen_sample(spec, i) == first[i]);
  }
  spec.seed = 100;
  CHECK_FALSE(gen(spec)[0] == first[0]);
}

TEST_CASE("invalid ensemble specs") {
  EnsembleSpec spec;
  CHECK_THROWS_AS(parse_ensemble_class("bogus", spec), InvalidSpec);
  CHECK_THROWS_AS(parse_ensemble_class("generic(2)", spec), InvalidSpec);
  CHECK_THROWS_AS(parse_ensemble_class("fixed_rank(x)", spec), InvalidSpec);
  spec.size = 17;
  CHECK_THROWS_AS(gen(spec), InvalidSpec);
  spec.size = 4;
  spec.count = 0;
  CHECK_THROWS_AS(gen(spec), InvalidSpec);
  spec.count = 1;
  parse_ensemble_class("fixed_rank(5)", spec);
  CHECK_THROWS_AS(gen(spec), InvalidSpec);
  parse_ensemble_class("fixed_index(5)", spec);
  CHECK_THROWS_AS(gen(spec), InvalidSpec);
  CHECK(spec.class_name() == "fixed_index(5)");
}

// --------------------------------------------------------------- systems

TEST_CASE("designated solutions on A1") {
  for (const SystemId id : {SystemId::kA2, SystemId::kA2Dual, SystemId::kA1, SystemId::kRemarkI,
                            SystemId::kRemarkII, SystemId::kRemarkIII, SystemId::kRemarkIV,
                            SystemId::kRemarkV, SystemId::kA101}) {
    const auto rep = verify_system(A1(), id);
    CHECK_MESSAGE(rep.passed(), to_string(id));
    for (const auto& r : system_residuals(A1(), designated_solution(A1(), id), id)) {
      CHECK(r.check.relative() <= 1e-9);
    }
  }
  CHECK(max_abs_diff(designated_solution(A1(), SystemId::kA2), drazin(A1()) * pinv(A1())) < 1e-12);
  CHECK(max_abs_diff(designated_solution(A1(), SystemId::kA101), core_nilpotent(A1()).core) < 1e-12);
}

TEST_CASE("perturbations break the systems") {
  const auto rep = verify_system(A1(), SystemId::kA1);
  const auto* u = rep.find("a1:uniqueness");
  REQUIRE(u != nullptr);
  CHECK(u->samples == 10);
  CHECK(u->failures == 0);
}

TEST_CASE("kj43 needs a core-EP matrix") {
  CHECK_THROWS_AS(verify_system(A1(), SystemId::kKj43), PreconditionViolated);
  EnsembleSpec spec;
  spec.cls = EnsembleClass::kCoreEp;
  spec.count = 5;
  for (const CMatrix& a : gen(spec)) CHECK(verify_system(a, SystemId::kKj43).passed());
}

TEST_CASE("system ids") {
  for (const SystemId id : kAllSystems) CHECK(parse_system_id(to_string(id)) == id);
  CHECK_THROWS_AS(verify_system(A1(), "nonsense"), UnknownId);
  CHECK_THROWS_AS(verify_system(cm({{1, 2}}), SystemId::kA2), DimensionMismatch);
}

TEST_CASE("solution families") {
  const Tolerance tol;
  const CMatrix zero = CMatrix::Zero(3, 3);
  CHECK(max_abs_diff(solution_family(A1(), zero, SolutionFamily::kQ1), mpd(A1())) < 1e-14);
  CHECK(solution_family_check(A1(), zero, SolutionFamily::kQ1).relative() <= 1e-9);

  Engine rng(3);
  const CMatrix f = gaussian(3, 3, rng);
  const CMatrix x1 = solution_family(A1(), f, SolutionFamily::kQ1);
  const auto g1 = ingredients(A1());
  CHECK(compare(x1 * A1(), g1.mp * g1.core, tol).holds);
  CHECK(solution_family_check(A1(), f, SolutionFamily::kQ1).relative() <= 1e-9);

  const CMatrix x2 = solution_family(A3(), f, SolutionFamily::kQ2);
  const auto g3 = ingredients(A3());
  CHECK(compare(g3.core * g3.mp, A3() * x2, tol).holds);
  CHECK(solution_family_check(A3(), f, SolutionFamily::kQ2).relative() <= 1e-9);
  CHECK_THROWS_AS(solution_family(A1(), cm({{1}}), SolutionFamily::kQ1), DimensionMismatch);
}

// ---------------------------------------------------------------- suites

TEST_CASE("report merge") {
  VerificationReport a;
  a.samples = 1;
  a.record("x", true, 0.5, true);
  VerificationReport b;
  b.samples = 2;
  b.record("x", false, 2.0, false, "bad");
  b.record("y", true, 0.1);
  a.merge(b);
  CHECK(a.samples == 3);
  CHECK(a.failures == 1);
  CHECK(a.worst_residual == 2.0);
  REQUIRE(a.find("x") != nullptr);
  CHECK(a.find("x")->samples == 2);
  CHECK(a.find("x")->positives == 1);
  CHECK(a.messages.size() == 1);
  CHECK_FALSE(a.passed());
}

TEST_CASE("every suite id runs") {
  for (const auto& id : suite_ids()) {
    EnsembleSpec spec;
    spec.size = 4;
    spec.count = 8;
    spec.cls = id == "oracle" ? EnsembleClass::kIntegerSmall : EnsembleClass::kMixed;
    const auto rep = run_suite(id, spec);
    CHECK_MESSAGE(rep.passed(), id);
    CHECK(rep.samples == 8);
  }
}

TEST_CASE("suite errors") {
  CHECK_THROWS_AS(run_suite("nonsense", EnsembleSpec{}), UnknownId);
  CHECK_FALSE(is_suite_id("nonsense"));
  EnsembleSpec generic;
  CHECK_THROWS_AS(run_suite("oracle", generic), InvalidSpec);
}

TEST_CASE("suite reports do not depend on the thread count") {
  EnsembleSpec spec;
  spec.cls = EnsembleClass::kMixed;
  spec.count = 24;
  const auto one = run_suite("core_ep_equiv", spec, {}, 1);
  const auto many = run_suite("core_ep_equiv", spec, {}, 6);
  CHECK(one.samples == many.samples);
  CHECK(one.failures == many.failures);
  CHECK(one.worst_residual == many.worst_residual);
  REQUIRE(one.theorems.size() == many.theorems.size());
  for (std::size_t i = 0; i < one.theorems.size(); ++i) {
    CHECK(one.theorems[i].name == many.theorems[i].name);
    CHECK(one.theorems[i].positives == many.theorems[i].positives);
  }
}

// ------------------------------------------------------------- matrix io

TEST_CASE("matrix files round-trip bit for bit") {
  Engine rng(17);
  const CMatrix m = gaussian(4, 3, rng) * 1e3;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(matrix_to_json(m, true)) == m);

  CMatrix odd(1, 3);
  odd(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -0.0);
  odd(0, 1) = Complex(std::numeric_limits<double>::max(), 1.0 / 3.0);
  odd(0, 2) = Complex(0.1, 1e-300);
  CHECK(matrix_from_json(matrix_to_json(odd)) == odd);

  const std::string path = "geninv_roundtrip_test.json";
  write_matrix_file(path, m);
  CHECK(read_matrix_file(path) == m);
  std::remove(path.c_str());

  const CMatrix empty(3, 0);
  CHECK(matrix_from_json(matrix_to_json(empty)).rows() == 3);
}

TEST_CASE("malformed matrix files") {
  CHECK_THROWS_AS(matrix_from_json("not json"), ParseError);
  CHECK_THROWS_AS(matrix_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[1]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 2, "data": [[[1, 0]]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 2, "cols": 1, "data": [[[1, 0]]]})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": -1, "cols": 1, "data": []})"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(R"({"rows": 1, "cols": 1, "data": [[["a", 0]]]})"), ParseError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/geninv.json"), ParseError);
  CMatrix bad(1, 1);
  bad(0, 0) = Complex(std::numeric_limits<double>::infinity(), 0);
  CHECK_THROWS_AS(matrix_to_json(bad), PreconditionViolated);
}
