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

#include "fixtures.hpp"
#include "geninv/orders.hpp"

using namespace geninv;
using namespace geninv::testing;

namespace {

bool all_equal(const std::array<Check, 3>& c) {
  return c[0].holds == c[1].holds && c[1].holds == c[2].holds;
}

}  // namespace

TEST_CASE("A3 against B3") {
  CHECK(leq(A3(), B3(), OrderKind::kDrazin).holds);
  CHECK(leq(A3(), B3(), OrderKind::kDmp).holds);
  CHECK_FALSE(leq(A3(), B3(), OrderKind::kMpd).holds);
  CHECK_FALSE(leq(A3(), B3(), OrderKind::kCmp).holds);
}

TEST_CASE("equal inputs are related") {
  for (const CMatrix& a : {A1(), A2(), A3()}) {
    for (const auto kind : kAllOrderKinds) CHECK(leq(a, a, kind).holds);
  }
}

TEST_CASE("report carries both residuals") {
  const auto r = leq(A1(), A2(), OrderKind::kDrazin);
  CHECK(r.holds == (r.left.holds && r.right.holds));
  CHECK(r.left_residual() == r.left.residual);
  CHECK(r.right_residual() == r.right.residual);
  CHECK_THROWS_AS(leq(A1(), cm({{1, 0}, {0, 1}}), OrderKind::kDmp), DimensionMismatch);
}

TEST_CASE("order kind names round-trip") {
  for (const auto kind : kAllOrderKinds) CHECK(parse_order_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_order_kind("star").has_value());
}

TEST_CASE("core part bounds A") {
  for (const CMatrix& a : {A1(), A2(), A3(), B3(), jordan0(3)}) {
    for (const auto& r : core_upper_bound_check(a)) {
      CHECK(r.holds);
      CHECK(r.left.residual <= 1e-9);
      CHECK(r.right.residual <= 1e-9);
    }
  }
}

TEST_CASE("DMP relation characterizations") {
  const auto c = dmp_order_characterizations(A3(), B3());
  CHECK(c[0].holds);
  CHECK(c[1].holds);
  CHECK(c[2].holds);
  CHECK(all_equal(dmp_order_characterizations(A1(), A2())));
  const auto g = ingredients(A1());
  const auto core = dmp_order_characterizations(g, g.core);
  CHECK(core[0].holds);
  CHECK(core[1].holds);
  CHECK(core[2].holds);
}

TEST_CASE("MPD relation characterizations") {
  const auto c = mpd_order_characterizations(A3(), B3());
  CHECK_FALSE(c[0].holds);
  CHECK_FALSE(c[1].holds);
  CHECK_FALSE(c[2].holds);
  const auto g = ingredients(A2());
  const auto core = mpd_order_characterizations(g, g.core);
  CHECK(core[0].holds);
  CHECK(core[1].holds);
  CHECK(core[2].holds);
  const CMatrix n = cm({{2, 1, 0}, {0, 3, 1}, {1, 0, 1}});
  const auto self = mpd_order_characterizations(n, n);
  CHECK(self[0].holds);
  CHECK(self[1].holds);
  CHECK(self[2].holds);
  CHECK(all_equal(mpd_order_characterizations(A1(), A2())));
}
