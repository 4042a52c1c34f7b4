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

// Small matrices shared by the test binaries.

#ifndef GENINV_TESTS_FIXTURES_HPP_
#define GENINV_TESTS_FIXTURES_HPP_

#include <initializer_list>

#include "geninv/numkernel.hpp"

namespace geninv::testing {

/// Real rows to a complex matrix.
inline CMatrix cm(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline CMatrix A1() { return cm({{2, 0, 1}, {0, 0, 2}, {0, 0, 0}}); }
inline CMatrix A2() { return cm({{1, 0, 0}, {1, 0, 1}, {0, 0, 0}}); }
inline CMatrix A3() { return cm({{2, 0, 0}, {0, 0, 0}, {2, 2, 0}}); }
inline CMatrix B3() { return cm({{2, 0, 0}, {0, 0, 0}, {1, 0, 1}}); }

/// Nilpotent Jordan block J_n(0).
inline CMatrix jordan0(Eigen::Index n) {
  CMatrix j = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace geninv::testing

#endif  // GENINV_TESTS_FIXTURES_HPP_
