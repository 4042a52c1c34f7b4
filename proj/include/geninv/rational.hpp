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

// Exact Gaussian-rational matrices. This is the oracle the floating-point
// routines are tested against, so it deliberately shares no code with them:
// elimination is plain Gauss-Jordan and the Moore-Penrose inverse comes from
// a rank factorisation rather than an SVD.

#ifndef GENINV_RATIONAL_HPP_
#define GENINV_RATIONAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "geninv/numkernel.hpp"

namespace geninv::exact {

/// re + i*im with rational parts.
struct GaussRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b);
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Dense row-major matrix of GaussRational entries.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RMatrix identity(std::size_t n);
  /// Exact conversion: every finite double is a dyadic rational.
  static RMatrix from_cmatrix(const CMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussRational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  CMatrix to_cmatrix() const;
  std::string to_string() const;

  RMatrix adjoint() const;
  RMatrix columns(const std::vector<std::size_t>& idx) const;
  RMatrix top_rows(std::size_t r) const;
  bool is_zero() const;

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator-(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> data_;
};

struct RowEchelon {
  RMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

RowEchelon rref(const RMatrix& a);
std::size_t rank(const RMatrix& a);
/// Inverse of a nonsingular square matrix; throws PreconditionViolated if singular.
RMatrix inverse(const RMatrix& a);
RMatrix power(const RMatrix& a, int k);

/// Moore-Penrose inverse via A = F G, A^+ = G* (G G*)^-1 (F* F)^-1 F*.
RMatrix exact_pinv(const RMatrix& a);
int exact_index(const RMatrix& a);
/// A^k (A^(2k+1))^+ A^k with the exact index.
RMatrix exact_drazin(const RMatrix& a);

/// Exact A^+, A^d, DMP, MPD, CMP and MPDMP of one matrix.
struct ExactInverses {
  RMatrix mp, drazin, dmp, mpd, cmp, mpdmp;
  int index = 0;
};

ExactInverses exact_inverses(const RMatrix& a);

}  // namespace geninv::exact

#endif  // GENINV_RATIONAL_HPP_
