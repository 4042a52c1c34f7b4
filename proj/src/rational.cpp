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

#include "geninv/rational.hpp"

#include <sstream>
#include <utility>

namespace geninv::exact {

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  const mpq_class den = b.re * b.re + b.im * b.im;
  if (sgn(den) == 0) throw PreconditionViolated("exact division by zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("RMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = GaussRational(1L);
  return out;
}

RMatrix RMatrix::from_cmatrix(const CMatrix& m) {
  RMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      out(i, j) = GaussRational(mpq_class(z.real()), mpq_class(z.imag()));
    }
  }
  return out;
}

CMatrix RMatrix::to_cmatrix() const {
  CMatrix out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).to_complex();
    }
  }
  return out;
}

std::string RMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& z = (*this)(i, j);
      if (j) os << ", ";
      os << z.re.get_str();
      if (sgn(z.im) != 0) os << (sgn(z.im) > 0 ? "+" : "") << z.im.get_str() << "i";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

RMatrix RMatrix::adjoint() const {
  RMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  }
  return out;
}

RMatrix RMatrix::columns(const std::vector<std::size_t>& idx) const {
  RMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  }
  return out;
}

RMatrix RMatrix::top_rows(std::size_t r) const {
  RMatrix out(r, cols_);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

bool RMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("RMatrix product");
  RMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const GaussRational& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(l, j).is_zero()) out(i, j) = out(i, j) + x * b(l, j);
      }
    }
  }
  return out;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("RMatrix sum");
  RMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("RMatrix difference");
  RMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(const RMatrix& a) {
  RowEchelon out{a, {}};
  RMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const GaussRational lead = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const GaussRational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const RMatrix& a) { return rref(a).pivots.size(); }

RMatrix inverse(const RMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("exact inverse of non-square matrix");
  RMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = GaussRational(1L);
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw PreconditionViolated("exact inverse of singular matrix");
  }
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

RMatrix power(const RMatrix& a, int k) {
  RMatrix out = RMatrix::identity(a.rows());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

RMatrix exact_pinv(const RMatrix& a) {
  const RowEchelon e = rref(a);
  const std::size_t r = e.pivots.size();
  if (r == 0) return RMatrix(a.cols(), a.rows());
  const RMatrix f = a.columns(e.pivots);
  const RMatrix g = e.reduced.top_rows(r);
  const RMatrix fs = f.adjoint();
  const RMatrix gs = g.adjoint();
  return gs * inverse(g * gs) * inverse(fs * f) * fs;
}

int exact_index(const RMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("exact index of non-square matrix");
  const int n = static_cast<int>(a.rows());
  RMatrix p = a;
  std::size_t rank_k = a.rows();
  for (int k = 0; k < n; ++k) {
    const std::size_t rank_next = rank(p);
    if (rank_next == rank_k) return k;
    rank_k = rank_next;
    p = p * a;
  }
  return n;
}

RMatrix exact_drazin(const RMatrix& a) {
  const int k = exact_index(a);
  const RMatrix ak = power(a, k);
  return ak * exact_pinv(power(a, 2 * k + 1)) * ak;
}

ExactInverses exact_inverses(const RMatrix& a) {
  ExactInverses out;
  out.index = exact_index(a);
  const RMatrix ak = power(a, out.index);
  out.mp = exact_pinv(a);
  out.drazin = ak * exact_pinv(power(a, 2 * out.index + 1)) * ak;
  const RMatrix core = a * out.drazin * a;
  out.dmp = out.drazin * a * out.mp;
  out.mpd = out.mp * a * out.drazin;
  out.cmp = out.mp * core * out.mp;
  out.mpdmp = out.mp * out.drazin * out.mp;
  return out;
}

}  // namespace geninv::exact
