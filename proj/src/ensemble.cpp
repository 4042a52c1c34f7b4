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

#include "geninv/ensemble.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "geninv/classify.hpp"

namespace geninv {
namespace {

constexpr int kMaxSize = 16;
constexpr int kMaxAttempts = 32;

struct ClassName {
  EnsembleClass cls;
  std::string_view name;
  bool takes_param;
};

constexpr std::array<ClassName, 10> kClassNames = {{
    {EnsembleClass::kGeneric, "generic", false},
    {EnsembleClass::kFixedRank, "fixed_rank", true},
    {EnsembleClass::kFixedIndex, "fixed_index", true},
    {EnsembleClass::kCoreEp, "core_ep", false},
    {EnsembleClass::kEp, "ep", false},
    {EnsembleClass::kKEp, "k_ep", false},
    {EnsembleClass::kNilpotent, "nilpotent", false},
    {EnsembleClass::kIntegerSmall, "integer_small", false},
    {EnsembleClass::kIdempotentCore, "idempotent_core", false},
    {EnsembleClass::kMixed, "mixed", false},
}};

const ClassName& lookup(EnsembleClass cls) {
  for (const auto& c : kClassNames) {
    if (c.cls == cls) return c;
  }
  throw InvalidSpec("unknown ensemble class");
}

int uniform_int(int lo, int hi, Engine& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(double lo, double hi, Engine& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// S M S^-1 with S = U diag(s) V well conditioned.
CMatrix similar(const CMatrix& m, Engine& rng) {
  const CMatrix s = well_conditioned(m.rows(), rng);
  return s * m * s.inverse();
}

CMatrix unitarily_similar(const CMatrix& m, Engine& rng) {
  const CMatrix u = random_unitary(m.rows(), rng);
  return u * m * u.adjoint();
}

/// Rank of the nonsingular block: uniform in [1, n - 1], or n when n = 1.
Eigen::Index core_size(Eigen::Index n, Engine& rng) {
  if (n == 1) return 1;
  return uniform_int(1, static_cast<int>(n) - 1, rng);
}

CMatrix draw_generic(Eigen::Index n, Engine& rng) { return gaussian(n, n, rng); }

CMatrix draw_fixed_rank(Eigen::Index n, int r, Engine& rng) {
  const Eigen::Index rr = r >= 0 ? r : uniform_int(1, static_cast<int>(n), rng);
  return gaussian(n, rr, rng) * gaussian(rr, n, rng);
}

CMatrix draw_fixed_index(Eigen::Index n, int k, Engine& rng) {
  const Eigen::Index kk = k >= 0 ? k : uniform_int(0, static_cast<int>(n), rng);
  if (kk == 0) return well_conditioned(n, rng);
  // Blocks of index kk fill the nilpotent part; the remainder is the core.
  const Eigen::Index nil = uniform_int(static_cast<int>(kk), static_cast<int>(n), rng);
  const CMatrix nblock = nilpotent_with_index(nil, kk, rng);
  if (nil == n) return similar(nblock, rng);
  return similar(block_diag(well_conditioned(n - nil, rng), nblock), rng);
}

CMatrix draw_core_ep(Eigen::Index n, Engine& rng) {
  const Eigen::Index r = core_size(n, rng);
  if (r == n) return unitarily_similar(well_conditioned(n, rng), rng);
  return unitarily_similar(block_diag(well_conditioned(r, rng), nilpotent_block(n - r, rng)), rng);
}

CMatrix draw_ep(Eigen::Index n, Engine& rng) {
  const Eigen::Index r = uniform_int(1, static_cast<int>(n), rng);
  if (r == n) return unitarily_similar(well_conditioned(n, rng), rng);
  return unitarily_similar(block_diag(well_conditioned(r, rng), CMatrix::Zero(n - r, n - r)), rng);
}

CMatrix draw_nilpotent(Eigen::Index n, Engine& rng) {
  const Eigen::Index k = uniform_int(1, static_cast<int>(n), rng);
  return similar(nilpotent_with_index(n, k, rng), rng);
}

CMatrix draw_integer_small(Eigen::Index n, Engine& rng) {
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = Complex(uniform_int(-3, 3, rng), 0.0);
  }
  return out;
}

CMatrix draw_idempotent_core(Eigen::Index n, bool unitary, Engine& rng) {
  const Eigen::Index r = core_size(n, rng);
  CMatrix m = CMatrix::Identity(n, n);
  if (r < n) m = block_diag(CMatrix::Identity(r, r), nilpotent_block(n - r, rng));
  return unitary ? unitarily_similar(m, rng) : similar(m, rng);
}

constexpr std::array<EnsembleClass, 8> kMixedCycle = {
    EnsembleClass::kGeneric,   EnsembleClass::kCoreEp,         EnsembleClass::kFixedIndex,
    EnsembleClass::kFixedRank, EnsembleClass::kIdempotentCore, EnsembleClass::kNilpotent,
    EnsembleClass::kEp,        EnsembleClass::kIntegerSmall};

EnsembleClass mixed_pick(std::size_t i) { return kMixedCycle[i % kMixedCycle.size()]; }

bool accepts(EnsembleClass cls, const CMatrix& a, int param) {
  const Tolerance tol;
  switch (cls) {
    case EnsembleClass::kFixedRank:
      return param < 0 || numerical_rank(a, tol) == param;
    case EnsembleClass::kFixedIndex:
      return param < 0 || index(a, tol) == param;
    case EnsembleClass::kCoreEp:
      return is_core_ep(a, tol);
    case EnsembleClass::kEp:
      return is_ep(a, tol);
    case EnsembleClass::kKEp:
      return is_k_ep(a, tol);
    case EnsembleClass::kNilpotent:
      return numerical_rank(mat_power(a, static_cast<int>(a.rows())), tol,
                            std::pow(spectral_norm(a), static_cast<double>(a.rows()))) == 0;
    default:
      return true;
  }
}

CMatrix draw(EnsembleClass cls, Eigen::Index n, int param, std::size_t i, Engine& rng) {
  switch (cls) {
    case EnsembleClass::kGeneric: return draw_generic(n, rng);
    case EnsembleClass::kFixedRank: return draw_fixed_rank(n, param, rng);
    case EnsembleClass::kFixedIndex: return draw_fixed_index(n, param, rng);
    case EnsembleClass::kCoreEp: return draw_core_ep(n, rng);
    case EnsembleClass::kEp: return draw_ep(n, rng);
    case EnsembleClass::kKEp: return i % 2 == 0 ? draw_ep(n, rng) : draw_nilpotent(n, rng);
    case EnsembleClass::kNilpotent: return draw_nilpotent(n, rng);
    case EnsembleClass::kIntegerSmall: return draw_integer_small(n, rng);
    case EnsembleClass::kIdempotentCore: return draw_idempotent_core(n, i % 2 == 0, rng);
    case EnsembleClass::kMixed: break;
  }
  // Alternate unitary and oblique idempotent cores across cycles.
  return draw(mixed_pick(i), n, -1, i / kMixedCycle.size(), rng);
}

}  // namespace

void EnsembleSpec::validate() const {
  if (size < 1 || size > kMaxSize) {
    throw InvalidSpec("ensemble size must be in [1, " + std::to_string(kMaxSize) + "], got " +
                      std::to_string(size));
  }
  if (count < 1) throw InvalidSpec("ensemble count must be >= 1");
  const ClassName& c = lookup(cls);
  if (!c.takes_param && param >= 0) {
    throw InvalidSpec("class " + std::string(c.name) + " takes no parameter");
  }
  if (c.takes_param && param > size) {
    throw InvalidSpec(std::string(c.name) + " parameter must not exceed size");
  }
  if (c.takes_param && param < -1) throw InvalidSpec("negative class parameter");
}

std::string EnsembleSpec::class_name() const {
  const ClassName& c = lookup(cls);
  std::string out(c.name);
  if (c.takes_param && param >= 0) out += "(" + std::to_string(param) + ")";
  return out;
}

void parse_ensemble_class(std::string_view text, EnsembleSpec& spec) {
  std::string_view name = text;
  int param = -1;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw InvalidSpec("malformed ensemble class: " + std::string(text));
    name = text.substr(0, open);
    const std::string_view digits = text.substr(open + 1, text.size() - open - 2);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), param);
    if (ec != std::errc() || end != digits.data() + digits.size() || param < 0) {
      throw InvalidSpec("malformed ensemble class parameter: " + std::string(text));
    }
  }
  for (const auto& c : kClassNames) {
    if (c.name == name) {
      if (!c.takes_param && param >= 0) {
        throw InvalidSpec("class " + std::string(name) + " takes no parameter");
      }
      spec.cls = c.cls;
      spec.param = param;
      return;
    }
  }
  throw InvalidSpec("unknown ensemble class: " + std::string(text));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(i));
}

CMatrix gen_sample(const EnsembleSpec& spec, std::size_t i) {
  spec.validate();
  const Eigen::Index n = spec.size;
  const EnsembleClass checked =
      spec.cls == EnsembleClass::kMixed ? mixed_pick(i) : spec.cls;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Engine rng(sample_seed(sample_seed(spec.seed, i), static_cast<std::uint64_t>(attempt)));
    CMatrix a = draw(spec.cls, n, spec.param, i, rng);
    if (accepts(checked, a, spec.cls == EnsembleClass::kMixed ? -1 : spec.param)) return a;
  }
  throw NonConvergence("could not draw a " + spec.class_name() + " sample of size " +
                       std::to_string(n));
}

std::vector<CMatrix> gen(const EnsembleSpec& spec) {
  spec.validate();
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(gen_sample(spec, static_cast<std::size_t>(i)));
  return out;
}

CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Engine& rng) {
  std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      out(i, j) = Complex(re, normal(rng));
    }
  }
  return out;
}

CMatrix random_unitary(Eigen::Index n, Engine& rng) {
  const CMatrix g = gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  // Fix column phases so the distribution is Haar.
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

CMatrix well_conditioned(Eigen::Index n, Engine& rng) {
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = uniform_real(0.5, 2.0, rng);
  const CMatrix u = random_unitary(n, rng);
  const CMatrix v = random_unitary(n, rng);
  return u * s.cast<Complex>().asDiagonal() * v;
}

CMatrix nilpotent_block(Eigen::Index m, Engine& rng) {
  CMatrix out = CMatrix::Zero(m, m);
  if (m < 2) return out;
  const CMatrix g = gaussian(m, m, rng);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 2; j < m; ++j) out(i, j) = 0.3 * g(i, j);
  }
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    const double modulus = uniform_real(0.5, 1.5, rng);
    const double phase = uniform_real(0.0, 2.0 * std::numbers::pi, rng);
    out(i, i + 1) = std::polar(modulus, phase);
  }
  return out;
}

CMatrix nilpotent_with_index(Eigen::Index m, Eigen::Index k, Engine& rng) {
  if (k < 1 || k > m) throw InvalidSpec("nilpotent index must lie in [1, size]");
  CMatrix out = nilpotent_block(k, rng);
  Eigen::Index used = k;
  while (used < m) {
    const Eigen::Index b = uniform_int(1, static_cast<int>(std::min(k, m - used)), rng);
    out = block_diag(out, nilpotent_block(b, rng));
    used += b;
  }
  return out;
}

}  // namespace geninv
