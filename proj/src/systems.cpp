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

#include "geninv/systems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geninv/classify.hpp"
#include "geninv/ensemble.hpp"

namespace geninv {
namespace {

struct SystemName {
  SystemId id;
  std::string_view name;
};

constexpr std::array<SystemName, 10> kSystemNames = {{
    {SystemId::kA2, "a2"},
    {SystemId::kA2Dual, "a2_dual"},
    {SystemId::kA1, "a1"},
    {SystemId::kRemarkI, "remark_i"},
    {SystemId::kRemarkII, "remark_ii"},
    {SystemId::kRemarkIII, "remark_iii"},
    {SystemId::kRemarkIV, "remark_iv"},
    {SystemId::kRemarkV, "remark_v"},
    {SystemId::kA101, "a101"},
    {SystemId::kKj43, "kj43"},
}};

/// Everything the equations of one A need, computed once.
struct Context {
  Ingredients<Complex> g;
  CMatrix p;      // P_A = A A^+
  CMatrix q;      // Q_A = A^+ A
  CMatrix ident;
  CMatrix dmp_factor;  // A^d A^+
  CMatrix mpd_factor;  // A^+ A^d
  CMatrix ak_proj;     // A^k (A^k)^+
  double na = 0.0;

  Context(const CMatrix& a, const Tolerance& tol) : g(ingredients(a, tol)) {
    p = g.a * g.mp;
    q = g.mp * g.a;
    ident = CMatrix::Identity(a.rows(), a.cols());
    dmp_factor = g.drazin * g.mp;
    mpd_factor = g.mp * g.drazin;
    const double reference = std::pow(spectral_norm(g.a), g.index);
    ak_proj = g.power_k * pinv(g.power_k, tol, reference);
    na = frobenius(g.a);
  }
};

EquationResidual eq(std::string text, const CMatrix& lhs, const CMatrix& rhs,
                    const Tolerance& tol, double scale) {
  return {std::move(text), compare(lhs, rhs, tol, scale)};
}

std::vector<EquationResidual> residuals(const Context& c, const CMatrix& x, SystemId id,
                                        const Tolerance& tol) {
  const CMatrix& a = c.g.a;
  const double nx = frobenius(x);
  const double np = frobenius(c.p);
  const double nq = frobenius(c.q);
  switch (id) {
    case SystemId::kA2:
      return {eq("X P_A = X", x * c.p, x, tol, nx * np),
              eq("X A = A^d", x * a, c.g.drazin, tol, nx * c.na)};
    case SystemId::kA2Dual:
      return {eq("Q_A X = X", c.q * x, x, tol, nq * nx),
              eq("A X = A^d", a * x, c.g.drazin, tol, c.na * nx)};
    case SystemId::kA1: {
      const CMatrix a3 = a * a * a;
      return {eq("X A^3 X = X", x * a3 * x, x, tol, nx * nx * std::pow(c.na, 3)),
              eq("A X = A^d A^+", a * x, c.dmp_factor, tol, c.na * nx),
              eq("X A = A^+ A^d", x * a, c.mpd_factor, tol, nx * c.na)};
    }
    case SystemId::kRemarkI:
      return {eq("Q_A X P_A = X", c.q * x * c.p, x, tol, nq * nx * np),
              eq("A X = A^d A^+", a * x, c.dmp_factor, tol, c.na * nx)};
    case SystemId::kRemarkII:
      return {eq("Q_A X P_A = X", c.q * x * c.p, x, tol, nq * nx * np),
              eq("A X A = A^d", a * x * a, c.g.drazin, tol, c.na * nx * c.na)};
    case SystemId::kRemarkIII:
      return {eq("Q_A X P_A = X", c.q * x * c.p, x, tol, nq * nx * np),
              eq("X A = A^+ A^d", x * a, c.mpd_factor, tol, nx * c.na)};
    case SystemId::kRemarkIV:
      return {eq("X P_A = X", x * c.p, x, tol, nx * np),
              eq("X A = A^+ A^d", x * a, c.mpd_factor, tol, nx * c.na)};
    case SystemId::kRemarkV:
      return {eq("Q_A X = X", c.q * x, x, tol, nq * nx),
              eq("A X = A^d A^+", a * x, c.dmp_factor, tol, c.na * nx)};
    case SystemId::kA101: {
      const CMatrix& ak = c.g.power_k;
      const double nd = frobenius(c.g.drazin);
      return {eq("A^k X = A^(k+1)", ak * x, ak * a, tol, frobenius(ak) * nx),
              eq("A X = X A", a * x, x * a, tol, 2.0 * c.na * nx),
              eq("X A^d X = X", x * c.g.drazin * x, x, tol, nx * nd * nx)};
    }
    case SystemId::kKj43: {
      const CMatrix a3 = a * a * a;
      return {eq("A^3 X = A A^d", a3 * x, a * c.g.drazin, tol, std::pow(c.na, 3) * nx),
              eq("(I - A^k (A^k)^+) X = 0", (c.ident - c.ak_proj) * x, CMatrix::Zero(x.rows(), x.cols()),
                 tol, frobenius(c.ident - c.ak_proj) * nx)};
    }
  }
  return {};
}

CMatrix solution(const Context& c, SystemId id) {
  switch (id) {
    case SystemId::kA2: return c.dmp_factor;
    case SystemId::kA2Dual: return c.mpd_factor;
    case SystemId::kA101: return c.g.core;
    default: return mpdmp(c.g);
  }
}

/// Direction that keeps one linear equation of the system intact.
CMatrix admissible(const Context& c, const CMatrix& e, SystemId id) {
  switch (id) {
    case SystemId::kA2:
    case SystemId::kRemarkIV: return e * c.p;
    case SystemId::kA2Dual:
    case SystemId::kRemarkV: return c.q * e;
    case SystemId::kA1: return (c.ident - c.q) * e;
    case SystemId::kRemarkI:
    case SystemId::kRemarkII:
    case SystemId::kRemarkIII: return c.q * e * c.p;
    case SystemId::kA101: {
      const double reference = std::pow(spectral_norm(c.g.a), c.g.index);
      const CMatrix ak = c.g.power_k;
      return (c.ident - pinv(ak, Tolerance{}, reference) * ak) * e;
    }
    case SystemId::kKj43: return c.ak_proj * e;
  }
  return e;
}

void require_precondition(const Context& c, SystemId id, const Tolerance& tol) {
  if (id == SystemId::kKj43 && !core_ep_check(c.g, tol).holds) {
    throw PreconditionViolated("kj43: A must be core-EP (A^+ A_c = A_c A^+ fails)");
  }
}

CMatrix family_member(const Ingredients<Complex>& g, const CMatrix& f, SolutionFamily which) {
  const CMatrix ident = CMatrix::Identity(g.a.rows(), g.a.cols());
  if (which == SolutionFamily::kQ1) return mpd(g) + f * (ident - g.a * g.mp);
  return dmp(g) + (ident - g.mp * g.a) * f;
}

Check family_check(const Ingredients<Complex>& g, const CMatrix& x, SolutionFamily which,
                   const Tolerance& tol) {
  const double scale = frobenius(x) * frobenius(g.a);
  if (which == SolutionFamily::kQ1) return compare(x * g.a, g.mp * g.core, tol, scale);
  return compare(g.core * g.mp, g.a * x, tol, scale);
}

}  // namespace

std::string_view to_string(SystemId id) {
  for (const auto& s : kSystemNames) {
    if (s.id == id) return s.name;
  }
  return "?";
}

std::optional<SystemId> parse_system_id(std::string_view s) {
  for (const auto& n : kSystemNames) {
    if (n.name == s) return n.id;
  }
  return std::nullopt;
}

CMatrix designated_solution(const CMatrix& a, SystemId id, const Tolerance& tol) {
  const Context c(a, tol);
  require_precondition(c, id, tol);
  return solution(c, id);
}

std::vector<EquationResidual> system_residuals(const CMatrix& a, const CMatrix& x, SystemId id,
                                               const Tolerance& tol) {
  require_same_shape(a, x, "system_residuals");
  return residuals(Context(a, tol), x, id, tol);
}

VerificationReport verify_system(const CMatrix& a, SystemId id, const Tolerance& tol,
                                 const SystemOptions& opts) {
  require_square(a, "verify_system");
  const Context c(a, tol);
  require_precondition(c, id, tol);
  const std::string name(to_string(id));
  VerificationReport rep;
  rep.suite = name;
  rep.samples = 1;

  const CMatrix x = solution(c, id);
  for (const auto& r : residuals(c, x, id, tol)) {
    rep.record(name + ":solution", r.check.holds, r.check.relative(), true,
               r.check.holds ? std::string() : name + ": " + r.equation + " residual " +
                                                   std::to_string(r.check.residual));
  }

  Engine rng(sample_seed(opts.seed, static_cast<std::uint64_t>(id)));
  const double size = 0.1 * (1.0 + frobenius(x));
  for (int t = 0; t < opts.perturbations; ++t) {
    const CMatrix raw = gaussian(a.rows(), a.cols(), rng);
    CMatrix e = raw;
    if (t % 2 == 0) {
      const CMatrix projected = admissible(c, raw, id);
      if (frobenius(projected) > 1e-8 * frobenius(raw)) e = projected;
    }
    e *= size / frobenius(e);
    double violation = 0.0;
    for (const auto& r : residuals(c, x + e, id, tol)) violation = std::max(violation, r.check.residual);
    const bool ok = violation > opts.min_violation;
    rep.record(name + ":uniqueness", ok, 0.0, false,
               ok ? std::string() : name + ": perturbation " + std::to_string(t) +
                                        " left every equation satisfied (max residual " +
                                        std::to_string(violation) + ")");
  }
  return rep;
}

VerificationReport verify_system(const CMatrix& a, std::string_view id, const Tolerance& tol,
                                 const SystemOptions& opts) {
  const auto parsed = parse_system_id(id);
  if (!parsed) throw UnknownId("unknown system id: " + std::string(id));
  return verify_system(a, *parsed, tol, opts);
}

Check solution_family_check(const CMatrix& a, const CMatrix& f, SolutionFamily which,
                            const Tolerance& tol) {
  require_square(a, "solution_family");
  require_same_shape(a, f, "solution_family");
  const auto g = ingredients(a, tol);
  return family_check(g, family_member(g, f, which), which, tol);
}

CMatrix solution_family(const CMatrix& a, const CMatrix& f, SolutionFamily which,
                        const Tolerance& tol) {
  require_square(a, "solution_family");
  require_same_shape(a, f, "solution_family");
  const auto g = ingredients(a, tol);
  CMatrix x = family_member(g, f, which);
  const Check c = family_check(g, x, which, tol);
  if (!c.holds) {
    std::ostringstream os;
    os << "solution_family: member misses its equation, residual " << c.residual;
    throw ClosedFormMismatch(os.str());
  }
  return x;
}

}  // namespace geninv
