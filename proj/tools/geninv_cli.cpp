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

// geninv: compute, classify and verify generalized inverses from the shell.
//
// Every report is a JSON object on standard output. Exit codes:
//   0 ok, 1 a verification failed, 2 parse error, 3 precondition,
//   4 shape mismatch, 5 unknown id.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geninv/classify.hpp"
#include "geninv/closed_forms.hpp"
#include "geninv/matrix_io.hpp"
#include "geninv/orders.hpp"
#include "geninv/suite.hpp"
#include "geninv/systems.hpp"

namespace {

using geninv::CMatrix;
using geninv::Check;
using geninv::Tolerance;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kShape = 4, kUnknownId = 5 };

struct Options {
  std::string input;
  std::string output;
  std::string which;
  std::string a_path;
  std::string b_path;
  std::string relation = "all";
  std::string suite;
  std::string cls = "generic";
  int size = 5;
  int count = 1;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  double tol_abs = Tolerance{}.eq_abs;
  double tol_rel = Tolerance{}.eq_rel;
  bool pretty = false;

  Tolerance tolerance() const {
    Tolerance t;
    t.eq_abs = tol_abs;
    t.eq_rel = tol_rel;
    t.validate();
    return t;
  }
};

void emit(const json& doc, const Options& o) { std::cout << doc.dump(o.pretty ? 2 : -1) << '\n'; }

json to_json(const Check& c) {
  return {{"holds", c.holds}, {"residual", c.residual}, {"bound", c.bound}};
}

json matrix_json(const CMatrix& m) { return json::parse(geninv::matrix_to_json(m)); }

struct Residuals {
  json items = json::array();
  bool ok = true;

  void add(const std::string& equation, const Check& c) {
    json j = to_json(c);
    j["equation"] = equation;
    items.push_back(std::move(j));
    ok = ok && c.holds;
  }
};

double fro(const CMatrix& m) { return geninv::frobenius(m); }

// ---------------------------------------------------------------- compute

CMatrix compute_inverse(const std::string& which, const CMatrix& a, const Tolerance& tol,
                        Residuals& res, json& meta) {
  using geninv::compare;
  if (which == "mp") {
    const CMatrix x = geninv::pinv(a, tol);
    const double s = fro(a) * fro(x);
    res.add("A X A = A", compare(a * x * a, a, tol, s * fro(a)));
    res.add("X A X = X", compare(x * a * x, x, tol, s * fro(x)));
    res.add("(A X)* = A X", compare((a * x).adjoint(), a * x, tol, s));
    res.add("(X A)* = X A", compare((x * a).adjoint(), x * a, tol, s));
    meta["rank"] = geninv::numerical_rank(a, tol);
    if (a.rows() == a.cols() && meta["rank"].get<int>() > 0) {
      const auto h = geninv::hs_decompose(a, tol);
      res.add("X = block form", compare(x, geninv::pinv_block_form(h), tol));
    }
    return x;
  }

  geninv::require_square(a, "compute");
  const auto g = geninv::ingredients(a, tol);
  meta["rank"] = g.rank;
  meta["index"] = g.index;
  const CMatrix& ak = g.power_k;
  const CMatrix& ad = g.drazin;
  const double na = fro(a);
  auto idempotent = [&](const CMatrix& x) {
    res.add("X A X = X", compare(x * a * x, x, tol, fro(x) * na * fro(x)));
  };
  auto drazin_equations = [&](const CMatrix& x) {
    res.add("A^(k+1) X = A^k", compare(a * ak * x, ak, tol, na * fro(ak) * fro(x)));
    idempotent(x);
    res.add("A X = X A", compare(a * x, x * a, tol, 2.0 * na * fro(x)));
  };

  std::function<CMatrix(const geninv::HsDecomp<geninv::Complex>&,
                        const geninv::HsDerived<geninv::Complex>&)>
      block;
  CMatrix x;
  if (which == "group") {
    x = geninv::group_inverse(a, tol);
    drazin_equations(x);
    block = geninv::drazin_block_form<geninv::Complex>;
  } else if (which == "drazin") {
    x = ad;
    drazin_equations(x);
    block = geninv::drazin_block_form<geninv::Complex>;
  } else if (which == "dmp") {
    x = geninv::dmp(g);
    idempotent(x);
    res.add("X A = A^d A", compare(x * a, ad * a, tol, fro(x) * na));
    res.add("A^k X = A^k A^+", compare(ak * x, ak * g.mp, tol, fro(ak) * (fro(x) + fro(g.mp))));
    block = geninv::dmp_block_form<geninv::Complex>;
  } else if (which == "mpd") {
    x = geninv::mpd(g);
    idempotent(x);
    res.add("A X = A A^d", compare(a * x, a * ad, tol, na * fro(x)));
    res.add("X A^k = A^+ A^k", compare(x * ak, g.mp * ak, tol, fro(ak) * (fro(x) + fro(g.mp))));
    block = geninv::mpd_block_form<geninv::Complex>;
  } else if (which == "cmp") {
    x = geninv::cmp(g);
    idempotent(x);
    res.add("A X A = A_c", compare(a * x * a, g.core, tol, na * fro(x) * na));
    res.add("A X = A_c A^+", compare(a * x, g.core * g.mp, tol, na * fro(x)));
    res.add("X A = A^+ A_c", compare(x * a, g.mp * g.core, tol, na * fro(x)));
    block = geninv::cmp_block_form<geninv::Complex>;
  } else if (which == "mpdmp") {
    x = geninv::mpdmp(g);
    const CMatrix a3 = a * a * a;
    res.add("X A^3 X = X", compare(x * a3 * x, x, tol, fro(x) * fro(a3) * fro(x)));
    res.add("A X = A^d A^+", compare(a * x, ad * g.mp, tol, na * fro(x)));
    res.add("X A = A^+ A^d", compare(x * a, g.mp * ad, tol, na * fro(x)));
    block = geninv::mpdmp_block_form<geninv::Complex>;
  } else if (which == "core-ep") {
    x = geninv::core_ep_inv(g, tol);
    idempotent(x);
    res.add("X A^(k+1) = A^k", compare(x * ak * a, ak, tol, fro(x) * fro(ak) * na));
    const double reference = std::pow(g.scale, g.index);
    res.add("A X = A^k (A^k)^+",
            compare(a * x, ak * geninv::pinv(ak, tol, reference), tol, na * fro(x)));
  } else if (which == "cce") {
    const CMatrix ce = geninv::core_ep_inv(g, tol);
    x = geninv::cce(g, tol);
    idempotent(x);
    res.add("A X = A A^(+) A A^+", compare(a * x, a * ce * a * g.mp, tol, na * fro(x)));
    res.add("X A = A^+ A A^(+) A", compare(x * a, g.mp * a * ce * a, tol, na * fro(x)));
  } else {
    throw geninv::UnknownId("unknown inverse: " + which);
  }

  if (block && g.rank > 0) {
    const auto h = geninv::hs_decompose(a, tol);
    res.add("X = block form", compare(x, block(h, geninv::hs_derived(h, tol)), tol));
  }
  return x;
}

int cmd_compute(const Options& o) {
  const Tolerance tol = o.tolerance();
  const CMatrix a = geninv::read_matrix_file(o.input);
  Residuals res;
  json doc = {{"which", o.which}, {"rows", a.rows()}, {"cols", a.cols()}};
  const CMatrix x = compute_inverse(o.which, a, tol, res, doc);
  doc["residuals"] = res.items;
  doc["ok"] = res.ok;
  if (o.output.empty()) {
    doc["matrix"] = matrix_json(x);
  } else {
    geninv::write_matrix_file(o.output, x, o.pretty);
    const std::string sidecar = o.output + ".residuals.json";
    std::ofstream(sidecar) << doc.dump(2) << '\n';
    doc["output"] = o.output;
    doc["sidecar"] = sidecar;
  }
  emit(doc, o);
  return res.ok ? kOk : kFailed;
}

// --------------------------------------------------------------- classify

int cmd_classify(const Options& o) {
  const Tolerance tol = o.tolerance();
  const CMatrix a = geninv::read_matrix_file(o.input);
  geninv::require_square(a, "classify");
  const auto rep = geninv::core_ep_equiv_report(a, tol);
  json conditions = json::object();
  for (const auto& c : rep.core_ep_conditions) conditions[c.label] = to_json(c.check);
  json blocks = json::object();
  for (const auto& c : rep.block_conditions) blocks[c.label] = to_json(c.check);
  json doc = {
      {"rank", rep.rank},
      {"index", rep.index},
      {"is_ep", rep.is_ep()},
      {"is_core_ep", rep.is_core_ep()},
      {"is_k_ep", rep.k_ep.holds},
      {"core_ep_conditions", conditions},
      {"block_conditions", blocks},
      {"residuals", {{"ep", to_json(rep.ep)}, {"core_ep", to_json(rep.core_ep)},
                     {"k_ep", to_json(rep.k_ep)}}},
      {"warnings", rep.warnings},
  };
  emit(doc, o);
  return kOk;
}

// ------------------------------------------------------------------ order

int cmd_order(const Options& o) {
  const Tolerance tol = o.tolerance();
  const CMatrix a = geninv::read_matrix_file(o.a_path);
  const CMatrix b = geninv::read_matrix_file(o.b_path);
  geninv::require_square(a, "order");
  geninv::require_same_shape(a, b, "order");

  std::vector<geninv::OrderKind> kinds;
  if (o.relation == "all") {
    kinds.assign(geninv::kAllOrderKinds.begin(), geninv::kAllOrderKinds.end());
  } else if (const auto k = geninv::parse_order_kind(o.relation)) {
    kinds.push_back(*k);
  } else {
    throw geninv::UnknownId("unknown relation: " + o.relation);
  }

  const auto g = geninv::ingredients(a, tol);
  json doc = json::object();
  for (const auto kind : kinds) {
    const auto r = geninv::leq(g, b, kind, tol);
    doc[std::string(geninv::to_string(kind))] = {
        {"holds", r.holds}, {"left", to_json(r.left)}, {"right", to_json(r.right)}};
  }
  emit(doc, o);
  return kOk;
}

// ----------------------------------------------------------------- verify

json to_json(const geninv::VerificationReport& rep) {
  json theorems = json::array();
  for (const auto& t : rep.theorems) {
    theorems.push_back({{"name", t.name},
                        {"samples", t.samples},
                        {"failures", t.failures},
                        {"positives", t.positives},
                        {"worst_residual", t.worst_residual}});
  }
  return {{"suite", rep.suite},
          {"samples", rep.samples},
          {"failures", rep.failures},
          {"worst_residual", rep.worst_residual},
          {"passed", rep.passed()},
          {"theorems", theorems},
          {"messages", rep.messages}};
}

int cmd_verify(const Options& o) {
  const Tolerance tol = o.tolerance();
  const auto system = geninv::parse_system_id(o.suite);
  if (!system && !geninv::is_suite_id(o.suite)) {
    throw geninv::UnknownId("unknown suite: " + o.suite);
  }

  geninv::VerificationReport rep;
  json doc;
  if (!o.input.empty()) {
    const CMatrix a = geninv::read_matrix_file(o.input);
    if (system) {
      geninv::SystemOptions sys;
      sys.seed = o.seed;
      rep = geninv::verify_system(a, *system, tol, sys);
    } else {
      rep = geninv::run_suite_sample(o.suite, a, o.seed, tol);
    }
    doc = to_json(rep);
    doc["input"] = o.input;
  } else {
    if (system) throw geninv::PreconditionViolated("system " + o.suite + " needs --input");
    geninv::EnsembleSpec spec;
    spec.size = o.size;
    spec.count = o.count;
    spec.seed = o.seed;
    geninv::parse_ensemble_class(o.cls, spec);
    rep = geninv::run_suite(o.suite, spec, tol, o.threads);
    doc = to_json(rep);
    doc["ensemble"] = {
        {"size", spec.size}, {"count", spec.count}, {"seed", spec.seed}, {"class", spec.class_name()}};
  }
  emit(doc, o);
  return rep.passed() ? kOk : kFailed;
}

// --------------------------------------------------------------------- hs

int cmd_hs(const Options& o) {
  const Tolerance tol = o.tolerance();
  const CMatrix a = geninv::read_matrix_file(o.input);
  const auto h = geninv::hs_decompose(a, tol);
  const auto d = geninv::hs_derived(h, tol);

  const std::filesystem::path dir = o.output.empty() ? "." : o.output;
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, CMatrix>> blocks = {
      {"U", h.U},           {"Sigma", h.Sigma()},           {"Q", h.Q},
      {"P", h.P},           {"Qhat", d.Qhat},               {"SigmaTilde", d.SigmaTilde},
      {"QTilde", d.QTilde}, {"Delta", d.Delta},             {"DeltaHat", d.DeltaHat},
      {"DeltaTilde", d.DeltaTilde}};
  json files = json::object();
  for (const auto& [name, m] : blocks) {
    const std::string path = (dir / (name + ".json")).string();
    geninv::write_matrix_file(path, m, o.pretty);
    files[name] = path;
  }
  json doc = {{"r", h.r},
              {"sigma", std::vector<double>(h.sigma.data(), h.sigma.data() + h.sigma.size())},
              {"files", files},
              {"reconstruction_residual", fro(geninv::hs_reconstruct(h) - a)},
              {"constraint_residual", geninv::hs_constraint_residual(h)}};
  emit(doc, o);
  return kOk;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GENINV_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw geninv::ParseError(std::string("GENINV_SEED is not an unsigned integer: ") + env);
  }
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol-abs", o.tol_abs, "absolute equality floor");
  cmd->add_option("--tol-rel", o.tol_rel, "relative equality factor");
  cmd->add_flag("--pretty", o.pretty, "indent JSON output");
}

int run(int argc, char** argv) {
  Options o;
  o.seed = default_seed();

  CLI::App app{"Generalized inverses of square complex matrices"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute one generalized inverse");
  compute->add_option("-i,--input", o.input, "matrix file")->required();
  compute->add_option("--which", o.which, "inverse to compute")
      ->required()
      ->check(CLI::IsMember({"mp", "group", "drazin", "dmp", "mpd", "cmp", "mpdmp", "core-ep", "cce"}));
  compute->add_option("-o,--output", o.output, "write the matrix here, plus a residual sidecar");
  add_common(compute, o);

  auto* classify = app.add_subcommand("classify", "rank, index and EP-type predicates");
  classify->add_option("-i,--input", o.input, "matrix file")->required();
  add_common(classify, o);

  auto* order = app.add_subcommand("order", "test A <= B under the inverse-based relations");
  order->add_option("--a", o.a_path, "matrix file for A")->required();
  order->add_option("--b", o.b_path, "matrix file for B")->required();
  order->add_option("--relation", o.relation, "drazin, dmp, mpd, cmp or all")
      ->check(CLI::IsMember({"drazin", "dmp", "mpd", "cmp", "all"}));
  add_common(order, o);

  auto* verify = app.add_subcommand("verify", "run a theorem suite or a system check");
  verify->add_option("--suite", o.suite, "suite or system id")->required();
  verify->add_option("-i,--input", o.input, "check one matrix instead of an ensemble");
  verify->add_option("--size", o.size, "matrix size");
  verify->add_option("--count", o.count, "number of samples");
  verify->add_option("--seed", o.seed, "ensemble seed (default from GENINV_SEED, else 42)");
  verify->add_option("--class", o.cls, "ensemble class, e.g. core_ep or fixed_index(2)");
  verify->add_option("--threads", o.threads, "worker threads, 0 = hardware");
  add_common(verify, o);

  auto* hs = app.add_subcommand("hs", "Hartwig-Spindelbock factors and derived blocks");
  hs->add_option("-i,--input", o.input, "matrix file")->required();
  hs->add_option("-o,--output", o.output, "directory for the factor files");
  add_common(hs, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (compute->parsed()) return cmd_compute(o);
  if (classify->parsed()) return cmd_classify(o);
  if (order->parsed()) return cmd_order(o);
  if (verify->parsed()) return cmd_verify(o);
  return cmd_hs(o);
}

int report_error(const std::exception& e, int code) {
  std::cerr << "geninv: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const geninv::ParseError& e) {
    return report_error(e, kParse);
  } catch (const geninv::InvalidSpec& e) {
    return report_error(e, kParse);
  } catch (const geninv::PreconditionViolated& e) {
    return report_error(e, kPrecondition);
  } catch (const geninv::DimensionMismatch& e) {
    return report_error(e, kShape);
  } catch (const geninv::UnknownId& e) {
    return report_error(e, kUnknownId);
  } catch (const std::exception& e) {
    return report_error(e, kFailed);
  }
}
