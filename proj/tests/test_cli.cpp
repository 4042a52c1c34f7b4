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

// Drives the geninv executable and checks its JSON output and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "fixtures.hpp"
#include "geninv/matrix_io.hpp"

using namespace geninv;
using namespace geninv::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;

  json doc() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " GENINV_CLI_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Workdir {
 public:
  Workdir() : dir_(fs::temp_directory_path() / ("geninv_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
    write("A1", A1());
    write("A2", A2());
    write("A3", A3());
    write("B3", B3());
    write("I3", CMatrix::Identity(3, 3));
    write("zero", CMatrix::Zero(3, 3));
    write("rect", cm({{1, 2, 3}, {4, 5, 6}}));
    write("small", cm({{1, 0}, {0, 1}}));
    write_matrix_file(path("A1c"), cm({{2, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / (name + ".json")).string(); }
  std::string dir(const std::string& name) const { return (dir_ / name).string(); }

 private:
  void write(const std::string& name, const CMatrix& m) { write_matrix_file(path(name), m); }
  fs::path dir_;
};

const Workdir& work() {
  static const Workdir w;
  return w;
}

CMatrix matrix_of(const json& j) { return matrix_from_json(j.dump()); }

}  // namespace

TEST_CASE("compute drazin of A1") {
  const Run r = run("compute -i " + work().path("A1") + " --which drazin");
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["ok"].get<bool>());
  CHECK(d["index"].get<int>() == 2);
  CHECK(max_abs_diff(matrix_of(d["matrix"]), cm({{0.5, 0, 0.25}, {0, 0, 0}, {0, 0, 0}})) < 1e-12);
}

TEST_CASE("compute writes the matrix file and the sidecar") {
  const std::string out = work().dir("dmp_A3.json");
  const Run r = run("compute -i " + work().path("A3") + " --which dmp -o " + out);
  REQUIRE(r.code == 0);
  CHECK(max_abs_diff(read_matrix_file(out), cm({{0.5, 0, 0}, {0, 0, 0}, {0.5, 0, 0}})) < 1e-12);
  CHECK(fs::exists(out + ".residuals.json"));
  CHECK(r.doc()["residuals"].size() >= 3);
}

TEST_CASE("compute every inverse") {
  for (const char* which : {"mp", "drazin", "dmp", "mpd", "cmp", "mpdmp", "core-ep", "cce"}) {
    const Run r = run("compute -i " + work().path("A1") + " --which " + which);
    CHECK_MESSAGE(r.code == 0, which);
  }
  CHECK(run("compute -i " + work().path("I3") + " --which group").code == 0);
}

TEST_CASE("compute errors") {
  const Run g = run("compute -i " + work().path("A1") + " --which group");
  CHECK(g.code == 3);
  CHECK(run("compute -i " + work().dir("missing.json") + " --which mp").code == 2);
  CHECK(run("compute -i " + work().path("A1") + " --which nonsense").code == 2);
  CHECK(run("compute -i " + work().path("rect") + " --which dmp").code == 4);
  CHECK(run("compute -i " + work().path("rect") + " --which mp").code == 0);
}

TEST_CASE("classify") {
  const Run r1 = run("classify -i " + work().path("A1"));
  REQUIRE(r1.code == 0);
  CHECK_FALSE(r1.doc()["is_core_ep"].get<bool>());
  CHECK(r1.doc()["index"].get<int>() == 2);
  CHECK(r1.doc()["core_ep_conditions"].size() == 7);

  const Run ri = run("classify -i " + work().path("I3"));
  CHECK(ri.doc()["is_ep"].get<bool>());
  CHECK(ri.doc()["index"].get<int>() == 0);

  CHECK_FALSE(run("classify -i " + work().path("A3")).doc()["is_k_ep"].get<bool>());
  CHECK(run("classify -i " + work().path("rect")).code == 4);
}

TEST_CASE("order") {
  const Run r = run("order --a " + work().path("A3") + " --b " + work().path("B3") + " --relation all");
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["drazin"]["holds"].get<bool>());
  CHECK(d["dmp"]["holds"].get<bool>());
  CHECK_FALSE(d["mpd"]["holds"].get<bool>());
  CHECK_FALSE(d["cmp"]["holds"].get<bool>());

  const Run c = run("order --a " + work().path("A1") + " --b " + work().path("A1c"));
  for (const char* k : {"drazin", "dmp", "mpd", "cmp"}) CHECK(c.doc()[k]["holds"].get<bool>());

  const Run one = run("order --a " + work().path("A1") + " --b " + work().path("A2") + " --relation drazin");
  REQUIRE(one.code == 0);
  CHECK(one.doc().size() == 1);
  CHECK(one.doc()["drazin"].contains("left"));
  CHECK(one.out == run("order --a " + work().path("A1") + " --b " + work().path("A2") +
                       " --relation drazin").out);

  CHECK(run("order --a " + work().path("A1") + " --b " + work().path("small")).code == 4);
}

TEST_CASE("verify") {
  const Run ew2 = run("verify --suite ew2 --size 6 --count 200 --seed 42");
  CHECK(ew2.code == 0);
  CHECK(ew2.doc()["samples"].get<int>() == 200);
  CHECK(run("verify --suite core_ep_equiv --class core_ep --count 50").code == 0);
  CHECK(run("verify --suite nonsense").code == 5);
  CHECK(run("verify --suite ew2 --class bogus").code == 2);
  CHECK(run("verify --suite a2 -i " + work().path("A1")).code == 0);
  CHECK(run("verify --suite kj43 -i " + work().path("A1")).code == 3);
}

TEST_CASE("GENINV_SEED sets the default seed") {
  const std::string args = "verify --suite ew2 --count 3";
  const json a = run(args, "GENINV_SEED=5").doc();
  const json b = run(args + " --seed 5").doc();
  CHECK(a["ensemble"]["seed"] == b["ensemble"]["seed"]);
  CHECK(a["worst_residual"] == b["worst_residual"]);
  CHECK(run(args + " --seed 6", "GENINV_SEED=5").doc()["ensemble"]["seed"].get<int>() == 6);
  CHECK(run(args, "GENINV_SEED=abc").code == 2);
}

TEST_CASE("hs") {
  const std::string out = work().dir("hs_A1");
  const Run r = run("hs -i " + work().path("A1") + " -o " + out);
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["reconstruction_residual"].get<double>() <= 1e-10);
  for (const char* f : {"U", "Sigma", "Q", "P", "Qhat", "SigmaTilde", "QTilde", "Delta",
                        "DeltaHat", "DeltaTilde"}) {
    CHECK(fs::exists(fs::path(out) / (std::string(f) + ".json")));
  }
  const CMatrix u = read_matrix_file((fs::path(out) / "U.json").string());
  CHECK(frobenius(u.adjoint() * u - CMatrix::Identity(3, 3)) < 1e-12);

  CHECK(run("hs -i " + work().path("zero") + " -o " + work().dir("hs_zero")).code == 3);
  const Run r3 = run("hs -i " + work().path("A3") + " -o " + work().dir("hs_A3"));
  CHECK(r3.doc()["constraint_residual"].get<double>() <= 1e-10);
}
