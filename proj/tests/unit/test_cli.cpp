// Copyright 2026 The gmplab Authors
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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gmplab/error.hpp"
#include "manifest.hpp"
#include "output.hpp"

using namespace gmplab;
using namespace gmplab::cli;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gmplab");
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gmplab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("real formatting") {
  CHECK(format_real(1.0 / std::numbers::sqrt2) == "0.707106781187");
  CHECK(format_real(2.0) == "2");
  CHECK(real(1.0 / 3.0).dump() == "0.333333333333");
  CHECK(real(-INFINITY).is_null());
  CHECK(render_json(Json{{"x", 1.0 / std::numbers::sqrt2}}) == "{\n  \"x\": 0.707106781187\n}\n");
}

TEST_CASE("csv rendering") {
  CHECK(render_csv({"n", "jn_lower_bound"}, {}) == "n,jn_lower_bound\n");
  CHECK(render_csv({"a", "b", "c"}, {{std::int64_t{3}, 0.5, std::string("x")}}) == "a,b,c\n3,0.5,x\n");
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("range and eta parsing") {
  CHECK(parse_range("1..4") == std::pair{1, 4});
  CHECK(parse_range("7") == std::pair{7, 7});
  CHECK_THROWS_AS(parse_range("4..1"), ValidationError);
  CHECK_THROWS_AS(parse_range("a..b"), ValidationError);
  CHECK(parse_eta("quantum").name() == "quantum");
  CHECK_THROWS_AS(parse_eta("classical"), ValidationError);
}

TEST_CASE("matrix json round trip") {
  const Json doc = Json::parse(R"({"dim": 2, "subsystem_dims": [2], "entries": [[0.5,0],[0,-0.25],[0,0.25],[0.5,0]]})");
  const auto op = matrix_from_json(doc);
  CHECK(op(0, 1) == Complex(0.0, -0.25));
  CHECK(matrix_to_json(op) == doc);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[1,0]]})")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[1,0],[1,0],[0,0],[0,0]]})")),
                  ValidationError);
}

TEST_CASE("vandam exact csv with manifest") {
  const fs::path csv = scratch("exact.csv");
  const Run r = run({"vandam", "exact", "--tau", "0", "--n", "1..4", "--csv", csv.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("n,p_exact,jn_exact,jn_lb\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.find("1,0.853553390593,0.798247926614,0.721347520444\n") != std::string::npos);
  const fs::path manifest = fs::path(csv.string() + ".manifest.json");
  REQUIRE(fs::exists(manifest));
  CHECK(verify_manifest(manifest).ok);
  const Json m = Json::parse(slurp(manifest));
  CHECK(m["version"] == kToolVersion);
  CHECK(m["outputs"][0]["sha256"] == sha256_hex(text));
  std::ofstream(csv, std::ios::app) << "tampered\n";
  CHECK_FALSE(verify_manifest(manifest).ok);
}

TEST_CASE("bound lambda and tau") {
  const Run r = run({"bound", "lambda", "--eta", "quantum"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["eta_name"] == "quantum");
  CHECK(std::abs(doc["lambda_bound"].get<double>() - 0.89898) < 1e-5);

  const Run t = run({"bound", "tau"});
  CHECK(t.code == 0);
  const Json tau = Json::parse(t.out);
  CHECK(tau["grid_crosscheck"]["consistent"] == true);
  CHECK(std::abs(tau["tau_star"].get<double>() - 0.954183073) < 1e-8);
}

TEST_CASE("user eta table") {
  const fs::path table = scratch("eta.csv");
  std::ofstream(table) << "eps,eta\n0,0\n1,1\n";
  const Run r = run({"bound", "lambda", "--eta", "file:" + table.string()});
  CHECK(r.code == 0);
  CHECK(std::abs(Json::parse(r.out)["lambda_bound"].get<double>() - 0.5) < 1e-12);
  CHECK(run({"bound", "lambda", "--eta", "file:/nonexistent.csv"}).code == 2);
}

TEST_CASE("cone subcommands") {
  const fs::path state = scratch("state.json");
  std::ofstream(state) << R"({"dim": 2, "entries": [[1.1,0],[0,0],[0,0],[-0.1,0]]})";
  const Run r = run({"cone", "state", "--tau", "0", "--file", state.string()});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["member"] == false);
  CHECK(std::abs(doc["margins"]["comp_diag"].get<double>() + 0.1) < 1e-12);

  const fs::path effect = scratch("effect.json");
  std::ofstream(effect) << R"({"dim": 2, "entries": [[0.5,0],[0,-0.6],[0,0.6],[0.5,0]]})";
  const Run e = run({"cone", "effect", "--tau", "1", "--file", effect.string()});
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out)["member"] == false);

  const fs::path broken = scratch("broken.json");
  std::ofstream(broken) << "{not json";
  CHECK(run({"cone", "state", "--tau", "0", "--file", broken.string()}).code == 2);
  CHECK(run({"cone", "state", "--tau", "0", "--file", "/nonexistent.json"}).code == 3);
}

TEST_CASE("chsh subcommand") {
  const Run r = run({"chsh", "--lambda", "0.7071067811865476"});
  CHECK(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(std::abs(doc["S"].get<double>() - 2.82842712475) < 1e-11);
  CHECK(doc["is_ns"] == true);
  CHECK(doc["conditionals"].size() == 4);
  CHECK(run({"chsh", "--lambda", "1.5"}).code == 2);
}

TEST_CASE("vandam threshold and mc") {
  const Run t = run({"vandam", "threshold", "--tau", "0.5"});
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["n_star"] == 1);
  const Run overflow = run({"vandam", "threshold", "--tau", "0.01"});
  CHECK(overflow.code == 3);
  CHECK(overflow.err.find("J_24") != std::string::npos);

  const fs::path a = scratch("mc_a.json"), b = scratch("mc_b.json");
  CHECK(run({"vandam", "mc", "--tau", "0.5", "--n", "3", "--trials", "20000", "--seed", "9", "--targets", "0,5",
             "--threads", "1", "--out", a.string()}).code == 0);
  CHECK(run({"vandam", "mc", "--tau", "0.5", "--n", "3", "--trials", "20000", "--seed", "9", "--targets", "0,5",
             "--threads", "3", "--out", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  const Json doc = Json::parse(slurp(a));
  CHECK(doc["targets"].size() == 2);
  CHECK(doc["rng"] == "splitmix64");
  CHECK(doc["seed"] == 9);
  CHECK(Json::parse(slurp(fs::path(a.string() + ".manifest.json")))["timing"].contains("wall_clock_seconds"));
  CHECK(run({"vandam", "mc", "--tau", "0.5", "--n", "3", "--targets", "8"}).code == 2);
}

TEST_CASE("jn-lb csv") {
  const fs::path csv = scratch("jnlb.csv");
  CHECK(run({"jn-lb", "--tau", "0", "--n-range", "1..3", "--csv", csv.string()}).code == 0);
  CHECK(slurp(csv) == "n,jn_lower_bound\n1,0.721347520444\n2,0.721347520444\n3,0.721347520444\n");
}

TEST_CASE("gentle verify and lemma35 are seed-deterministic") {
  const Run a = run({"gentle", "verify", "--dim", "3", "--trials", "50", "--seed", "4"});
  const Run b = run({"gentle", "verify", "--dim", "3", "--trials", "50", "--seed", "4", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json doc = Json::parse(a.out);
  CHECK(doc["results"].size() == 50);
  CHECK(doc["all_hold"] == true);

  const Run l = run({"lemma35", "--trials", "500", "--seed", "2"});
  CHECK(l.code == 0);
  CHECK(Json::parse(l.out)["all_hold"] == true);
}

TEST_CASE("params file supplies defaults") {
  const fs::path params = scratch("params.json");
  std::ofstream(params) << R"({"tau": 0.5, "n": "1..2"})";
  const Run r = run({"vandam", "exact", "--params", params.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,0.926776695297,") != std::string::npos);
  const Run overridden = run({"vandam", "exact", "--tau", "1", "--params", params.string()});
  CHECK(overridden.out.find("1,1,2,") != std::string::npos);
}

TEST_CASE("usage and validation exit codes") {
  CHECK(run({}).code == 64);
  CHECK(run({"bogus"}).code == 64);
  CHECK(run({"chsh", "--lambda", "0.5", "--wat"}).code == 64);
  CHECK(run({"vandam", "exact", "--tau", "2", "--n", "1"}).code == 2);
  CHECK(run({"vandam", "exact", "--tau", "0.5", "--n", "30"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
