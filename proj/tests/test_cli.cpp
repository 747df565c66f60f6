// Copyright 2026 The mpor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "mpor/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mpor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mpor_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string kScenarios = MPOR_SCENARIO_DIR;

}  // namespace

TEST_CASE("setup writes one payload per prover") {
  const fs::path dir = fresh_dir("setup");
  const Run r = cli({"--workdir", dir.string(), "setup", "--scenario", kScenarios + "/paper-sec4.json"});
  REQUIRE(r.code == 0);
  const std::uint64_t expected[] = {4, 7, 2, 1, 16, 8};
  for (int i = 1; i <= 6; ++i) {
    const auto j = mpor::Json::parse(slurp(dir / ("prover_" + std::to_string(i) + ".json")));
    CHECK(j["share"][0] == expected[i - 1]);
  }
  CHECK(fs::exists(dir / "verifier.json"));
}

TEST_CASE("replication scenario gives identical payloads") {
  const fs::path dir = fresh_dir("rep");
  std::ofstream(dir / "rep.json") << R"({"kind":"rep","q":7,"seed":3,"ramp":{"rho":3},
    "base":{"por":"indexed","code":{"reed_solomon":{"n":5,"k":2}}}})";
  REQUIRE(cli({"--workdir", dir.string(), "setup", "--scenario", "rep.json"}).code == 0);
  const auto first = mpor::Json::parse(slurp(dir / "prover_1.json"));
  for (const char* f : {"prover_2.json", "prover_3.json"}) {
    const auto other = mpor::Json::parse(slurp(dir / f));
    CHECK(other["share"] == first["share"]);
    CHECK(other["blocks"] == first["blocks"]);
  }
}

TEST_CASE("validation errors exit with 2") {
  const fs::path dir = fresh_dir("invalid");
  std::ofstream(dir / "bad.json") << R"({"kind":"ramp","q":17,"seed":1,"ramp":{"tau1":3,"tau2":3,"rho":5},
    "base":{"por":"indexed","code":{"identity":2}}})";
  const Run r = cli({"--workdir", dir.string(), "setup", "--scenario", "bad.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("tau1 < tau2 required") != std::string::npos);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"--workdir", dir.string(), "setup", "--scenario", "missing.json"}).code == 1);
  std::ofstream(dir / "noseed.json") << R"({"kind":"ramp","q":17,"ramp":{"tau1":1,"tau2":2,"rho":3},
    "base":{"por":"indexed","code":{"identity":2}}})";
  CHECK(cli({"--workdir", dir.string(), "setup", "--scenario", "noseed.json"}).code == 2);
}

TEST_CASE("audit, extract and their error paths") {
  const fs::path dir = fresh_dir("audit");
  const std::string sc = kScenarios + "/paper-sec4.json";
  REQUIRE(cli({"--workdir", dir.string(), "setup", "--scenario", sc}).code == 0);
  const Run a = cli({"--workdir", dir.string(), "audit", "--scenario", sc, "--rounds", "5"});
  REQUIRE(a.code == 0);
  const auto outcome = mpor::Json::parse(a.out);
  CHECK(outcome["b"] == 0);
  CHECK(outcome["c"] == 5);
  const auto transcript = mpor::Json::parse(slurp(dir / "transcript.json"));
  CHECK(transcript.size() == 30);

  const Run zero = cli({"--workdir", dir.string(), "audit", "--scenario", sc, "--rounds", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("empty transcript") != std::string::npos);

  const Run e = cli({"--workdir", dir.string(), "extract", "--scenario", sc});
  REQUIRE(e.code == 0);
  CHECK(mpor::Json::parse(e.out)["recovered"] == mpor::Json::parse("[15, 3]"));
  CHECK(cli({"--workdir", dir.string(), "extract", "--scenario", sc, "--subset", "1,2"}).code == 2);
  CHECK(cli({"--workdir", dir.string(), "extract", "--scenario", sc, "--mode", "average-case"}).code == 2);
}

TEST_CASE("synthetic transcript decisions") {
  const std::string t = kScenarios + "/synthetic-b50-transcript.json";
  const Run a = cli({"audit", "--transcript", t, "--eta", "0.9"});
  REQUIRE(a.code == 0);
  CHECK(mpor::Json::parse(a.out)["decision"] == "reject_h0");
  const Run b = cli({"audit", "--transcript", t, "--eta", "0.95"});
  CHECK(mpor::Json::parse(b.out)["decision"] == "fail_to_reject_h0");
  CHECK(cli({"audit"}).code == 2);
}

TEST_CASE("stats subcommands") {
  const Run t = cli({"stats", "table1", "--f", "0.01,0.01,0.01,0.01,0.01", "--t", "200", "--b", "5,10,20,50"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("f_vector,t,b,exact,poisson,gap\n") == 0);
  CHECK(t.out.find(",200,10,0.5830408033,0.5830397502,") != std::string::npos);
  CHECK(cli({"stats", "table1", "--preset", "uniform-0.01"}).out == t.out);
  CHECK(cli({"stats", "table1", "--preset", "nope"}).code == 2);
  CHECK(cli({"stats", "ci", "--b", "50", "--alpha", "0.05"}).out == "b,alpha,lambda_u\n50,0.05,63.2870741\n");
  CHECK(cli({"stats", "dstar", "--n", "2", "--l", "1", "--d", "2", "--q", "3"}).out ==
        "n,l,d,q,dstar,dstar_decimal\n2,1,2,3,8/3,2.666666667\n");
  CHECK(cli({"stats", "dstar", "--n", "2", "--l", "1", "--d", "2", "--q", "4"}).code == 2);
}

TEST_CASE("simulate is byte-identical across runs") {
  const fs::path a = fresh_dir("sim_a"), b = fresh_dir("sim_b");
  const std::string sc = kScenarios + "/example-2-3-profile.json";
  const Run ra = cli({"--workdir", a.string(), "simulate", "--scenario", sc});
  const Run rb = cli({"--workdir", b.string(), "simulate", "--scenario", sc});
  REQUIRE(ra.code == 0);
  CHECK(ra.out == rb.out);
  for (const char* f : {"verifier.json", "prover_1.json", "transcript.json", "outcome.json", "extraction.json"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
  const auto j = mpor::Json::parse(ra.out);
  CHECK(j["extraction"]["recovered"] == mpor::Json::parse("[1, 2]"));
}
