// Copyright 2026 The gfqsim Authors.
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


#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gfq/errors.hpp"
#include "gfqsim/cli.hpp"
#include "gfqsim/config.hpp"
#include "gfqsim/output.hpp"
#include "json.hpp"

using namespace gfqsim;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gfqsim");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("gfq_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("numbers print as the shortest round-trip text") {
  CHECK(format_number(0.94) == "0.94");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(2.0) == "2");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 21) - 10);
    CHECK(std::stod(format_number(x)) == x);
  }
}

TEST_CASE("config: defaults, overrides and validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.ej_ratio() == 2.0);
  CHECK(c.circuit().flux().f1 == 0.94);
  CHECK_FALSE(c.m_prime().has_value());

  c.set("circuit", "f_alpha", " 0.25 ");
  CHECK(c.text("circuit", "f_alpha") == "0.25");
  c.set("solver", "m_prime", "-2");
  CHECK(c.m_prime() == -2);

  CHECK_THROWS_AS(c.set("circuit", "bogus", "1"), gfq::ConfigError);
  CHECK_THROWS_AS(c.set("nowhere", "f1", "1"), gfq::ConfigError);
  CHECK_THROWS_AS(c.set("circuit", "f1", "abc"), gfq::ConfigError);
  CHECK_THROWS_AS(c.set("circuit", "n", "1.5"), gfq::ConfigError);
  CHECK_THROWS_AS(c.set("solver", "potential", "exact"), gfq::ConfigError);
  CHECK_THROWS_AS(c.set("circuit", "f1", "inf"), gfq::ConfigError);
  CHECK_THROWS_AS(c.load_ini_text("[circuit]\nfa = 1\n"), gfq::ConfigError);
  CHECK_THROWS_AS(c.load_ini_text("f1 = 1\n"), gfq::ConfigError);

  RunConfig bad;
  bad.set("inductance", "kinetic", "0");
  CHECK_THROWS_AS(bad.validate(), gfq::ConfigError);
  RunConfig cutoff;
  cutoff.set("rabi", "fock_cutoff", "3");
  CHECK_THROWS_AS(cutoff.validate(), gfq::ConfigError);
}

TEST_CASE("config: the INI echo parses back to the same configuration") {
  RunConfig a;
  a.set("circuit", "f_alpha", "0.1234567890123");
  a.set("drive", "beta0", "-1e-3");
  a.set("gap", "sweep_f_alpha", "0.1, 0.3");
  a.set("twoqubit", "force", "yes");
  RunConfig b;
  b.load_ini_text(a.to_ini());
  CHECK(a == b);
  CHECK(b.boolean("twoqubit", "force"));
  CHECK(b.real_list("gap", "sweep_f_alpha") == std::vector<double>{0.1, 0.3});

  // The CSV comment echo carries the same information.
  std::string ini;
  std::string section;
  for (const std::string& line : a.echo_lines()) {
    const auto dot = line.find('.');
    if (line.substr(0, dot) != section) {
      section = line.substr(0, dot);
      ini += "[" + section + "]\n";
    }
    ini += line.substr(dot + 1) + "\n";
  }
  RunConfig c;
  c.load_ini_text(ini);
  CHECK(a == c);
}

TEST_CASE("minima: default double well") {
  const Run r = invoke({"minima"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["summary"]["status"] == "double_well");
  CHECK(j["summary"]["count"] == 2);
  CHECK(std::abs(j["summary"]["phi_p_separation"].get<double>() - 3.61822) <= 2e-3);
  CHECK(j["config"]["circuit"]["f_alpha"] == 0.2);
}

TEST_CASE("minima: physics-domain statuses exit with code 2") {
  const Run merged = invoke({"minima", "--f-alpha", "0.0", "--ej-ratio", "4.0"});
  CHECK(merged.code == 2);
  CHECK(merged.json()["summary"]["status"] == "no_double_well");

  const Run even = invoke({"minima", "--n", "0"});
  CHECK(even.code == 2);
  CHECK(even.json()["summary"]["count"] == 1);

  const Run cut = invoke({"cut", "--f-alpha", "0.0", "--ej-ratio", "4.0"});
  CHECK(cut.code == 2);
}

TEST_CASE("landscape: default grid and byte-identical reruns") {
  const Run a = invoke({"landscape"});
  REQUIRE(a.code == 0);
  std::istringstream in(a.out);
  std::string line;
  int rows = 0;
  bool header = false;
  double vmin = 1e300;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header) {
      CHECK(line == "phi_p,phitilde_m,V_over_EJ");
      header = true;
      continue;
    }
    vmin = std::min(vmin, std::stod(line.substr(line.rfind(',') + 1)));
    ++rows;
  }
  CHECK(rows == 201 * 201);
  CHECK(std::abs(vmin - (-2.854)) <= 1e-3);
  CHECK(a.out.find('\r') == std::string::npos);
  CHECK(invoke({"landscape"}).out == a.out);
}

TEST_CASE("cut: the bias tilts the endpoints with its sign") {
  for (double beta : {0.02, -0.02}) {
    const Run r = invoke({"cut", "--beta0", format_number(beta), "--format", "json"});
    REQUIRE(r.code == 0);
    const double asym = r.json()["summary"]["endpoint_asymmetry"].get<double>();
    CHECK(asym != 0.0);
    CHECK((asym > 0.0) == (beta > 0.0));
  }
}

TEST_CASE("output formats and files") {
  const fs::path dir = scratch();
  const fs::path csv = dir / "currents.csv", svg = dir / "cut.svg";
  CHECK(invoke({"currents", "--format", "csv", "--out", csv.string()}).code == 0);
  const std::string text = slurp(csv);
  CHECK(text.find("# circuit.f1 = 0.94\n") != std::string::npos);
  CHECK(text.find("# result.m_prime = -2\n") != std::string::npos);
  CHECK(text.find("\nlabel,phi_p,Ip1_Leff_over_Phi0,") != std::string::npos);
  CHECK(invoke({"reproduce", "--format", "csv"}).out.find("\nname,kind,reference,tolerance,computed,pass\n") !=
        std::string::npos);
  CHECK_FALSE(fs::exists(dir / "currents.csv.tmp"));

  CHECK(invoke({"cut", "--svg", svg.string(), "--out", (dir / "cut.csv").string()}).code == 0);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);

  const Run j = invoke({"coupling", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(j.json()["table"]["columns"].size() == 3);
  CHECK(std::abs(j.json()["summary"]["g_over_Phi0_Ib"].get<double>() - 0.288) <= 0.015);
  const auto cj = j.json();
  for (const auto& [ratio, ok] : cj["summary"]["monotone_decreasing"].items()) CHECK_MESSAGE(ok == true, ratio);

  // Unwritable destinations map to exit code 3.
  CHECK(invoke({"minima", "--out", (dir / "missing" / "x.json").string()}).code == 3);
  fs::remove_all(dir);
}

TEST_CASE("configuration sources: file, environment, flags") {
  const fs::path dir = scratch();
  const fs::path file = dir / "run.ini", env_file = dir / "env.ini";
  spit(file, "[circuit]\nf_alpha = 0.15\n\n[drive]\nbeta0 = 0.001\n");
  spit(env_file, "[circuit]\nf_alpha = 0.1\n");

  auto f_alpha = [](const Run& r) { return r.json()["config"]["circuit"]["f_alpha"].get<double>(); };
  CHECK(f_alpha(invoke({"minima", "--config", file.string()})) == 0.15);
  CHECK(f_alpha(invoke({"minima", "--config", file.string(), "--f-alpha", "0.22"})) == 0.22);

  ::setenv("GFQ_CONFIG", env_file.string().c_str(), 1);
  CHECK(f_alpha(invoke({"minima"})) == 0.1);
  CHECK(f_alpha(invoke({"minima", "--config", file.string()})) == 0.15);
  ::unsetenv("GFQ_CONFIG");

  // The echoed INI reproduces the run.
  const Run first = invoke({"config", "--config", file.string(), "--ej-ratio", "1.5"});
  REQUIRE(first.code == 0);
  spit(dir / "echo.ini", first.out);
  CHECK(invoke({"config", "--config", (dir / "echo.ini").string()}).out == first.out);
  CHECK(invoke({"minima", "--config", (dir / "echo.ini").string()}).out ==
        invoke({"minima", "--config", file.string(), "--ej-ratio", "1.5"}).out);

  spit(dir / "bad.ini", "[circuit]\nf_alfa = 0.2\n");
  const Run bad = invoke({"minima", "--config", (dir / "bad.ini").string()});
  CHECK(bad.code == 4);
  CHECK(bad.err.find("f_alfa") != std::string::npos);
  CHECK(invoke({"minima", "--config", (dir / "absent.ini").string()}).code == 4);
  fs::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 4);
  CHECK(invoke({"minima", "--no-such-flag", "1"}).code == 4);
  CHECK(invoke({"minima", "--f-alpha", "x"}).code == 4);
  CHECK(invoke({"frobnicate"}).code == 4);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("rabi and twoqubit") {
  const Run r = invoke({"rabi", "--format", "json", "--rabi-samples", "50"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["summary"]["period_rel_error"].get<double>() <= 1e-3);
  CHECK(r.json()["summary"]["max_full_minus_rwa"].get<double>() <= 0.05);

  const Run t = invoke({"twoqubit", "--format", "json", "--tq-samples", "20"});
  REQUIRE(t.code == 0);
  const auto s = t.json()["summary"];
  CHECK(s["splitting_rel_error"].get<double>() <= 1e-2);

  const Run close = invoke({"twoqubit", "--tq-delta-l", "1.1", "--tq-delta-r", "1.1", "--tq-samples", "20"});
  CHECK(close.code == 2);
  CHECK(invoke({"twoqubit", "--tq-delta-l", "1.1", "--tq-delta-r", "1.1", "--tq-force", "--tq-samples", "20"}).code ==
        0);
}

TEST_CASE("reproduce scorecard") {
  const Run r = invoke({"reproduce"});
  const auto j = r.json();
  for (const auto& e : j["summary"]["entries"]) {
    if (e["name"] != "Delta_GHz") CHECK_MESSAGE(e["pass"] == true, e["name"]);
  }
  CHECK(r.code == (j["summary"]["all_pass"] == true ? 0 : 1));
  CHECK(invoke({"reproduce"}).out == r.out);

  const Run low = invoke({"reproduce", "--ej-over-ec", "10"});
  CHECK(low.code == 1);
  CHECK(low.err.find("Delta_GHz") != std::string::npos);
  bool delta_failed = false;
  const auto lj = low.json();
  for (const auto& e : lj["summary"]["entries"]) {
    if (e["name"] == "Delta_GHz") delta_failed = e["pass"] == false;
  }
  CHECK(delta_failed);
}

}  // TEST_SUITE
