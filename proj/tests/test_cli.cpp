// Copyright 2026 The blochorbit Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"
#include "support/test_support.hpp"

namespace blochorbit {
namespace {

using io::json;
using testing::kPi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string state_json(const TwoQubitState& s) { return io::to_json(s).dump(); }

std::string rho_json(const Matrix4c& m) {
  json entries = json::array();
  for (int k = 0; k < 16; ++k) entries.push_back({m(k / 4, k % 4).real(), m(k / 4, k % 4).imag()});
  return json{{"rho", entries}}.dump();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "blochorbit_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const std::string kAntipodal = state_json(product_state({0, 0, 0.5}, {0, 0, -0.5}));
const std::string kAligned = state_json(product_state({0, 0, 0.5}, {0, 0, 0.5}));

TEST_CASE("state command") {
  SECTION("maximally mixed rho gives the zero triple") {
    const Result r = run({"state", "--input", rho_json(Matrix4c::Identity() / 4.0)});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    const TwoQubitState s = io::parse_state(json{{"r1", j["r1"]}, {"r2", j["r2"]}, {"T", j["T"]}});
    CHECK(s.max_abs_diff(TwoQubitState{}) == 0.0);
  }
  SECTION("both spins up has T_zz = 1/2") {
    Matrix4c rho = Matrix4c::Zero();
    rho(0, 0) = 1.0;
    const json j = json::parse(run({"state", "--input", rho_json(rho)}).out);
    CHECK(j["T"][2][2].get<double>() == Catch::Approx(0.5));
    CHECK(j["product"] == true);
  }
  SECTION("norm-violating triple exits 2") {
    TwoQubitState bad;
    bad.r1 = {0.9, 0, 0};
    const Result r = run({"state", "--input", state_json(bad)});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["valid"] == false);
  }
  SECTION("non-positive rho exits 2") {
    Matrix4c rho = Matrix4c::Zero();
    rho.diagonal() << 1.5, -0.5, 0, 0;
    CHECK(run({"state", "--input", rho_json(rho)}).code == 2);
  }
  SECTION("parse and usage errors exit 1") {
    const Result r = run({"state", "--input", "{\"r1\": [0, 0"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"state", "--input", "{\"r1\": [0, 0, 0], \"r2\": [0, 0, 0]}"}).code == 1);
    CHECK(run({"state", "--input", "/no/such/file.json"}).code == 1);
    CHECK(run({"state"}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"state", "--input", kAligned, "--format", "xml"}).code == 1);
  }
  SECTION("stdin input and Bloch display") {
    const Result r = run({"state", "--input", "-", "--normalization", "bloch"}, kAligned);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["r1"][2].get<double>() == 1.0);
    CHECK(j["T"][2][2].get<double>() == 1.0);
    CHECK(j["validation"]["r1_norm"].get<double>() == 0.5);
  }
}

TEST_CASE("evolve command") {
  const Result r = run({"evolve", "--input", state_json(product_state({0.5, 0, 0}, {0, 0, 0.5})),
                        "--spec", R"({"kind":"one_dim","i":"z","j":"z","phi":1.5707963267948966})"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["r1"][1].get<double>() == Catch::Approx(0.5));
  CHECK(std::abs(j["r1"][0].get<double>()) < 1e-15);

  CHECK(run({"evolve", "--input", kAligned, "--spec", R"({"kind":"local","target":3,"axis":[0,0,1]})"})
            .code == 1);
  CHECK(run({"evolve", "--input", kAligned, "--spec", R"({"kind":"local","target":1,"axis":[0,0,2]})"})
            .code == 1);
  CHECK(run({"evolve", "--input", kAligned, "--spec", R"({"kind":"one_dim","i":"q","j":"z"})"}).code ==
        1);
}

TEST_CASE("orbit command") {
  SECTION("two-point grid at phi_max = 0 repeats the state") {
    const Result r = run({"orbit", "--input", kAntipodal, "--spec", R"({"kind":"heisenberg","c":1})",
                          "--phi-max", "0", "--samples", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, a, b;
    std::getline(lines, header);
    std::getline(lines, a);
    std::getline(lines, b);
    CHECK(header == io::kOrbitHeader);
    CHECK(a == b);
  }
  SECTION("antipodal Heisenberg orbit passes through r1z = 0") {
    const Result r = run({"orbit", "--input", kAntipodal, "--spec", R"({"kind":"heisenberg","c":1})",
                          "--phi-max", io::format_number(kPi / 2), "--samples", "3", "--format", "csv"});
    const auto rows = io::parse_orbit_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].phi == Catch::Approx(kPi / 4));
    CHECK(std::abs(rows[1].state.r1.z()) < 1e-10);
  }
  SECTION("rows round-trip through the state command") {
    std::mt19937_64 rng(61);
    const TwoQubitState s = testing::random_state(rng);
    const auto path = scratch("orbit.csv");
    const Result r = run({"orbit", "--input", state_json(s), "--spec",
                          R"({"kind":"cartan","c":[1,0.5,0.25]})", "--samples", "40", "--format",
                          "csv", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    const auto rows = io::parse_orbit_csv(slurp(path));
    REQUIRE(rows.size() == 40);
    CHECK(rows[0].state.max_abs_diff(s) == 0.0);
    const Result back = run({"state", "--input", path.string()});
    CHECK(back.code == 0);
    CHECK(json::parse(back.out)["rows"] == 40);
  }
  SECTION("JSON trace and usage errors") {
    const json j = json::parse(
        run({"orbit", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":2})", "--samples", "5"})
            .out);
    CHECK(j["samples"].size() == 5);
    CHECK(run({"orbit", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":2})", "--samples",
               "1"})
              .code == 1);
    CHECK(run({"orbit", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":2})", "--phi-max",
               "-1"})
              .code == 1);
  }
}

TEST_CASE("ellipse command") {
  std::mt19937_64 rng(62);
  SECTION("product state has chi = 0") {
    const TwoQubitState s = testing::random_product(rng);
    const Result r = run({"ellipse", "--input", state_json(s), "--spec",
                          R"({"kind":"one_dim","i":"x","j":"y"})", "--corollary"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["chi"].get<double>()) < 1e-9);
    CHECK(j["b"].get<double>() == Catch::Approx(j["b_closed_form"].get<double>()).margin(1e-12));
  }
  SECTION("aligned Heisenberg is a point") {
    const json j = json::parse(
        run({"ellipse", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":1})"}).out);
    CHECK(j["degeneracy"] == "point");
  }
  SECTION("conditional rotation is a circle") {
    const json j =
        json::parse(run({"ellipse", "--input", state_json(product_state({0.5, 0, 0}, {0, 0, 0.5})),
                         "--spec", R"({"kind":"one_dim","i":"z","j":"z"})"})
                        .out);
    CHECK(j["degeneracy"] == "circle");
    CHECK(j["a"].get<double>() == Catch::Approx(0.5));
  }
  SECTION("corollary on an entangled state exits 2") {
    const TwoQubitState bell = from_density(DensityMatrix4::from_pure({1, 0, 0, 1}));
    CHECK(run({"ellipse", "--input", state_json(bell), "--spec",
               R"({"kind":"one_dim","i":"z","j":"z"})", "--corollary"})
              .code == 2);
    CHECK(run({"ellipse", "--input", state_json(bell), "--spec", R"({"kind":"cartan","c":[1,1,1]})"})
              .code == 1);
  }
}

TEST_CASE("reachable command") {
  SECTION("maximally mixed controller gives b = 0") {
    const json j =
        json::parse(run({"reachable", "--input", state_json(product_state({0.3, 0.1, 0}, {0, 0, 0})),
                         "--spec", R"({"kind":"one_dim","i":"z","j":"x"})"})
                        .out);
    CHECK(j["b"].get<double>() == 0.0);
    CHECK(j["a"].get<double>() == Catch::Approx(std::hypot(0.3, 0.1)));
  }
  SECTION("seeded clouds are byte-identical") {
    const std::string input = state_json(product_state({0.3, 0.1, 0.2}, {0, 0.5, 0}));
    const auto c1 = scratch("cloud1.csv"), c2 = scratch("cloud2.csv");
    const auto r1 = run({"reachable", "--input", input, "--spec", R"({"kind":"one_dim","i":"z","j":"x"})",
                         "--samples", "300", "--seed", "11", "--cloud", c1.string()});
    const auto r2 = run({"reachable", "--input", input, "--spec", R"({"kind":"one_dim","i":"z","j":"x"})",
                         "--samples", "300", "--seed", "11", "--cloud", c2.string()});
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(slurp(c1) == slurp(c2));
    CHECK(json::parse(r1.out)["max_ellipse_value"].get<double>() <= 1.0 + 1e-9);
  }
  SECTION("entangled input exits 2") {
    const TwoQubitState bell = from_density(DensityMatrix4::from_pure({1, 0, 0, 1}));
    CHECK(run({"reachable", "--input", state_json(bell), "--spec", R"({"kind":"one_dim","i":"z","j":"z"})"})
              .code == 2);
  }
}

TEST_CASE("entangle command") {
  SECTION("antipodal spins") {
    const json j = json::parse(
        run({"entangle", "--input", kAntipodal, "--spec", R"({"kind":"heisenberg","c":1})"}).out);
    CHECK(j["maximal"] == true);
    CHECK(j["phi_star"].get<double>() == Catch::Approx(kPi / 4));
  }
  SECTION("aligned spins") {
    const json j = json::parse(
        run({"entangle", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":1})"}).out);
    CHECK(j["maximal"] == false);
    CHECK(std::abs(j["max_entropy"].get<double>()) < 1e-12);
  }
  SECTION("grid too small") {
    CHECK(run({"entangle", "--input", kAligned, "--spec", R"({"kind":"heisenberg","c":1})", "--samples",
               "4"})
              .code == 1);
  }
}

}  // namespace
}  // namespace blochorbit
