// Copyright 2026 The ctq Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "ctq/io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run ctq_run(const std::string& args) {
  const std::string cmd = std::string("\"") + CTQ_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ctq_cli_" + name)).string();
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell.empty() ? std::nan("") : std::stod(cell));
    if (!line.empty() && line.back() == ',') row.push_back(std::nan(""));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("measure on a Bell state file") {
    const std::string path = temp_file("bell.json");
    REQUIRE(ctq_run("state bell --d 2 --out " + path).code == 0);
    const Run r = ctq_run("measure " + path + " --q 2");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ctq"].get<double>() == doctest::Approx(1.0));
    CHECK(j["kind"] == "exact");
  }

  TEST_CASE("measure detects isotropic and two-qubit states and falls back to bounds") {
    const std::string iso = temp_file("iso.json");
    REQUIRE(ctq_run("state isotropic --d 3 --param 0.9 --out " + iso).code == 0);
    const json a = json::parse(ctq_run("measure " + iso + " --q 3").out);
    CHECK(a["detected"] == "isotropic");
    CHECK(a["kind"] == "exact");
    CHECK(a["ctq"].get<double>() > a["bound"]["lower_bound"].get<double>());

    const std::string wer = temp_file("werner.json");
    REQUIRE(ctq_run("state werner --d 2 --param 0.9 --out " + wer).code == 0);
    const json b = json::parse(ctq_run("measure " + wer + " --q 2").out);
    CHECK(b["ctq"].get<double>() == doctest::Approx(0.64).epsilon(1e-10));
    CHECK(b["wootters_concurrence"].get<double>() == doctest::Approx(0.8).epsilon(1e-10));

    const std::string mixed = temp_file("mixed.json");
    REQUIRE(ctq_run("state random-density --d 3 --seed 4 --out " + mixed).code == 0);
    const json c = json::parse(ctq_run("measure " + mixed + " --q 3").out);
    CHECK(c["kind"] == "lower_bound_only");
    CHECK(c["lower_bound_only"] == true);
  }

  TEST_CASE("pure density input is measured exactly") {
    const std::string path = temp_file("pure_density.json");
    ctq::write_state(path, ctq::DensityMatrix(ctq::DimensionSignature{2, 2}, ctq::maximally_entangled(2).density()));
    const json j = json::parse(ctq_run("measure " + path + " --q 5").out);
    CHECK(j["detected"] == "pure");
    CHECK(j["ctq"].get<double>() == doctest::Approx(1.0));
  }

  TEST_CASE("isotropic curve tightness for d = 2, q = 4") {
    const Run r = ctq_run("isotropic --d 2 --q 4 --step 0.01");
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(r.out, header);
    CHECK(header == "F,raw,envelope,lower_bound");
    REQUIRE(rows.size() == 101);
    for (const auto& row : rows) CHECK(row[2] - row[3] >= -1e-9);
    CHECK(std::abs(rows[50][2] - rows[50][3]) < 1e-9);
    CHECK(std::abs(rows[100][2] - rows[100][3]) < 1e-9);
  }

  TEST_CASE("werner curves order the entanglement of formation below q = 8 above the crossing") {
    std::string header;
    const auto rows = parse_csv(ctq_run("werner --q 8 --step 0.01").out, header);
    CHECK(header == "w,raw,envelope,lower_bound,eof");
    for (const auto& row : rows)
      if (row[0] > 0.613) CHECK(row[4] <= row[2] + 1e-12);
  }

  TEST_CASE("grid resolution from the environment") {
    const Run first = ctq_run("isotropic --d 3 --q 3 --step 0.1 --format json");
    const Run repeat = ctq_run("isotropic --d 3 --q 3 --step 0.1 --format json");
    REQUIRE(first.code == 0);
    setenv("CTQ_GRID_STEP", "0.001", 1);
    const Run env = ctq_run("isotropic --d 3 --q 3 --step 0.1 --format json");
    setenv("CTQ_GRID_STEP", "5", 1);
    const Run bad = ctq_run("isotropic --d 3 --q 3 --step 0.1");
    unsetenv("CTQ_GRID_STEP");
    CHECK(first.out == repeat.out);
    REQUIRE(env.code == 0);
    const json a = json::parse(first.out);
    const json b = json::parse(env.out);
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(std::abs(a[i]["envelope"].get<double>() - b[i]["envelope"].get<double>()) < 5e-3);
    CHECK(bad.code != 0);
  }

  TEST_CASE("monogamy and chain commands") {
    const json ex = json::parse(ctq_run("monogamy --example2 --q 2 --gamma 1 2").out);
    REQUIRE(ex.size() == 2);
    CHECK(ex[0]["K1_minus_K2"].get<double>() == doctest::Approx(16.0 / 49.0));
    const std::string w = temp_file("w3.json");
    REQUIRE(ctq_run("state w --d 3 --out " + w).code == 0);
    const json m = json::parse(ctq_run("monogamy " + w + " --q 2").out);
    CHECK(std::abs(m[0]["residual"].get<double>()) < 1e-10);

    std::string header;
    const auto rows = parse_csv(ctq_run("chain --q 4 --gamma 1 2 --step 0.1").out, header);
    CHECK(header == "theta,gamma,value");
    CHECK(rows.size() % 2 == 0);
  }

  TEST_CASE("outputs are deterministic and written atomically") {
    const std::string a = temp_file("seed_a.json");
    const std::string b = temp_file("seed_b.json");
    REQUIRE(ctq_run("state random-pure --d 3 --seed 9 --out " + a).code == 0);
    REQUIRE(ctq_run("state random-pure --d 3 --seed 9 --out " + b).code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(std::filesystem::exists(a + ".tmp"));
  }

  TEST_CASE("errors exit nonzero") {
    CHECK(ctq_run("measure /nonexistent.json").code != 0);
    CHECK(ctq_run("bound " + temp_file("bell.json") + " --q 3").code != 0);
    CHECK(ctq_run("isotropic --d 3 --q 3 --step 0.5").code != 0);
    CHECK(ctq_run("frobnicate").code != 0);
  }

  TEST_CASE("accept emits a JSON summary") {
    const Run r = ctq_run("accept --only 5 6 --format json");
    const json j = json::parse(r.out);
    REQUIRE(j["criteria"].size() == 2);
    CHECK(j["criteria"][0]["id"] == 5);
    CHECK(j["criteria"][0]["passed"] == true);
    CHECK(j["criteria"][0]["checks"][0].contains("measured"));
    CHECK(j["criteria"][0]["checks"][0].contains("expected"));
    // Criterion 6 carries a sub-check that does not hold; see the bounds tests.
    CHECK(j["criteria"][1]["passed"] == false);
    CHECK(r.code != 0);
  }
}
