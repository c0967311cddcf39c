// Copyright 2026 The Cybertopo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "cybertopo/cli.hpp"

using namespace cybertopo;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CYBERTOPO_DATA_DIR) + "/" + name; }

class TempFile {
 public:
  explicit TempFile(const std::string& name, const std::string& text = "")
      : path_(std::filesystem::temp_directory_path() / ("cybertopo_cli_test_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  std::string path() const { return path_.string(); }
  std::string read() const {
    std::ifstream in(path_);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

 private:
  std::filesystem::path path_;
};

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("homology subcommand") {
  auto r = run({"homology", data("complexes/simple_asc.txt")});
  REQUIRE(r.code == kExitOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["betti"] == Json({2, 1, 0}));
  CHECK(doc["cycles"] == Json({5, 2, 0}));
  CHECK(doc["boundaries"] == Json({3, 1, 0}));
  CHECK(doc["euler"] == 1);

  r = run({"homology", data("complexes/asc18.txt"), "--field", "q", "--max-dim", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["betti"] == Json({3, 1, 0}));

  TempFile empty("empty.txt");
  CHECK(run({"homology", empty.path()}).code == kExitParseError);
  CHECK(run({"homology", data("complexes/nope.txt")}).code == kExitInvalidArgument);
  CHECK(run({"homology", data("complexes/simple_asc.txt"), "--field", "z"}).code == kExitInvalidArgument);
  CHECK(run({"homology", data("complexes/simple_asc.txt"), "--max-dim", "-1"}).code == kExitInvalidArgument);
}

TEST_CASE("dowker subcommand") {
  auto r = run({"dowker", data("relations/example_relation.csv"), "--side", "rows"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "start_label,beta0,beta1,beta2,chi,chi_truncated\n1,2,1,0,1,false\n");

  r = run({"dowker", data("code/mm3_naive_compiled.txt"), "--window", "8"});
  REQUIRE(r.code == kExitOk);
  CHECK(count_lines(r.out) == 1 + 45 - 8 + 1);
  CHECK(run({"dowker", data("code/mm3_naive_compiled.txt"), "--window"}).out == r.out);

  CHECK(run({"dowker", data("code/mm3_naive_compiled.txt"), "--window", "0"}).code == kExitInvalidArgument);
  CHECK(run({"dowker", data("code/mm3_naive_compiled.txt"), "--window", "99"}).code == kExitInvalidArgument);
  TempFile bad("bad_code.txt", "x = y\nz = = w\n");
  r = run({"dowker", bad.path()});
  CHECK(r.code == kExitParseError);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("path-homology subcommand") {
  auto r = run({"path-homology", data("digraphs/d1.edges")});
  REQUIRE(r.code == kExitOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["betti"][1] == 1);
  CHECK_FALSE(doc.contains("reduced_betti"));

  r = run({"path-homology", data("digraphs/d2.edges"), "--reduced"});
  REQUIRE(r.code == kExitOk);
  doc = Json::parse(r.out);
  CHECK(doc["betti"][1] == 0);
  CHECK(doc["omega_dims"][2] == 1);
  CHECK(doc["reduced_betti"][0] == 0);

  CHECK(run({"path-homology", data("digraphs/d2.dot"), "--reduced"}).out == r.out);

  TempFile bad("bad.edges", "a b\nb\n");
  r = run({"path-homology", bad.path()});
  CHECK(r.code == kExitParseError);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"path-homology", data("digraphs/d1.edges"), "--max-p", "5"}).code == kExitInvalidArgument);
}

TEST_CASE("network subcommand") {
  auto r = run({"network", data("networks/path3.json"), "--sections", "--cohomology", "--lh"});
  REQUIRE(r.code == kExitOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["global_sections"]["count"] == 4);
  CHECK(doc["cohomology_dims"] == Json({3, 0}));
  CHECK(doc["local_homology"]["rows"].size() == 5);

  r = run({"network", data("networks/dumbbell.json"), "--cohomology", "--traffic", "10000", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  doc = Json::parse(r.out);
  CHECK(doc["cohomology_dims"][0] == 9);
  CHECK(doc["traffic"]["delivered"] == 10000);
  CHECK(run({"network", data("networks/dumbbell.json"), "--cohomology", "--traffic", "10000", "--seed", "7"}).out ==
        r.out);

  r = run({"network", data("networks/one_way.json"), "--complex", "interference"});
  CHECK(Json::parse(r.out)["facets"] == Json::array({Json::array({"1", "2"})}));

  r = run({"network", data("networks/dumbbell.json"), "--sections", "--section-limit", "3"});
  doc = Json::parse(r.out);
  CHECK(doc["global_sections"]["complete"] == false);

  CHECK(run({"network", data("networks/path3.json"), "--complex", "mesh"}).code == kExitInvalidArgument);
  TempFile broken("broken.json", "{\"nodes\": [");
  CHECK(run({"network", broken.path()}).code == kExitParseError);
}

TEST_CASE("tme subcommand") {
  TempFile csv("components.csv");
  auto r = run({"tme", data("samples/bimodal.txt"), "--csv", csv.path()});
  REQUIRE(r.code == kExitOk);
  auto doc = Json::parse(r.out);
  CHECK(doc["modal_ucat"] == 2);
  const std::string table = csv.read();
  CHECK(table.rfind("x,f,component_1,component_2\n", 0) == 0);
  CHECK(count_lines(table) == 1 + 512);

  r = run({"tme", data("samples/with_header.csv"), "--bins", "128", "--bandwidths", "16"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["bandwidths"].size() == 16);

  TempFile one("one.txt", "3.0\n");
  CHECK(run({"tme", one.path()}).code == kExitInvalidArgument);
  CHECK(run({"tme", data("samples/bimodal.txt"), "--bins", "1"}).code == kExitInvalidArgument);
}

TEST_CASE("output files, help and usage errors") {
  TempFile out("report.json");
  auto r = run({"homology", data("complexes/triangle.txt"), "--output", out.path()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(Json::parse(out.read())["betti"] == Json({1, 0, 0}));
  CHECK(run({"homology", data("complexes/triangle.txt"), "--output", "-"}).out == out.read());

  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitInvalidArgument);
  CHECK(run({"frobnicate"}).code == kExitInvalidArgument);
}

TEST_CASE("every subcommand is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"homology", data("complexes/asc18.txt"), "--field", "q"},
      {"dowker", data("code/mm3_naive_compiled.txt"), "--window", "8"},
      {"path-homology", data("digraphs/d2.edges"), "--max-p", "3", "--reduced"},
      {"network", data("networks/dumbbell.json"), "--lh", "--sections", "--cohomology", "--traffic", "5000",
       "--seed", "3"},
      {"tme", data("samples/bimodal.txt")},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}
