// End-to-end tests for the command-line interface: spawn the real binary,
// parse its stdout, check exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GRASMULT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// every numeric payload must be serialized as a decimal string
void check_string_array(const json& arr) {
  REQUIRE(arr.is_array());
  for (const auto& v : arr) CHECK(v.is_string());
}

}  // namespace

TEST_CASE("mult emits a structured document") {
  const RunResult r = run_cli("mult --n 4 --d 2 --w 2,4 --tau 1,2");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "mult");
  CHECK(doc["method"] == "determinant");
  CHECK(doc["multiplicity"] == "2");
  CHECK(doc["multiplicity"].is_string());
  CHECK(doc["instance"]["n"] == "4");
  CHECK(doc["instance"]["w"] == json::array({"2", "4"}));
  CHECK(doc["kappa"] == json::array({"0", "0"}));
  CHECK(doc["sigma"] == json::array({"1", "2"}));
  check_string_array(doc["kappa"]);
  CHECK(doc["timing_ms"].is_string());

  // parse(emit(doc)) round trip
  CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("mult output is deterministic") {
  const std::string args = "paths --n 5 --d 2 --w 3,5 --tau 1,2 --list-families";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  // timing may differ; strip it before comparing
  json da = json::parse(a.out), db = json::parse(b.out);
  da.erase("timing_ms");
  db.erase("timing_ms");
  CHECK(da == db);
}

TEST_CASE("figure-1 kappa and sigma are echoed in text form") {
  const RunResult r = run_cli(
      "mult --n 21 --d 9 --w 4,6,7,13,14,17,19,20,21 --tau 1,2,4,7,10,12,13,15,16 --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("kappa: 6,6,5,2,2,0,0,0,0") != std::string::npos);
  CHECK(r.out.find("sigma: 6,7,4,5,8,3,1,2,9") != std::string::npos);
  CHECK(r.out.find("multiplicity: 37649") != std::string::npos);
}

TEST_CASE("all three engines agree over the CLI") {
  for (const char* method : {"determinant", "paths", "reflections"}) {
    const RunResult r =
        run_cli(std::string("mult --n 5 --d 2 --w 3,5 --tau 1,2 --method ") + method);
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["multiplicity"] == "2");
    CHECK(doc["method"] == method);
  }
}

TEST_CASE("hilbert emits numerator, pole order and expansion") {
  const RunResult r = run_cli("hilbert --n 4 --d 2 --w 2,4 --tau 1,2 --expand 4");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "hilbert");
  CHECK(doc["numerator"] == json::array({"1", "1"}));
  CHECK(doc["pole_order"] == "3");
  CHECK(doc["conjectural"] == true);
  CHECK(doc["hilbert_function"] == json::array({"1", "4", "9", "16", "25"}));
  check_string_array(doc["numerator"]);
  check_string_array(doc["hilbert_function"]);
}

TEST_CASE("hilbert on a smooth point") {
  const RunResult r = run_cli("hilbert --n 5 --d 2 --w 3,5 --tau 3,5");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["numerator"] == json::array({"1"}));
  CHECK(doc["pole_order"] == "5");
}

TEST_CASE("paths lists families deterministically") {
  const RunResult r = run_cli("paths --n 4 --d 2 --w 2,4 --tau 1,2 --list-families");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["family_count"] == "2");
  CHECK(doc["turn_polynomial"] == json::array({"1", "1"}));
  REQUIRE(doc["families"].size() == 2);
  CHECK(doc["families"][0]["paths"] == json::array({"", "NNE"}));
  CHECK(doc["families"][0]["en_turns"] == "0");
  CHECK(doc["families"][1]["paths"] == json::array({"", "NEN"}));
  CHECK(doc["families"][1]["en_turns"] == "1");
}

TEST_CASE("verify passes on small boards") {
  const RunResult r = run_cli("verify --max-n 3");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["max_n"] == "3");
}

TEST_CASE("exit codes: parse, precondition, budget") {
  CHECK(run_cli("mult --n 4 --d 2 --w 2,4 --tau 3,4").exit_code == 3);
  CHECK(run_cli("mult --n 4 --d 2 --w 2,2 --tau 1,2").exit_code == 2);
  CHECK(run_cli("mult --n 4 --d 2 --w 2,4 --tau banana").exit_code == 2);
  CHECK(run_cli("mult --n 4 --d 2 --w 2,4").exit_code == 2);          // missing tau
  CHECK(run_cli("mult --n 4 --d 2 --w 2,4 --tau 1,2 --method x").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify --max-n 99").exit_code == 2);

  const RunResult budget = run_cli(
      "mult --n 21 --d 9 --w 4,6,7,13,14,17,19,20,21 --tau 1,2,4,7,10,12,13,15,16 "
      "--method paths --budget 10");
  CHECK(budget.exit_code == 4);
}
