#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "modrep/cli.hpp"

using namespace modrep;

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

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table of SL2(3) against the published values") {
  const auto r = run({"table", "--group", "SL2", "--p", "3", "--expect", "paper"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("sigma_2") != std::string::npos);
}

TEST_CASE("JSON table of GL2(3) has six rows") {
  const auto r = run({"table", "--group", "GL2", "--p", "3", "--format", "json"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "brauer-table/1");
  CHECK(j["rows"].size() == 6);
  CHECK(j["rows"][2]["values"][4]["display"] == "√2·i");
  CHECK(j["rows"][2]["values"][4]["M"] == 8);
  CHECK(j["config"]["seed"] == 1);
}

TEST_CASE("CSV output") {
  const auto r = run({"table", "--group", "SL2", "--p", "3", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("row,I2,-I2,c4(w^2)\n", 0) == 0);
}

TEST_CASE("input errors exit 1") {
  CHECK(run({"table", "--group", "SL2", "--p", "4"}).code == kExitInput);
  CHECK(run({"table", "--group", "Q8", "--p", "3"}).code == kExitInput);
  CHECK(run({"clifford", "--group", "S3", "--normal", "C2", "--p", "3"}).code == kExitInput);
  CHECK(run({"table", "--group", "S4", "--p", "3", "--expect", "paper"}).code == kExitInput);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"table", "--p", "3"}).code == kExitUsage);
  CHECK(run({"table", "--group", "SL2", "--p", "3", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "paper", "--bogus"}).code == kExitUsage);
}

TEST_CASE("clifford reports for GL2(3) over SL2(3)") {
  const auto r = run({"clifford", "--group", "GL2", "--normal", "SL2", "--p", "3", "--format", "json"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "clifford-report/1");
  CHECK(j["reports"].size() == 3);
  CHECK(j["passed"] == true);
}

TEST_CASE("clifford on S4 over A4 at p = 2") {
  const auto r = run({"clifford", "--group", "S4", "--normal", "A4", "--p", "2", "--format", "json"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["field"]["k"] == 2);
  CHECK(j["reports"].size() == 2);
}

TEST_CASE("clifford with a chosen sigma") {
  const auto r = run({"clifford", "--group", "GL2", "--normal", "SL2", "--p", "5", "--sigma", "polk:3"});
  CHECK(r.code == kExitPass);
  CHECK(run({"clifford", "--group", "GL2", "--normal", "SL2", "--p", "3", "--sigma", "polk:3"}).code == kExitInput);
}

TEST_CASE("quick suite and determinism") {
  const auto a = run({"verify", "--suite", "quick", "--format", "json", "--seed", "5"});
  const auto b = run({"verify", "--suite", "quick", "--format", "json", "--seed", "5"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "verify-summary/1");
  CHECK(j["config"]["seed"] == 5);
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "cli_test_table.json";
  const auto r = run({"table", "--group", "SL2", "--p", "3", "--format", "json", "--out", path});
  CHECK(r.code == kExitPass);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["config"]["out"] == path);
  std::remove(path.c_str());
}

TEST_CASE("representations from a file") {
  const std::string path = "cli_test_sigma.json";
  {
    std::ofstream f(path);
    f << R"({"p": 3, "k": 1, "label": "sign_a", "generators": [[[2]], [[1]]]})";
  }
  const auto r = run({"clifford", "--group", "A4", "--normal", "V4", "--p", "3", "--sigma", "file:" + path});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("sign_a") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("section 2 and both tables") {
  CHECK(run({"verify-section2", "--p", "3"}).code == kExitPass);
  CHECK(run({"emit-tables"}).code == kExitPass);
  const auto j = nlohmann::json::parse(run({"emit-tables", "--format", "json"}).out);
  CHECK(j["tables"].size() == 2);
  CHECK(j["passed"] == true);
}

}  // TEST_SUITE
