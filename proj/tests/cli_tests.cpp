// End-to-end tests of the command line tool: these run the real binary
// and check stdout, stderr and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef TUNNELRHO_CLI_PATH
#error "TUNNELRHO_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TUNNELRHO_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t nread;
  while ((nread = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, nread);
  int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, out};
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("delta") {
  RunResult r = run_cli("delta 1/3 0/1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");

  r = run_cli("delta 3/5 1/3 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["delta"] == 4);
}

TEST_CASE("intersect with oracle") {
  RunResult r = run_cli("intersect 3/5 1/3 --oracle --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["min_intersections"] == 6);
  CHECK(j["oracle"] == 6);
  CHECK(j["match"] == true);
}

TEST_CASE("rho-torus") {
  RunResult r = run_cli("rho-torus 2 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/1 (mod 2)\n");

  r = run_cli("rho-torus 4 6");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("NotCoprime") != std::string::npos);

  r = run_cli("rho-torus 1 5");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("DegenerateTorusKnot") != std::string::npos);
}

TEST_CASE("rho-torus trace is schema-shaped") {
  RunResult r = run_cli("rho-torus 3 5 --trace");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["rho"] == "1/1");
  CHECK(j["companion"]["p"] == 1);
  REQUIRE(j["certificates"].size() == 2);
  for (const auto& c : j["certificates"]) {
    CHECK(c.contains("corner"));
    CHECK(c.contains("square"));
    CHECK(c["triangle"].size() == 3);
    CHECK(c["diagonal_crossings"].size() == 2);
    CHECK(c["base_side"].contains("meridian"));
  }
  CHECK(j["parallelogram"]["interior_lattice_points"] == 0);
  CHECK(j["parallelogram"]["scan_bounds"].contains("x"));
}

TEST_CASE("rho-torus svg") {
  std::string path = temp_path("tunnelrho_cert.svg");
  RunResult r = run_cli("rho-torus 2 3 --svg " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.find("<svg") == 0);
  std::remove(path.c_str());
}

TEST_CASE("waves round trip") {
  std::string in_path = temp_path("tunnelrho_system.json");
  {
    std::ofstream out(in_path);
    out << R"({"classes":[
      {"end1":"MinusLeft","end2":"MinusLeft","slope":"1/3","mult":1},
      {"end1":"MinusRight","end2":"MinusRight","slope":"1/3","mult":1},
      {"end1":"MinusLeft","end2":"PlusRight","slope":"1/3","mult":1},
      {"end1":"MinusRight","end2":"PlusLeft","slope":"1/3","mult":1}]})";
  }
  RunResult first = run_cli("waves " + in_path + " --json");
  CHECK(first.exit_code == 0);
  nlohmann::json j1 = nlohmann::json::parse(first.output);
  CHECK(j1["report"]["valid"] == true);
  CHECK(j1["report"]["rho"] == "1/3");
  CHECK(j1["report"]["augmented_slope"]["base"] == "minus");

  // feeding the emitted JSON back in yields the same report
  std::string back_path = temp_path("tunnelrho_system_back.json");
  {
    std::ofstream out(back_path);
    out << first.output;
  }
  RunResult second = run_cli("waves " + back_path + " --json");
  CHECK(second.exit_code == 0);
  CHECK(nlohmann::json::parse(second.output) == j1);

  std::remove(in_path.c_str());
  std::remove(back_path.c_str());
}

TEST_CASE("waves reports invalid systems without failing") {
  std::string path = temp_path("tunnelrho_bad_system.json");
  {
    std::ofstream out(path);
    out << R"({"classes":[{"end1":"MinusLeft","end2":"MinusLeft","slope":"1/3","mult":1}]})";
  }
  RunResult r = run_cli("waves " + path + " --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["report"]["valid"] == false);
  std::remove(path.c_str());
}

TEST_CASE("waves rejects malformed files") {
  std::string path = temp_path("tunnelrho_unknown_key.json");
  {
    std::ofstream out(path);
    out << R"({"classes":[],"color":"red"})";
  }
  RunResult r = run_cli("waves " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("ParseError") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("realize") {
  RunResult r = run_cli("realize 1/3 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["verified"] == true);
  CHECK(j["target"] == "1/3");

  r = run_cli("realize 0/1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("EvenNumeratorTarget") != std::string::npos);

  // custom generator file
  std::string gens_path = temp_path("tunnelrho_gens.json");
  {
    std::ofstream out(gens_path);
    out << R"({"T":[1,2,0,1]})";
  }
  r = run_cli("realize 1/3 --gens " + gens_path + " --max-len 6");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("NotFound") != std::string::npos);
  std::remove(gens_path.c_str());
}

TEST_CASE("render") {
  std::string path = temp_path("tunnelrho_pair.svg");
  RunResult r = run_cli("render 1/3 1/1 --svg " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.find("<svg") == 0);
  std::remove(path.c_str());
}

TEST_CASE("oracle-check") {
  RunResult r = run_cli("oracle-check --max-p 4 --max-q 4 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["mismatches"].empty());
  CHECK(j["pairs"].get<long long>() > 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("delta 1/3").exit_code == 2);         // missing argument
  CHECK(run_cli("delta foo 1/2").exit_code == 2);     // malformed slope
  CHECK(run_cli("rho-torus x y").exit_code == 2);     // malformed integers
  CHECK(run_cli("").exit_code == 2);                  // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
}
