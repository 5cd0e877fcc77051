// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command line tool. The binary path comes from
// the CYCLO_BIN environment variable (set by the build).

#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("CYCLO_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

RunResult run(const std::string& args, bool keep_stderr = false) {
  std::string cmd = binary() + " " + args;
  cmd += keep_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("blocks command emits one class for a shared core", "[cli]") {
  RunResult r = run("blocks --case 2 --e 3 --p 3 --r 1 --n 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["regime"]["case"] == 2);
  CHECK(j["regime"]["p"] == 3);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0].size() == 3);
  CHECK(j["classes"][0][0] == nlohmann::json::parse("[[3]]"));
  CHECK(j["classes"][0][2] == nlohmann::json::parse("[[1,1,1]]"));
}

TEST_CASE("jantzen command matches its defining sum", "[cli]") {
  RunResult r =
      run("jantzen --case 2 --e 2 --p 2 --oracle \"4\" \"3,1\"");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["J"] == 3);
  CHECK(j["J_oracle"] == 3);
  CHECK(j["match"] == true);
}

TEST_CASE("abacus command reports beta numbers and invariants", "[cli]") {
  RunResult r = run(
      "abacus --case 1 --e 3 --p inf --charges 0,1,2 \"4,1,1|2|3,2,1\" "
      "--format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto beta = j["beta"];
  REQUIRE(beta.size() == 3);
  CHECK(beta[0] == nlohmann::json::parse("[3,-1,-2,-4,-5]"));
  CHECK(beta[1] == nlohmann::json::parse("[2,-1,-2]"));
  CHECK(beta[2] == nlohmann::json::parse("[4,2,0,-2,-3]"));
  CHECK(j["weight"] == 4);
  CHECK(j["hub"] == nlohmann::json::parse("[-3,0,0]"));
}

TEST_CASE("verify command sweeps a small grid", "[cli]") {
  RunResult r = run(
      "verify --r-max 2 --n-max 2 --e-list 2,3 --p-list 2,inf --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["failures"] == 0);
  CHECK(j["cells_total"] == j["cells"].size());
  for (const auto& cell : j["cells"]) CHECK(cell["equal"] == true);
}

TEST_CASE("table output prints literals", "[cli]") {
  RunResult r =
      run("blocks --case 2 --e 3 --p 3 --r 1 --n 3 --format table");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("2,1") != std::string::npos);
  CHECK(r.out.find("1,1,1") != std::string::npos);
  CHECK(r.out.find("class 1:") != std::string::npos);
}

TEST_CASE("configuration errors name the constraint and exit 2", "[cli]") {
  RunResult r = run("blocks --case 2 --e 3 --p 3 --r 2 --n 2", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("case 2 requires r = 1") != std::string::npos);

  RunResult bad = run("jantzen --case 1 --e 2 --p inf --charges 0 \"2\" "
                      "\"bogus\"", true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("expected an integer") != std::string::npos);

  RunResult unknown = run("frobnicate", true);
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("blocks --help").exit_code == 0);
}

TEST_CASE("mismatched sizes are rejected", "[cli]") {
  RunResult r = run("jantzen --case 1 --e 2 --p inf --charges 0 \"2\" \"1\"",
                    true);
  CHECK(r.exit_code == 2);
}
