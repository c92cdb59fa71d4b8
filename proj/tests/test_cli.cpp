// End-to-end tests of the tropcrit binary: spawn it on the fixture corpus and
// check documents and exit codes. The binary path and fixtures directory come
// from compile definitions.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tropcrit/serialization.hpp"

using tropcrit::Json;

namespace {

const std::string kBin = TROPCRIT_CLI_PATH;
const std::string kFixtures = TROPCRIT_FIXTURES_DIR;

struct RunResult {
  int exit_code;
  Json doc;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string out_path =
      (std::filesystem::temp_directory_path() / "tropcrit_cli_test_out.json").string();
  std::string cmd = env + " " + kBin + " " + args + " --out " + out_path + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  Json doc;
  std::ifstream in(out_path);
  if (in) {
    try {
      in >> doc;
    } catch (...) {
    }
  }
  std::filesystem::remove(out_path);
  return {code, doc};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

// The structural requirements of the published result schema.
void check_result_shape(const Json& doc, const std::string& command) {
  CHECK(doc.contains("command"));
  CHECK(doc["command"] == command);
  CHECK(doc.contains("input"));
  CHECK(doc["input"].is_object());
  CHECK(doc.contains("timing_ms"));
  CHECK(doc["timing_ms"].is_number());
}

}  // namespace

TEST_CASE("beta subcommand") {
  RunResult res = run("beta " + fixture("u_2_4.json"));
  CHECK(res.exit_code == 0);
  check_result_shape(res.doc, "beta");
  CHECK(res.doc["beta"] == 2);
  CHECK(res.doc["char_poly"] == Json::array({3, -4, 1}));

  CHECK(run("beta " + fixture("triangle.json")).doc["beta"] == 1);
  CHECK(run("beta " + fixture("k5.json")).doc["beta"] == 6);
}

TEST_CASE("beta of a matroid with a loop") {
  std::string path =
      (std::filesystem::temp_directory_path() / "tropcrit_loop_fixture.json").string();
  std::ofstream(path) << R"({"type":"graphic","vertices":2,"edges":[[0,1],[1,1]]})";
  RunResult res = run("beta " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.doc["beta"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("critical subcommand, auto weights") {
  RunResult res = run("critical " + fixture("u_2_4.json"));
  CHECK(res.exit_code == 0);
  check_result_shape(res.doc, "critical");
  CHECK(res.doc["mode"] == "fast");
  CHECK(res.doc["count"] == 2);
  CHECK(res.doc["agrees_with_beta"] == true);
  CHECK(res.doc["w"] == Json::array({"1", "10", "100"}));
  CHECK(res.doc["points"][0]["x"] == Json::array({"0", "9", "0"}));
  CHECK(res.doc["points"][1]["x"] == Json::array({"0", "0", "99"}));
}

TEST_CASE("critical subcommand with explicit w") {
  RunResult fast = run("critical " + fixture("u_2_4.json") + " --w 1,10,100");
  CHECK(fast.exit_code == 0);
  CHECK(fast.doc["count"] == 2);

  RunResult oracle = run("critical " + fixture("u_2_4.json") + " --w 7,3,11 --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.doc["mode"] == "oracle");
  CHECK(oracle.doc["count"] == 2);

  // a non-rapidly-increasing w without --oracle is an input error
  RunResult rejected = run("critical " + fixture("u_2_4.json") + " --w 7,3,11");
  CHECK(rejected.exit_code == 2);
  CHECK(rejected.doc["error"]["code"] == "NotRapidlyIncreasing");

  RunResult wrong_len = run("critical " + fixture("u_2_4.json") + " --w 1,10");
  CHECK(wrong_len.exit_code == 2);
  CHECK(wrong_len.doc["error"]["code"] == "ParseError");
}

TEST_CASE("critical subcommand relabels a non-canonical special element") {
  std::string path =
      (std::filesystem::temp_directory_path() / "tropcrit_special_fixture.json").string();
  std::ofstream(path) << R"({"type":"uniform","r":2,"n":4,"special_element":2})";
  RunResult res = run("critical " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.doc["count"] == 2);
  CHECK(res.doc["relabeling"]["special_element"] == 2);
  CHECK(res.doc["relabeling"]["old_to_new"] == Json::array({1, 2, 0, 3}));
  std::filesystem::remove(path);
}

TEST_CASE("critical subcommand rejects a coloop special element") {
  std::string path =
      (std::filesystem::temp_directory_path() / "tropcrit_coloop_fixture.json").string();
  std::ofstream(path) << R"({"type":"uniform","r":3,"n":3})";
  RunResult res = run("critical " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.doc["error"]["code"] == "LoopOrColoopSpecialElement");
  std::filesystem::remove(path);
}

TEST_CASE("verify subcommand agrees on the corpus sample") {
  RunResult res = run("verify " + fixture("u_2_4.json") + " --samples 3 --seed 42");
  CHECK(res.exit_code == 0);
  check_result_shape(res.doc, "verify");
  CHECK(res.doc["report"]["agreement"]["all_agree"] == true);
  CHECK(res.doc["report"]["seed"] == 42);
}

TEST_CASE("verify subcommand reports a coloop special element with a nonzero exit") {
  std::string path =
      (std::filesystem::temp_directory_path() / "tropcrit_verify_coloop.json").string();
  std::ofstream(path) << R"({"type":"uniform","r":3,"n":3})";
  RunResult res = run("verify " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.doc["error"]["code"] == "LoopOrColoopSpecialElement");
  std::filesystem::remove(path);
}

TEST_CASE("taut subcommand certifies divisibility") {
  RunResult res = run("taut " + fixture("u_2_3.json"));
  CHECK(res.exit_code == 0);
  check_result_shape(res.doc, "taut");
  CHECK(res.doc["all_divisible"] == true);
  CHECK(res.doc["classes_continuous"] == true);
  CHECK(res.doc["chambers"] == 6);
}

TEST_CASE("usage errors exit 2, --help exits 0") {
  std::string out_path =
      (std::filesystem::temp_directory_path() / "tropcrit_usage_out.json").string();
  int status = std::system((kBin + " >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 2);  // missing subcommand
  status = std::system((kBin + " --help >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::filesystem::remove(out_path);
}

TEST_CASE("malformed input exits 2") {
  std::string path = (std::filesystem::temp_directory_path() / "tropcrit_bad.json").string();
  std::ofstream(path) << "{not json";
  RunResult res = run("beta " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.doc["error"]["code"] == "ParseError");
  std::filesystem::remove(path);
}

TEST_CASE("fixture sweep against the shipped expected outputs") {
  std::ifstream in(fixture("expected.json"));
  REQUIRE(in.good());
  Json expected;
  in >> expected;
  for (const auto& [name, values] : expected["fixtures"].items()) {
    RunResult beta_run = run("beta " + fixture(name));
    CHECK(beta_run.exit_code == 0);
    CHECK(beta_run.doc["beta"] == values["beta"]);
    RunResult crit_run = run("critical " + fixture(name));
    CHECK(crit_run.exit_code == 0);
    CHECK(crit_run.doc["count"] == values["critical_count"]);
    CHECK(crit_run.doc["agrees_with_beta"] == true);
  }
}

TEST_CASE("TROPCRIT_MAX_GROUND caps the enumeration paths with exit 4") {
  RunResult res = run("critical " + fixture("u_2_4.json"), "TROPCRIT_MAX_GROUND=3");
  CHECK(res.exit_code == 4);
  CHECK(res.doc["error"]["code"] == "GroundTooLarge");
  // taut on 8+ elements is capped by default
  RunResult taut = run("taut " + fixture("k5.json"));
  CHECK(taut.exit_code == 4);
}
