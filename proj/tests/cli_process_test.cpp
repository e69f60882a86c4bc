// End-to-end checks against the installed binary: exit statuses, stream
// separation, determinism, and the --input request path.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ACM_CLI_PATH
#error "ACM_CLI_PATH must point at the acm binary"
#endif

namespace {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

ProcessResult run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string(ACM_CLI_PATH) + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  ProcessResult result;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("solve: canonical-form example through the binary") {
  const ProcessResult r = run(
      R"(solve --poly '{"c1":[0,0],"c2":[4,0],"c3":[-12.124355652982141,0]}')");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["regime"] == "real-delta-pos-pgt0");
  bool found = false;
  for (const auto& root : doc["roots"])
    if (std::abs(root[0].get<double>() - 1.7320508075688772) < 1e-10) found = true;
  CHECK(found);
}

TEST_CASE("byte-identical output across runs") {
  const std::string args =
      R"(solve --poly '{"c1":[0.1,-2.3],"c2":[4.5,0.6],"c3":[-1.25,0.875]}' --compare-oracle)";
  const ProcessResult a = run(args);
  const ProcessResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("density: result on stdout, exit 0") {
  const ProcessResult r =
      run("density --a2 0.30555555555555558 --b2 0.027777777777777776");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["pass"] == true);
}

TEST_CASE("unitary-check: counterexample verdict document") {
  const ProcessResult r =
      run(R"(unitary-check --poly '{"c1":[-3,0],"c2":[-3,0],"c3":[1,0]}')");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["unitary"] == false);
  CHECK(doc["theorem3_structure"] == true);
}

TEST_CASE("exit statuses: 1 for malformed input, 2 for domain errors") {
  SUBCASE("invalid JSON") {
    const ProcessResult r = run("solve --poly 'not-json'");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());  // diagnostics go to stderr only
  }
  SUBCASE("wrong shape") {
    const ProcessResult r = run(R"(solve --poly '{"c1":[0,0]}')");
    CHECK(r.exit_code == 1);
  }
  SUBCASE("inadmissible density spec") {
    const ProcessResult r = run("density --a2 1.0 --b2 0.0", true);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not admissible") != std::string::npos);
  }
  SUBCASE("non-unitary build verdict keeps the document") {
    const ProcessResult r = run("unitary-build --r2 3.0 --theta 6.283185307179586 --eps 0.0");
    CHECK(r.exit_code == 2);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["unitary"] == false);
    CHECK(doc.contains("matrix"));
  }
  SUBCASE("missing subcommand") {
    const ProcessResult r = run("");
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("--input request file") {
  const char* path = "/tmp/acm_request_test.json";
  {
    std::ofstream out(path);
    out << R"({"command":"classify","p":-3.0,"q":-2.0})";
  }
  const ProcessResult r = run(std::string("--input ") + path);
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["class"] == "real-with-double");
  std::remove(path);
}

TEST_CASE("--format text renders lines") {
  const ProcessResult r = run("classify --p -3.0 --q -2.0 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("class: \"real-with-double\"") != std::string::npos);
}

TEST_CASE("--tol overrides the tolerance in the result document") {
  const ProcessResult r =
      run("density --a2 0.25 --b2 0.0 --tol 1e-8");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["tolerance"].get<double>() == 1e-8);
}

TEST_CASE("unreadable tolerance profile is a usage error") {
  const std::string cmd = std::string("ACM_TOLERANCE_PROFILE=/nonexistent/prof.json ") +
                          ACM_CLI_PATH + " classify --p -3.0 --q -2.0 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf{};
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
}

TEST_CASE("oracle subcommand handles higher degree") {
  const ProcessResult r =
      run(R"(oracle --coeffs '[[0,0],[0,0],[0,0],[0,0],[-1,0]]')");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["roots"].size() == 5);
  for (const auto& root : doc["roots"]) {
    const double mod = std::hypot(root[0].get<double>(), root[1].get<double>());
    CHECK(std::abs(mod - 1.0) <= 1e-10);
  }
}
