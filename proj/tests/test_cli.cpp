#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = OSTRINGS_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_out.tmp";
  const std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(rc), buf.str()};
}

}  // namespace

TEST_CASE("coeffs tables match the known small values") {
  auto r = run_cli("coeffs --series F --k 1 --n-max 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[\"0\", \"1\", \"1\", \"1\", \"2\", \"1\", \"3\"]") !=
        std::string::npos);

  r = run_cli("coeffs --series pbar --n-max 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n,coefficient\n0,1\n1,2\n2,4\n3,8\n4,14\n");

  // n-max 0: the single constant row
  r = run_cli("coeffs --series p --n-max 0 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n,coefficient\n0,1\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("coeffs --series bogus --n-max 3").exit_code == 2);
  CHECK(run_cli("oracle --n-max 3 --interp bogus").exit_code == 2);
  CHECK(run_cli("coeffs").exit_code != 0);  // missing required n-max
}

TEST_CASE("verify passes at small bounds and reports excess zeros") {
  auto r = run_cli("verify --n-max 1");
  CHECK(r.exit_code == 0);

  r = run_cli("verify --n-max 50");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"verified\": true") != std::string::npos);
  // the m=2, n=2 zero is reported as a fact, not a violation
  CHECK(r.output.find("{\"m\": 2, \"n\": 2}") != std::string::npos);
  CHECK(r.output.find("\"violations\": []") != std::string::npos);
}

TEST_CASE("oracle flags the literal mismatch and the adopted agreement") {
  const auto r = run_cli("oracle --n-max 4");
  CHECK(r.exit_code == 0);  // adopted readings agree
  CHECK(r.output.find("{\"stat\": \"AB\", \"n\": 1, \"k\": 1, \"interp\": "
                      "\"literal\", \"mode\": \"occurrences\", \"oracle\": "
                      "\"2\", \"series\": \"1\", \"agree\": false}") !=
        std::string::npos);
  CHECK(r.output.find("\"interp\": \"inclusion-exclusion\", \"mode\": "
                      "\"occurrences\", \"oracle\": \"2\", \"series\": "
                      "\"2\", \"agree\": true") != std::string::npos);
}

TEST_CASE("asym emits rows with decreasing error, and an empty table") {
  auto r = run_cli("asym --kind AB --k 1 --N 100 --N 400 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kind,parameter,N,exact,main_term,relative_error") == 0);
  CHECK(r.output.find("AB,1,100,181648428,") != std::string::npos);

  r = run_cli("asym --kind AB --k 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "kind,parameter,N,exact,main_term,relative_error\n");

  r = run_cli("circle --kind F --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
}

TEST_CASE("circle recovers a coefficient and is thread-independent") {
  auto r1 = run_cli("circle --kind F --k 1 --N 20 --threads 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("\"match\": true") != std::string::npos);
  auto r2 = run_cli("circle --kind F --k 1 --N 20 --threads 4");
  CHECK(r2.output == r1.output);

  auto rh = run_cli("circle --kind H --m 2 --N 20");
  CHECK(rh.exit_code == 0);
  CHECK(rh.output.find("\"match\": true") != std::string::npos);
}
