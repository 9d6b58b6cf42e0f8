#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ANFIELD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("classify command") {
  auto r = run_cli("classify --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Rep(Z/2Z)") != std::string::npos);
  CHECK(r.output.find("sVec") != std::string::npos);
  CHECK(r.output.find("Sem") != std::string::npos);
  auto r4 = run_cli("classify --k 4");
  CHECK(r4.exit_code == 0);
  CHECK(r4.output.find("tensor Z/2Z, braided {e}") != std::string::npos);
  // invalid level: usage error
  CHECK(run_cli("classify --k 0").exit_code == 2);
}

TEST_CASE("data command") {
  auto r = run_cli("data --k 2 --ell 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"conductor\": 16") != std::string::npos);
  CHECK(r.output.find("\"rank\": 3") != std::string::npos);
  auto r2 = run_cli("data --k 1 --ell 7 --format json");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"conductor\": 1") != std::string::npos);
  // gcd violation: exit 2 with a message naming the constraint
  auto bad = run_cli("data --k 4 --ell 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("gcd") != std::string::npos);
}

TEST_CASE("deterministic json emission") {
  auto a = run_cli("data --k 3 --ell 1 --format json");
  auto b = run_cli("data --k 3 --ell 1 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto c = run_cli("classify --k 5 --format json");
  auto d = run_cli("classify --k 5 --format json");
  CHECK(c.exit_code == 0);
  CHECK(c.output == d.output);
}

TEST_CASE("sixj and theta commands") {
  auto r = run_cli("sixj --k 2 --m 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("a,b,e,c,d,f,exact,re,im") != std::string::npos);
  auto t = run_cli("theta --k 2 --m 1 --format csv");
  CHECK(t.exit_code == 0);
  CHECK(t.output.find("a,b,c,exact,re,im") != std::string::npos);
  CHECK(run_cli("sixj --k 2 --m 2").exit_code == 2);
}

TEST_CASE("jw command") {
  auto r = run_cli("jw --n 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"coeff_den\": \"d\"") != std::string::npos);
  auto t = run_cli("jw --n 3");
  CHECK(t.exit_code == 0);
  CHECK(t.output.find("f^(3)") != std::string::npos);
}

TEST_CASE("verify command") {
  auto r = run_cli("verify pentagon --k-max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(run_cli("verify nonsense").exit_code == 2);
  auto t = run_cli("verify tables --k-max 4");
  CHECK(t.exit_code == 0);
}
