#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(PRACTIUM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_path(const std::string& name) {
  return std::string(PRACTIUM_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("check: practical, not practical, trivial") {
  const RunResult practical = run("check 2^36+2");
  CHECK(practical.exit_code == 0);
  CHECK(practical.output.find("practical") != std::string::npos);

  const RunResult not_practical = run("check 10");
  CHECK(not_practical.exit_code == 1);
  CHECK(not_practical.output.find("not practical") != std::string::npos);

  CHECK(run("check 1").exit_code == 0);
  CHECK(run("check 3^71-3").exit_code == 0);
}

TEST_CASE("check: expression errors exit 64") {
  CHECK(run("check 'nonsense'").exit_code == 64);
  CHECK(run("check 2^^3").exit_code == 64);
  CHECK(run("check 0").exit_code == 64);
}

TEST_CASE("check: budget exhaustion exits 2, hints rescue it") {
  // (2^89 - 1)(2^107 - 1): both factors far beyond a 10^4-iteration rho.
  const std::string n =
      "100433627766186892221372630609062766858404681029709092356097";
  const RunResult stuck = run("--budget 10000 check " + n);
  CHECK(stuck.exit_code == 2);

  std::ofstream hints("/tmp/practium_test_hints.txt");
  hints << "618970019642690137449562111\n";  // 2^89 - 1
  hints.close();
  const RunResult saved = run("--budget 10000 --hints /tmp/practium_test_hints.txt check " + n);
  CHECK(saved.exit_code == 1);  // complete now; 2^89-1 is odd, so not practical
}

TEST_CASE("stable: members exclude exactly c = 2, 5 mod 12 for b = 20") {
  const RunResult r = run("stable --b 20 --format json");
  REQUIRE(r.exit_code == 0);
  for (std::uint64_t c = 1; c <= 100; ++c) {
    const bool member = r.output.find("\"" + std::to_string(c) + "\":") != std::string::npos;
    CHECK(member == (c % 12 != 2 && c % 12 != 5));
  }
}

TEST_CASE("json output is byte-identical across runs") {
  const std::string invocations[] = {
      "stable --b 0 --format json",
      "scan --which twin --limit 2000 --format json",
      "density --x 100000 --format json",
      "check 2^36+2 --format json",
  };
  for (const auto& inv : invocations) {
    CAPTURE(inv);
    const RunResult first = run(inv);
    const RunResult second = run(inv);
    REQUIRE(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
  }
}

TEST_CASE("worker count does not affect output") {
  const RunResult one = run("--workers 1 stable --b 4 --format json");
  const RunResult four = run("--workers 4 stable --b 4 --format json");
  CHECK(one.output == four.output);
}

TEST_CASE("certify: empty chain, round trip, bad file") {
  std::ofstream cert("/tmp/practium_empty_chain.cert");
  cert << "base 6\ntarget 6\n";
  cert.close();
  CHECK(run("certify /tmp/practium_empty_chain.cert").exit_code == 0);

  std::ofstream bad("/tmp/practium_bad.cert");
  bad << "base 2\ntarget 14\nmul 7\n";
  bad.close();
  CHECK(run("certify /tmp/practium_bad.cert").exit_code == 1);

  std::ofstream garbage("/tmp/practium_garbage.cert");
  garbage << "this is not a certificate\n";
  garbage.close();
  CHECK(run("certify /tmp/practium_garbage.cert").exit_code == 65);

  CHECK(run("certify /tmp/practium_does_not_exist.cert").exit_code == 65);
}

TEST_CASE("family power2 emits a verifiable certificate file") {
  const std::string cert_path = "/tmp/practium_m3.cert";
  const RunResult emit = run("--hints " + data_path("m2.hints") +
                             " family --kind power2 --k 3 --emit-cert " + cert_path);
  REQUIRE(emit.exit_code == 0);
  const RunResult verify = run("--hints " + data_path("m2.hints") + " certify " + cert_path);
  CHECK(verify.exit_code == 0);
}

TEST_CASE("scan output formats") {
  const RunResult names = run("scan --which sun --limit 100 --format json");
  REQUIRE(names.exit_code == 0);
  CHECK(names.output.find("\"elements\"") != std::string::npos);
  CHECK(names.output.find("2") != std::string::npos);

  CHECK(run("scan --which bogus --limit 10").exit_code != 0);
}

TEST_CASE("sieve lists practical numbers") {
  const RunResult r = run("sieve --limit 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n2\n4\n6\n8\n12\n16\n18\n20\n");
}

TEST_CASE("triple subcommand prints verified triples") {
  const RunResult r = run("triple --d 6 --k 0 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"verified\"") != std::string::npos);
  CHECK(r.output.find("false") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("stable").exit_code == 64);  // missing --b
}
