#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "suites.hpp"

using namespace heisenweyl;
using namespace heisenweyl::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize prints the PBW normal form") {
  CHECK(invoke({"normalize", "y*x", "--system", "hpq"}).out == "q*x*y + z\n");
  CHECK(invoke({"normalize", "x", "--system", "hpq"}).out == "x\n");
  CHECK(invoke({"normalize", "y*x^2", "--system", "hpq"}).out == "q^2*x^2*y + (q + p^-1)*x*z\n");
  CHECK(invoke({"normalize", "yx"}).out == "q*x*y + z\n");
  CHECK(invoke({"normalize", "z*x", "--system", "gwa:aprs:1,2"}).out == "u*x\n");
  // in the localization x^-1 is a generator
  CHECK(invoke({"normalize", "x*x^-1", "--system", "local"}).out == "1\n");
}

TEST_CASE("mul and commutator agree with normalize") {
  CHECK(invoke({"mul", "y", "x"}).out == invoke({"normalize", "y*x"}).out);
  CHECK(invoke({"commutator", "z", "x", "--lambda", "p^-1"}).out == "0\n");
  CHECK(invoke({"commutator", "y", "x", "--lambda", "q"}).out == "z\n");
  CHECK(invoke({"commutator", "x", "x"}).out == "0\n");
  CHECK(invoke({"mul", "y", "x", "--spec", "oneparam:2,3"}).out == "t^3*x*y + z\n");
}

TEST_CASE("eval specializes scalars") {
  CHECK(invoke({"eval", "[4]_{p,q}", "--spec", "oneparam:1,1"}).out == "t^3 + t + t^-1 + t^-3\n");
  CHECK(invoke({"eval", "[12]_{p,q}", "--spec", "cyclotomic:12:4,3"}).out == "0\n");
  CHECK(invoke({"eval", "1", "--spec", "numeric:1.3,1.7"}).out == "1\n");
  Result r = invoke({"eval", "1/(p-q)", "--spec", "oneparam:1,1"});
  CHECK(r.code == kUsageError);
  CHECK(r.err.find("p - q") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with code 2") {
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"normalize", "y*"}).code == kUsageError);
  CHECK(invoke({"normalize", "x", "--system", "nope"}).code == kUsageError);
  CHECK(invoke({"normalize", "w", "--system", "hpq"}).code == kUsageError);
  CHECK(invoke({"verify", "nope"}).code == kUsageError);
  CHECK(invoke({"verify", "oscillator", "--mode", "generic", "--dim", "2"}).code == kUsageError);
  CHECK(invoke({"verify", "oscillator", "--mode", "oneparam:2,3"}).code == kUsageError);
  CHECK(invoke({"verify", "center", "--mode", "numeric:1.3,1.7"}).code == kUsageError);
  CHECK(invoke({"verify", "identities", "--range", "0"}).code == kUsageError);
  CHECK(invoke({"verify", "identities", "--jobs", "0"}).code == kUsageError);
  CHECK(invoke({"verify", "diamond", "--pprime", "0"}).code == kUsageError);
  CHECK(invoke({"verify", "all", "--mode", "oneparam:1,1"}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("verify exit codes follow the outcome") {
  Result ok = invoke({"verify", "identities", "--range", "30"});
  CHECK(ok.code == kSuccess);
  CHECK(ok.out.find("60 passed, 0 failed") != std::string::npos);

  Result bad = invoke({"verify", "diamond", "--pprime", "p"});
  CHECK(bad.code == kVerificationFailure);
  CHECK(bad.out.find("z*y*x") != std::string::npos);

  CHECK(invoke({"verify", "diamond"}).code == kSuccess);
  CHECK(invoke({"verify", "center", "--mode", "oneparam:2,3"}).code == kSuccess);
  CHECK(invoke({"verify", "center", "--mode", "cyclotomic:12:4,3"}).code == kSuccess);
  CHECK(invoke({"verify", "oscillator", "--mode", "numeric:1.3,1.7", "--dim", "16"}).code == kSuccess);
}

TEST_CASE("entry order does not depend on the number of jobs") {
  SuiteConfig cfg;
  cfg.suite = "identities";
  cfg.range = 12;
  auto serial = run_suite(cfg, 1);
  auto parallel = run_suite(cfg, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].check == parallel[i].check);
    CHECK(serial[i].pass == parallel[i].pass);
  }
  // output carries no timings, so repeated runs print the same bytes
  CHECK(invoke({"verify", "morphisms", "--jobs", "3"}).out == invoke({"verify", "morphisms"}).out);
}

TEST_CASE("reports round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "heisenweyl_test_report.jsonl";
  Result r = invoke({"verify", "diamond", "--pprime", "p", "--report", path.string()});
  CHECK(r.code == kVerificationFailure);
  std::ifstream in(path);
  auto entries = read_report(in);
  REQUIRE(entries.size() == 1);
  CHECK_FALSE(entries[0].pass);
  CHECK(entries[0].suite == "diamond");
  CHECK(entries[0].witness.find("z*y*x") != std::string::npos);
  std::filesystem::remove(path);

  std::vector<CheckEntry> mixed = {
      {"s", "a \"quoted\" check", "x = y", "generic", true, "", 5},
      {"s", "b", "unicode \xce\xb8", "oneparam:2,3", false, "residual\nline two", 7},
  };
  std::stringstream buf;
  write_report(mixed, buf);
  auto back = read_report(buf);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].check == mixed[i].check);
    CHECK(back[i].anchor == mixed[i].anchor);
    CHECK(back[i].params == mixed[i].params);
    CHECK(back[i].pass == mixed[i].pass);
    CHECK(back[i].witness == mixed[i].witness);
    CHECK(back[i].micros == mixed[i].micros);
  }
  std::stringstream broken("{\"suite\": 1}\n");
  CHECK_THROWS(read_report(broken));
}
