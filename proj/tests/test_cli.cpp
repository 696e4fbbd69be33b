#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polypi/cli.hpp"
#include "polypi/oracle.hpp"

using nlohmann::json;
using polypi::cli::execute;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

// Restores an environment variable on scope exit.
struct EnvGuard {
  const char* name;
  explicit EnvGuard(const char* n, const char* value) : name(n) { setenv(n, value, 1); }
  ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_CASE("bounds reproduces the 96-gon bracket") {
  const Run r = run({"bounds", "--n", "6", "--m", "4", "--precision", "96", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::stod(j["pi_lo"].get<std::string>()) > 3.140845);
  CHECK(std::stod(j["pi_hi"].get<std::string>()) < 3.142858);
  CHECK(j["n"] == 6);
  CHECK(j["precision"] == 96);
}

TEST_CASE("bounds tabulates a depth range as csv") {
  const Run r = run({"bounds", "--n", "4", "--m", "0", "--m-to", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 7);
  CHECK(r.out.rfind("n,m,precision,pi_lo,pi_hi,p_lo", 0) == 0);
}

TEST_CASE("digits") {
  CHECK(run({"digits", "--count", "5"}).out == "3.1415\n");
  const Run r = run({"digits", "--count", "50", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["digits"] == polypi::oracle::machin_pi_digits(50));
}

TEST_CASE("archimedes") {
  const Run r = run({"archimedes"});
  CHECK(r.code == 0);
  CHECK(r.out.find("96-gon") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "chord-compare", "--samples", "5", "--seed", "1"}).code == 0);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  const Run j = run({"verify", "bounds", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"suite\":\"bounds\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bounds", "--n", "5"}).code == 2);              // unsupported seed
  CHECK(run({"bounds", "--precision", "abc"}).code == 2);
  CHECK(run({"digits", "--count", "0"}).code == 2);
  CHECK(run({"trig", "--theta", "2"}).code == 2);              // outside (0, pi/2)
  CHECK(run({"digits", "--format", "xml"}).code == 2);
  CHECK(run({"circuit", "--mesh-cap", "x"}).code == 2);
  CHECK(run({"bounds", "--output", "/nonexistent/dir/file"}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("identical arguments give identical reports") {
  const std::vector<std::string> a = {"verify", "tangent-compare", "--samples", "20", "--seed", "9", "--format", "json"};
  CHECK(run(a).out == run(a).out);
  std::vector<std::string> serial = a;
  serial.push_back("--serial");
  CHECK(run(a).out == run(serial).out);
  const std::vector<std::string> c = {"circuit", "--k", "12", "--mesh-cap", "0.3", "--seed", "4", "--format", "json"};
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("environment overrides") {
  {
    EnvGuard g("POLYPI_PRECISION", "200");
    const Run r = run({"bounds", "--format", "json"});
    CHECK(json::parse(r.out)["precision"] == 200);
    const Run flag = run({"bounds", "--precision", "80", "--format", "json"});
    CHECK(json::parse(flag.out)["precision"] == 80);
  }
  {
    EnvGuard g("POLYPI_JOBS", "1");
    CHECK(run({"sweep-rational", "--max-n", "8"}).code == 0);
  }
  {
    EnvGuard g("POLYPI_PRECISION", "lots");
    CHECK(run({"bounds"}).code == 2);
  }
}

TEST_CASE("output files") {
  const auto path = std::filesystem::temp_directory_path() / "polypi_cli_test.csv";
  const Run r = run({"trig", "--theta", "0.1", "--theta", "0.5", "--format", "csv", "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "theta,sin_lo,sin_hi,cos_lo,cos_hi,mid_lo,mid_hi,upper_lo,upper_hi");
  std::filesystem::remove(path);
}

TEST_CASE("sweep and circuit reports") {
  const Run s = run({"sweep-rational", "--max-n", "12", "--format", "json"});
  REQUIRE(s.code == 0);
  std::istringstream lines(s.out);
  std::string first;
  std::getline(lines, first);
  CHECK(json::parse(first).contains("normalized_lo"));

  const Run c = run({"circuit", "--k", "6", "--mesh-cap", "1.1", "--seed", "42", "--format", "json"});
  REQUIRE(c.code == 0);
  const json j = json::parse(c.out);
  CHECK(j["points"].size() >= 6);
  CHECK(j["measures"].contains("perimeter_in"));
}
