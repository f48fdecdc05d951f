#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rsl/cli.hpp"

using rsl::cli::run_cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) rows.push_back(line);
  return rows;
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rsl_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify one identity") {
  const auto r = cli({"verify", "--id", "ENTRY13"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["suite"] == "selected");
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["max_rel_err"].get<double>() <= 1e-10);
  CHECK(doc["results"][0]["passed"] == true);
}

TEST_CASE("unknown ids are rejected before evaluation") {
  const auto r = cli({"verify", "--id", "ENTRY13", "--id", "NOSUCH"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("NOSUCH") != std::string::npos);
}

TEST_CASE("verify usage errors") {
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"verify", "--all", "--id", "T1A"}).code == 2);
  CHECK(cli({"verify", "--id", "T1A", "--tol", "-1"}).code == 2);
  CHECK(cli({"verify", "--id", "T1A", "--grid", "2:1:5"}).code == 2);
  CHECK(cli({"verify", "--id", "T1A", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "--id", "T1A", "--bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("unattainable tolerance fails verification") {
  const auto r = cli({"verify", "--id", "T1A", "--id", "TRULY", "--tol", "0"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& res : doc["results"]) {
    CHECK(res["passed"] == false);
    CHECK(res["max_rel_err"].get<double>() > 0);
  }
}

TEST_CASE("verify with overrides and CSV output") {
  const auto r = cli({"verify", "--id", "T1D", "--grid", "0.5:1.5:3", "--tol", "1e-9", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "id,passed,tol,max_rel_err");
  CHECK(rows[1].rfind("T1D,true,1e-09,", 0) == 0);
}

TEST_CASE("verify writes the report to --out") {
  const auto path = scratch("verify.json");
  const auto r = cli({"verify", "--id", "NANJUNDIAH", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("NANJUNDIAH") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["results"][0]["id"] == "NANJUNDIAH");
  std::filesystem::remove(path);
  CHECK(cli({"verify", "--id", "T1A", "--out", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("integral: all routes") {
  const auto r = cli({"integral", "--n", "1", "--p", "0"});
  CHECK(r.code == 0);
  for (const char* route : {"gamma", "fourier", "cauchy", "triangle", "quad"}) {
    CHECK_MESSAGE(r.out.find(route) != std::string::npos, route);
  }
  // pi/4 = 0.78539816339744830961...
  CHECK(r.out.find("7.8539816339745e-01") != std::string::npos);
  CHECK(r.out.find("differences") != std::string::npos);
}

TEST_CASE("integral: single route and non-integer p") {
  const auto fourier = cli({"integral", "--n", "1", "--p", "0.7", "--route", "fourier"});
  CHECK(fourier.code == 0);
  CHECK(fourier.out.find("-3.9269908169872e-01") != std::string::npos);  // -pi/8
  const auto all = cli({"integral", "--n", "1", "--p", "0.5"});
  CHECK(all.code == 0);
  CHECK(all.out.find("n/a") != std::string::npos);
  CHECK(all.out.find("1.9634954084936e-01") != std::string::npos);  // pi/16
}

TEST_CASE("integral usage errors") {
  CHECK(cli({"integral", "--n", "-1", "--p", "0"}).code == 2);
  CHECK(cli({"integral", "--n", "1", "--p", "0", "--route", "simpson"}).code == 2);
  CHECK(cli({"integral", "--n", "1", "--p", "0.5", "--route", "gamma"}).code == 2);
  CHECK(cli({"integral", "--n", "1", "--p", "abc"}).code == 2);
  CHECK(cli({"integral", "--n", "1"}).code == 2);
}

TEST_CASE("dump T1D") {
  const auto r = cli({"dump", "--id", "T1D", "--grid", "0.1:2:20"});
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0] == "z,lhs,rhs,abs_err,rel_err,terms_used");
  CHECK(rows[1].rfind("0.1,", 0) == 0);
  CHECK(rows[20].rfind("2,", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("dump TRULY excludes nothing") {
  const auto r = cli({"dump", "--id", "TRULY", "--grid", "0.05:0.95:19"});
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 20);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find("nan") == std::string::npos);
}

TEST_CASE("dump ENTRY13 through the pole") {
  const auto r = cli({"dump", "--id", "ENTRY13", "--grid", "-1:1:21"});
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 22);
  CHECK(rows[11] == "0,nan,nan,nan,nan,-1");
  CHECK(r.out.find("nan", r.out.find("\n0.1,")) == std::string::npos);
}

TEST_CASE("dump usage errors") {
  CHECK(cli({"dump", "--id", "T1D", "--grid", "0.1:2"}).code == 2);
  CHECK(cli({"dump", "--id", "T1D", "--grid", "2:0.1:20"}).code == 2);
  CHECK(cli({"dump", "--id", "LOG_TELESCOPE"}).code == 2);
  CHECK(cli({"dump"}).code == 2);
}

TEST_CASE("precision flag and environment") {
  CHECK(cli({"--digits", "10", "integral", "--n", "1", "--p", "0"}).code == 2);
  const auto r = cli({"--digits", "40", "verify", "--id", "T1A"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["precision_digits"] == 40);
  ::setenv("RSL_PRECISION", "35", 1);
  CHECK(nlohmann::json::parse(cli({"verify", "--id", "T1A"}).out)["precision_digits"] == 35);
  CHECK(nlohmann::json::parse(cli({"verify", "--id", "T1A", "--digits", "45"}).out)["precision_digits"] == 45);
  ::setenv("RSL_PRECISION", "abc", 1);
  CHECK(cli({"verify", "--id", "T1A"}).code == 2);
  ::unsetenv("RSL_PRECISION");
}

TEST_CASE("help exits 0") {
  const auto r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("the installed binary: exit codes and byte-stable files") {
  const std::string bin = RSL_BINARY;
  CHECK(shell(bin + " verify --id NOSUCH >/dev/null 2>&1") == 2);
  CHECK(shell(bin + " integral --n -1 --p 0 >/dev/null 2>&1") == 2);
  CHECK(shell(bin + " verify --id T1C --tol 0 >/dev/null 2>&1") == 1);
  const auto a = scratch("a.csv");
  const auto b = scratch("b.csv");
  CHECK(shell(bin + " dump --id T1E --grid 0.1:2:20 --out " + a.string()) == 0);
  CHECK(shell(bin + " dump --id T1E --grid 0.1:2:20 --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("z,lhs,rhs,abs_err,rel_err,terms_used\n", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

}  // TEST_SUITE
