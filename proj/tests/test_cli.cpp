#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch() {
  static auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "maxspread_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  std::string cmd = std::string(MAXSPREAD_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("family") {
  auto r = run("family --kind outerplanar-linear --n 10 --ell 7");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("10 15\n", 0) == 0);

  auto path = scratch() / "fan.txt";
  r = run("family --kind outerplanar-linear --n 10 --ell 7 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).rfind("10 15\n", 0) == 0);

  r = run("spectrum " + path.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"].size() == 10);
}

TEST_CASE("coeffs") {
  auto r = run("coeffs --family outerplanar --order 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"c1..c5 exact match: true\"") != std::string::npos);
}

TEST_CASE("scan") {
  auto csv = scratch() / "scan.csv";
  auto r = run("scan --kind outerplanar-linear --n 100 --csv " + csv.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["predicted_ell0"] == 67);
  CHECK(slurp(csv).rfind("ell,lambda1,lambdan,spread,series_spread\n", 0) == 0);
}

TEST_CASE("walks and enumerate") {
  auto r = run("walks --kmax 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("6,64,-196,6\n") != std::string::npos);

  r = run("enumerate --n 5 --class planar");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["max_spread"].get<double>() >= 2 * std::sqrt(6.0) - 1e-12);
}

TEST_CASE("usage errors exit 2") {
  auto r = run("family --kind outerplanar-linear --n 10 --ell 7 --bogus");
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run("").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("family --kind wheel --n 10").code == 2);
  CHECK(run("family --kind outerplanar --n 10 --ell 99").code == 2);
  CHECK(run("spectrum /nonexistent/graph.txt").code == 2);
  CHECK(run("enumerate --n 9 --class planar").code == 2);
  CHECK(run("walks --kmax 40").code == 2);
}
