#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef TRIM_CLI_PATH
#error "TRIM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TRIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_path(const std::string& name) {
  return "cli_test_" + name;
}

}  // namespace

TEST_CASE("dist prints 15 significant digits and exits 0") {
  auto res = run_cli("dist --domain halfspace --x 0,1 --y 0,3 --metric s");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0.5\n");

  auto punct = run_cli("dist --domain punctured --puncture 0,0 --x 2,0 --y 0.667,0 --metric s");
  CHECK(punct.exit_code == 0);
  double v = std::stod(punct.out);
  CHECK(std::fabs(v - 0.5) < 1e-3);  // exactly 0.5 at y = 2/3

  auto zero = run_cli("dist --domain halfspace --x 1,1 --y 1,1 --metric s");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "0\n");

  auto rho = run_cli("dist --domain halfspace --x 0,1 --y 0,3 --metric rho");
  CHECK(std::fabs(std::stod(rho.out) - std::log(3.0)) < 1e-14);
}

TEST_CASE("exit codes: 2 on usage errors, 3 on precondition errors") {
  CHECK(run_cli("dist --domain halfspace --x 0,1").exit_code == 2);            // missing --y
  CHECK(run_cli("dist --domain nosuch --x 0,1 --y 1,1").exit_code == 2);       // bad domain
  CHECK(run_cli("frobnicate").exit_code == 2);                                 // bad subcommand
  CHECK(run_cli("dist --domain halfspace --x 0,-1 --y 0,1 --metric s").exit_code == 3);
  CHECK(run_cli("dist --domain polygon --x 0,0 --y 1,1 --metric s").exit_code == 3);
  CHECK(run_cli("ball --domain punctured --x 2,0 --r 0.999").exit_code == 3);
  CHECK(run_cli("dist --domain punctured --puncture 0,0 --x 0,0 --y 1,0 --metric s").exit_code ==
        3);
}

TEST_CASE("dist on angular and polygon domains") {
  // sector of opening pi/2 about the positive first axis
  auto res = run_cli("dist --domain angular --alpha 1.5707963267948966 --x 1,0 --y 2,0 "
                     "--metric s");
  CHECK(res.exit_code == 0);
  // boundary-piece minimization: both sides symmetric, reflection across a
  // 45-degree ray
  double want = 1.0 / std::sqrt(1.0 * 1.0 + 2.0 * 2.0 - 2.0 * 2.0 * std::cos(M_PI / 2));
  CHECK(std::fabs(std::stod(res.out) - want) < 1e-12);

  auto poly = run_cli("dist --domain polygon --vertices \"0,0;1,0;1,1;0,1\" --x 0.5,0.5 "
                      "--y 0.5,0.75 --metric j");
  CHECK(poly.exit_code == 0);
  CHECK(std::fabs(std::stod(poly.out) - std::log1p(0.25 / 0.25)) < 1e-12);

  // outside the sector
  CHECK(run_cli("dist --domain angular --alpha 1.0 --x -1,0 --y 1,0 --metric s").exit_code == 3);
}

TEST_CASE("dist deterministic output") {
  std::string cmd = "dist --domain punctured --puncture 0,0 --x 1.7,0.3 --y -0.4,0.9 --metric j";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("ball writes a CSV trace") {
  std::string csv = temp_path("trace.csv");
  auto res = run_cli("ball --domain punctured --puncture 0,0 --x 2,0 --r 0.4 --samples 64 --out " +
                     csv);
  CHECK(res.exit_code == 0);
  std::ifstream f(csv);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "param,px,py,residual");
  int rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  CHECK(rows == 64 * 2 - 2);
  std::remove(csv.c_str());

  // two radii with --out is a usage error
  CHECK(run_cli("ball --domain punctured --x 2,0 --r 0.4 --r 0.5 --out " + csv).exit_code == 3);
}

TEST_CASE("ball writes an SVG with overlays") {
  std::string svg = temp_path("fig.svg");
  auto res = run_cli(
      "ball --domain halfspace --x 0,1 --r 0.5 --samples 128 --overlay euclid --svg " + svg);
  CHECK(res.exit_code == 0);
  std::ifstream f(svg);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  CHECK(text.find("<svg ") != std::string::npos);
  CHECK(text.find("s-ball r=0.5") != std::string::npos);
  CHECK(text.find("euclid inner bound") != std::string::npos);
  CHECK(text.find("euclid outer bound") != std::string::npos);
  CHECK(text.find("stroke-dasharray") != std::string::npos);
  std::remove(svg.c_str());
}

TEST_CASE("convexity reports the punctured-plane radius") {
  auto res = run_cli("convexity --domain punctured --puncture 0,0 --x 2,0 --r-lo 0.1 --r-hi 0.9 "
                     "--grid 5 --samples 513");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["schema"] == 1);
  CHECK(j["name"] == "convexity-radius");
  CHECK(std::fabs(j["estimated_radius"].get<double>() - 0.5) <= 1e-3);
  CHECK(j["classification"].size() == 5);

  auto hs = run_cli("convexity --domain halfspace --x 0,1 --grid 3 --samples 256");
  CHECK(hs.exit_code == 0);
  auto jh = nlohmann::json::parse(hs.out);
  CHECK(jh["estimated_radius"] == 1.0);
  CHECK(jh["notes"].get<std::string>().find("convex for all r < 1") != std::string::npos);
}

TEST_CASE("verify single-configuration suites pass") {
  auto res = run_cli("verify --suite j --domain punctured --puncture 0,0 --x 0.5,0 --r 0.4 "
                     "--samples 256");
  CHECK(res.exit_code == 0);
  auto arr = nlohmann::json::parse(res.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["name"] == "j-inclusion-punctured");
  CHECK(arr[0]["pass"] == true);
  CHECK(arr[0]["schema"] == 1);
}

TEST_CASE("verify lemmas suite passes and is deterministic") {
  auto a = run_cli("verify --suite lemmas");
  CHECK(a.exit_code == 0);
  auto b = run_cli("verify --suite lemmas");
  CHECK(a.out == b.out);
  auto arr = nlohmann::json::parse(a.out);
  CHECK(arr.size() == 5);  // monotone f1..f4 + slope factor grid
  for (const auto& rep : arr) CHECK(rep["pass"] == true);
}

TEST_CASE("verify conjectures suite emits evidence-only notes") {
  auto res = run_cli("verify --suite conjectures");
  CHECK(res.exit_code == 0);
  auto arr = nlohmann::json::parse(res.out);
  REQUIRE(arr.size() == 2);
  for (const auto& rep : arr) {
    CHECK(rep["pass"] == true);
    CHECK(rep["notes"].get<std::string>().find("numerical evidence only") != std::string::npos);
  }
}
