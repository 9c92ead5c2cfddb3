#include <catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"
#include "trim/serialize.hpp"
#include "trim/svg.hpp"

using namespace trim;

TEST_CASE("trace CSV format") {
  BoundaryTrace tr = trace_punctured_ball(Point{2.0, 0.0}, 0.4, 64);
  std::string csv = trace_to_csv(tr);
  CHECK(csv.rfind("param,px,py,residual\n", 0) == 0);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  int rows = 0;
  double prev = -kInf;
  while (std::getline(in, line)) {
    double param, px, py, res;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &param, &px, &py, &res) == 4);
    CHECK(param > prev);
    prev = param;
    CHECK(res <= 1e-9);
    ++rows;
  }
  CHECK(rows == static_cast<int>(tr.size()));
}

TEST_CASE("trace CSV flags partial traces and lower bounds in comments") {
  BoundaryTrace tr;
  tr.vertices = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  tr.params = {0, 1, 2, 3};
  tr.residuals = {0, 0, 0, 0};
  tr.open_rays = 3;
  tr.lower_bound_metric = true;
  std::string csv = trace_to_csv(tr);
  CHECK(csv.find("# partial trace: 3 open rays") != std::string::npos);
  CHECK(csv.find("# s from a sampled boundary is a lower bound") != std::string::npos);
  CHECK(csv.find("param,px,py,residual\n") != std::string::npos);
}

TEST_CASE("check report JSON schema") {
  CheckReport rep;
  rep.name = "example";
  rep.pass = true;
  rep.worst_margin = 0.25;
  rep.worst_location = {1.0, 2.0};
  rep.grid = "grid description";
  rep.seed = 99;
  rep.notes = "notes";
  auto j = to_json(rep);
  CHECK(j["schema"] == 1);
  CHECK(j["name"] == "example");
  CHECK(j["pass"] == true);
  CHECK(j["worst_margin"] == 0.25);
  CHECK(j["worst_location"].size() == 2);
  CHECK(j["grid"] == "grid description");
  CHECK(j["seed"] == 99);
  CHECK(j["notes"] == "notes");
}

TEST_CASE("svg output is well formed and deterministic") {
  auto render = []() {
    SvgCanvas canvas(Point{-1.0, -1.0}, Point{5.0, 5.0});
    BoundaryTrace tr = trace_punctured_ball(Point{2.0, 0.0}, 0.5, 128);
    canvas.polyline(tr.vertices, StrokeStyle{"#1f77b4", 1.8, "7 5"},
                    "s-ball r=0.5 max_residual=1e-12");
    canvas.circle(Point{2.0, 0.0}, 1.0, StrokeStyle{"#d62728", 1.2, ""}, "bound");
    canvas.marker(Point{0.0, 0.0}, "#000000");
    canvas.line(Point{-1.0, 0.0}, Point{5.0, 0.0}, StrokeStyle{});
    return canvas.str();
  };
  std::string svg = render();
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<!-- s-ball r=0.5 max_residual=1e-12 -->") != std::string::npos);
  CHECK(svg.find("stroke-dasharray=\"7 5\"") != std::string::npos);
  CHECK(svg == render());  // byte-identical across renders

  // crude balance check: every element opened is closed or self-closing
  CHECK(std::count(svg.begin(), svg.end(), '<') == std::count(svg.begin(), svg.end(), '>'));
}

TEST_CASE("render spec validation") {
  RenderSpec spec;
  spec.resolution = 16;
  CHECK_THROWS_AS(spec.validate(), precondition_error);
  spec.resolution = 128;
  spec.view_min = Point{1.0, 1.0};
  spec.view_max = Point{1.0, 2.0};
  CHECK_THROWS_AS(spec.validate(), precondition_error);
}
