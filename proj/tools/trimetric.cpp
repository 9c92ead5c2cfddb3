// trimetric: evaluate triangular-ratio-type metrics on canonical planar
// domains, trace and render metric balls, and run the verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 domain or
// precondition error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trim/balls.hpp"
#include "trim/inclusions.hpp"
#include "trim/metrics.hpp"
#include "trim/serialize.hpp"
#include "trim/svg.hpp"

namespace {

using nlohmann::json;
using namespace trim;

Point parse_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      coords.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("point", "cannot parse coordinate '" + item + "'");
    }
  }
  if (coords.size() < 2) throw CLI::ValidationError("point", "need at least 2 coordinates");
  return Point(std::move(coords));
}

std::vector<Point> parse_point_list(const std::string& text) {
  std::vector<Point> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) pts.push_back(parse_point(item));
  return pts;
}

struct DomainFlags {
  std::string kind = "punctured";
  std::string puncture;
  std::string vertices;
  std::string boundary;
  double alpha = M_PI;
  int boundary_samples = 4096;

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", kind, "Domain kind")
        ->check(CLI::IsMember(
            {"punctured", "halfspace", "punctured-halfspace", "angular", "polygon", "sampled",
             "ball"}))
        ->capture_default_str();
    cmd->add_option("--puncture", puncture,
                    "Puncture point (default 0,0 for punctured; 0,1 for punctured-halfspace)");
    cmd->add_option("--alpha", alpha, "Sector opening in radians (angular domain)");
    cmd->add_option("--vertices", vertices, "Polygon vertices as x,y;x,y;...");
    cmd->add_option("--boundary", boundary, "Boundary samples as x,y;x,y;... (sampled domain)");
    cmd->add_option("--boundary-samples", boundary_samples,
                    "Sample count for the unit-circle preset (ball domain)");
  }

  Domain build() const {
    if (kind == "punctured")
      return PuncturedSpace{puncture.empty() ? Point{0.0, 0.0} : parse_point(puncture)};
    if (kind == "halfspace") return HalfSpace{2};
    if (kind == "punctured-halfspace")
      return make_punctured_halfspace(puncture.empty() ? Point{0.0, 1.0}
                                                       : parse_point(puncture));
    if (kind == "angular") return make_angular(alpha);
    if (kind == "polygon") {
      require(!vertices.empty(), "polygon domain needs --vertices");
      return make_polygon(parse_point_list(vertices));
    }
    if (kind == "sampled") {
      require(!boundary.empty(), "sampled domain needs --boundary");
      return make_sampled_boundary(parse_point_list(boundary));
    }
    // "ball": the unit disk through its sampled boundary (s is a lower bound)
    std::vector<Point> samples;
    samples.reserve(boundary_samples);
    for (int i = 0; i < boundary_samples; ++i) {
      double t = 2.0 * M_PI * i / boundary_samples;
      samples.push_back(Point{std::cos(t), std::sin(t)});
    }
    return make_sampled_boundary(std::move(samples));
  }
};

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// dist

struct DistCmd {
  DomainFlags dom;
  std::string x, y, metric = "s";

  int run() const {
    Domain g = dom.build();
    MetricKind kind;
    if (metric == "s") kind = MetricKind::S;
    else if (metric == "j") kind = MetricKind::J;
    else if (metric == "k") kind = MetricKind::K;
    else kind = MetricKind::RhoHalfSpace;
    double v = metric_distance(kind, g, parse_point(x), parse_point(y));
    if (is_sampled_boundary(g) && kind == MetricKind::S)
      std::cerr << "note: sampled boundary, the s value is a lower bound\n";
    std::cout << fmt15(v) << "\n";
    return 0;
  }
};

// ---------------------------------------------------------------------------
// ball

struct BallCmd {
  DomainFlags dom;
  std::string x;
  std::vector<double> rs;
  int samples = 1024;
  std::string out_csv, out_svg;
  std::vector<std::string> overlays;

  void render_domain(SvgCanvas& canvas, const Domain& g, const RenderSpec& spec,
                     const Point& lo, const Point& hi) const {
    if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
      canvas.marker(d->puncture, "#000000");
    } else if (std::get_if<HalfSpace>(&g)) {
      canvas.line(Point{lo.x(), 0.0}, Point{hi.x(), 0.0}, spec.domain_boundary);
    } else if (const auto* d = std::get_if<PuncturedHalfSpace>(&g)) {
      canvas.line(Point{lo.x(), 0.0}, Point{hi.x(), 0.0}, spec.domain_boundary);
      canvas.marker(d->puncture, "#000000");
    } else if (const auto* d = std::get_if<Angular>(&g)) {
      double reach = 2.0 * std::max(norm(lo), norm(hi));
      for (const Segment& s : angular_sides(*d))
        canvas.line(s.a, s.a + reach * normalized(s.b), spec.domain_boundary);
    } else if (const auto* d = std::get_if<Polygon>(&g)) {
      canvas.polyline(d->vertices, spec.domain_boundary, "domain boundary");
    } else if (const auto* d = std::get_if<SampledBoundary>(&g)) {
      canvas.polyline(d->samples, spec.domain_boundary, "sampled domain boundary");
    }
  }

  int run() const {
    Domain g = dom.build();
    Point center = parse_point(x);
    require(!rs.empty(), "ball command needs at least one --r");
    if (!out_csv.empty())
      require(rs.size() == 1, "--out expects exactly one --r (one trace per CSV file)");

    std::vector<BoundaryTrace> traces;
    traces.reserve(rs.size());
    for (double r : rs) traces.push_back(trace_ball(g, center, r, samples));

    if (!out_csv.empty()) {
      std::ofstream f(out_csv, std::ios::binary);
      require(static_cast<bool>(f), "cannot open output file: " + out_csv);
      write_trace_csv(f, traces.front());
    }

    if (!out_svg.empty()) {
      // viewport from all traces plus the center and domain anchors
      Point lo = center, hi = center;
      auto grow = [&](const Point& p) {
        lo = Point{std::min(lo.x(), p.x()), std::min(lo.y(), p.y())};
        hi = Point{std::max(hi.x(), p.x()), std::max(hi.y(), p.y())};
      };
      for (const auto& tr : traces)
        for (const Point& v : tr.vertices) grow(v);
      if (const auto* d = std::get_if<PuncturedSpace>(&g)) grow(d->puncture);
      if (const auto* d = std::get_if<PuncturedHalfSpace>(&g)) grow(d->puncture);
      double pad = 0.05 * std::max(hi.x() - lo.x(), hi.y() - lo.y());
      pad = std::max(pad, 1e-6);
      lo = lo - Point{pad, pad};
      hi = hi + Point{pad, pad};

      RenderSpec spec;
      spec.view_min = lo;
      spec.view_max = hi;
      spec.resolution = std::max(64, samples);
      spec.validate();

      SvgCanvas canvas(lo, hi);
      render_domain(canvas, g, spec, lo, hi);
      canvas.marker(center, "#1f77b4");

      double d_bd = dist_to_boundary(g, center);
      for (std::size_t i = 0; i < rs.size(); ++i) {
        double r = rs[i];
        char meta[160];
        std::snprintf(meta, sizeof meta, "s-ball r=%.6g vertices=%zu max_residual=%.3e%s", r,
                      traces[i].size(), traces[i].max_residual(),
                      traces[i].open_rays ? " (partial)" : "");
        canvas.polyline(traces[i].vertices, spec.s_ball, meta, traces[i].open_rays == 0);

        for (const std::string& ov : overlays) {
          if (ov == "euclid") {
            canvas.circle(center, 2.0 * r / (1.0 + r) * d_bd, spec.euclid_bound,
                          "euclid inner bound");
            canvas.circle(center, 2.0 * r / (1.0 - r) * d_bd, spec.euclid_bound,
                          "euclid outer bound");
          } else if (ov == "j") {
            auto draw_j_sphere = [&](double jr, const char* role) {
              auto pts = detail::j_sphere(g, center, jr, spec.resolution);
              double worst = 0.0;
              for (const Point& p : pts)
                worst = std::max(worst, std::fabs(j_distance(g, center, p) - jr));
              char comment[128];
              std::snprintf(comment, sizeof comment, "j-ball %s radius %.6g max_residual=%.3e",
                            role, jr, worst);
              canvas.polyline(pts, spec.j_ball, comment);
            };
            bool hs = std::holds_alternative<HalfSpace>(g);
            draw_j_sphere(hs ? std::log1p(2.0 * r / std::sqrt(1.0 - r * r))
                             : std::log1p(2.0 * r),
                          "inner");
            bool tight = hs || std::holds_alternative<PuncturedSpace>(g);
            if (tight || r < 1.0 / 3.0) {
              draw_j_sphere(tight ? std::log1p(2.0 * r / (1.0 - r))
                                  : std::log1p(2.0 * r / (1.0 - 3.0 * r)),
                            "outer");
            }
          } else if (ov == "k") {
            if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
              auto draw_k_sphere = [&](double kr, const char* role) {
                auto ring = detail::k_sphere_punctured(center - d->puncture, kr,
                                                       spec.resolution);
                double worst = 0.0;
                for (Point& p : ring) {
                  worst = std::max(
                      worst, std::fabs(k_distance_punctured(center - d->puncture, p) - kr));
                  p = p + d->puncture;
                }
                char comment[128];
                std::snprintf(comment, sizeof comment,
                              "k-ball %s radius %.6g max_residual=%.3e", role, kr, worst);
                canvas.polyline(ring, spec.k_ball, comment);
              };
              draw_k_sphere(std::log1p(2.0 * r), "inner");
              if (r < 0.5) draw_k_sphere(2.0 * std::asin(r / (1.0 - r)), "outer");
            } else if (std::holds_alternative<HalfSpace>(g)) {
              Disk kb = rho_ball_halfspace(center, s_radius_to_k_radius_halfspace(r));
              canvas.circle(kb.center, kb.radius, spec.k_ball,
                            "k-ball (coincides with the s-ball)");
            } else {
              throw precondition_error(
                  "k overlay is supported on punctured space and half-space only");
            }
          } else {
            throw precondition_error("unknown overlay: " + ov);
          }
        }
      }
      canvas.save(out_svg);
    }

    if (out_csv.empty() && out_svg.empty()) {
      require(rs.size() == 1, "writing a trace to stdout expects exactly one --r");
      write_trace_csv(std::cout, traces.front());
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// convexity

struct ConvexityCmd {
  DomainFlags dom;
  std::string x;
  double r_lo = 0.05, r_hi = 0.95;
  int grid = 9;
  int samples = 1024;
  std::string out;

  int run() const {
    Domain g = dom.build();
    Point center = parse_point(x);

    json classification = json::array();
    double convex_margin = kInf;
    bool consistent = true;
    double estimate;
    std::string notes;

    if (std::holds_alternative<HalfSpace>(g)) {
      estimate = 1.0;
      notes = "balls are Euclidean disks; convex for all r < 1";
    } else {
      estimate = convexity_radius_estimate(g, center, r_lo, r_hi);
      notes = "bisection on traced-ball convexity";
    }
    for (int i = 0; i < grid; ++i) {
      double r = r_lo + (r_hi - r_lo) * i / (grid - 1);
      auto verdict = polyline_is_convex(trace_ball(g, center, r, samples));
      classification.push_back(
          {{"r", r}, {"convex", verdict.convex}, {"worst_turn", verdict.worst_turn}});
      if (verdict.convex) convex_margin = std::min(convex_margin, verdict.worst_turn);
      bool expected = r <= estimate + 1e-3;
      if (verdict.convex != expected) consistent = false;
    }

    json rep = {{"schema", 1},
                {"name", "convexity-radius"},
                {"pass", consistent},
                {"worst_margin", convex_margin},
                {"worst_location", {center.x(), center.y()}},
                {"grid", "r in [" + fmt15(r_lo) + ", " + fmt15(r_hi) + "], " +
                             std::to_string(grid) + " classifications"},
                {"seed", kDefaultSeed},
                {"notes", notes},
                {"estimated_radius", estimate},
                {"classification", classification}};
    std::string text = rep.dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      require(static_cast<bool>(f), "cannot open output file: " + out);
      f << text;
    }
    return consistent ? 0 : 1;
  }
};

// ---------------------------------------------------------------------------
// verify

struct VerifyCmd {
  std::string suite = "all";
  DomainFlags dom;
  std::string x, r_flag;
  int samples = 720;
  std::uint64_t seed = kDefaultSeed;
  double tol = kCheckTol;
  bool domain_given = false;

  static std::vector<double> r_grid(double lo, double hi, double step) {
    std::vector<double> rs;
    for (double r = lo; r <= hi + 1e-12; r += step) rs.push_back(r);
    return rs;
  }

  template <class Fn>
  CheckReport aggregate(const std::string& name, const std::vector<double>& rs, Fn&& fn) const {
    CheckReport merged;
    merged.name = name;
    double worst_r = rs.front();
    for (double r : rs) {
      CheckReport rep = fn(r);
      if (rep.worst_margin < merged.worst_margin) {
        merged.worst_margin = rep.worst_margin;
        merged.worst_location = rep.worst_location;
        merged.notes = rep.notes;
        worst_r = r;
      }
    }
    merged.grid = "aggregated over r in {" + detail::fmt(rs.front()) + " .. " +
                  detail::fmt(rs.back()) + "} (" + std::to_string(rs.size()) + " radii)";
    merged.notes = "worst radius r=" + detail::fmt(worst_r) + "; " + merged.notes;
    merged.seed = seed;
    merged.finish(tol);
    return merged;
  }

  std::vector<CheckReport> run_suite(const std::string& which) const {
    std::vector<CheckReport> reps;
    Domain punct = PuncturedSpace{Point{0.0, 0.0}};
    Domain hs = HalfSpace{2};
    Domain square = make_polygon({Point{0.0, 0.0}, Point{1.0, 0.0}, Point{1.0, 1.0},
                                  Point{0.0, 1.0}});
    DomainFlags ball_flags;
    ball_flags.kind = "ball";
    ball_flags.boundary_samples = 512;  // every metric eval scans all samples
    Domain ball = ball_flags.build();

    if (which == "euclid") {
      if (domain_given) {
        Domain g = dom.build();
        Point c = parse_point(x);
        double r = std::stod(r_flag);
        CheckReport rep = euclid_inclusion_check(g, c, r, samples);
        rep.finish(tol);
        reps.push_back(std::move(rep));
        return reps;
      }
      reps.push_back(aggregate("euclid-inclusion-punctured", r_grid(0.1, 0.9, 0.1), [&](double r) {
        return euclid_inclusion_check(punct, Point{2.0, 0.0}, r, samples);
      }));
      reps.push_back(aggregate("euclid-inclusion-halfspace", r_grid(0.1, 0.9, 0.1), [&](double r) {
        return euclid_inclusion_check(hs, Point{0.0, 1.0}, r, samples);
      }));
      return reps;
    }
    if (which == "j") {
      if (domain_given) {
        Domain g = dom.build();
        Point c = parse_point(x);
        double r = std::stod(r_flag);
        CheckReport rep = j_inclusion_check(g, c, r, samples);
        rep.finish(tol);
        reps.push_back(std::move(rep));
        return reps;
      }
      reps.push_back(aggregate("j-inclusion-punctured", r_grid(0.05, 0.95, 0.05), [&](double r) {
        return j_inclusion_check(punct, Point{0.5, 0.0}, r, samples);
      }));
      reps.push_back(aggregate("j-inclusion-halfspace", r_grid(0.05, 0.95, 0.05), [&](double r) {
        return j_inclusion_check(hs, Point{0.0, 1.0}, r, samples);
      }));
      reps.push_back(aggregate("j-inclusion-polygon", r_grid(0.05, 0.30, 0.05), [&](double r) {
        return j_inclusion_check(square, Point{0.5, 0.5}, r, samples);
      }));
      reps.push_back(aggregate("j-inclusion-sampled", r_grid(0.05, 0.30, 0.05), [&](double r) {
        return j_inclusion_check(ball, Point{0.3, 0.2}, r, std::min(samples, 240));
      }));
      return reps;
    }
    if (which == "k") {
      if (domain_given) {
        Domain g = dom.build();
        Point c = parse_point(x);
        double r = std::stod(r_flag);
        CheckReport rep = k_inclusion_check(g, c, r, samples);
        rep.finish(tol);
        reps.push_back(std::move(rep));
        return reps;
      }
      reps.push_back(aggregate("k-inclusion-punctured", r_grid(0.05, 0.95, 0.05), [&](double r) {
        return k_inclusion_check(punct, Point{2.0, 0.0}, r, samples);
      }));
      reps.push_back(aggregate("k-inclusion-halfspace", r_grid(0.05, 0.95, 0.05), [&](double r) {
        return k_inclusion_check(hs, Point{0.0, 1.0}, r, samples);
      }));
      return reps;
    }
    if (which == "lemmas") {
      for (auto fn : {MonotoneFn::f1, MonotoneFn::f2, MonotoneFn::f3, MonotoneFn::f4})
        reps.push_back(monotone_function_check(fn, 2.0, 10001));
      reps.push_back(inner_slope_factor_scan(200, 200));
      return reps;
    }
    if (which == "conjectures") {
      ScanConfig cfg;
      cfg.m_samples = 500;
      cfg.t_samples = 500;
      cfg.r_samples = 300;
      reps.push_back(conjecture_scan_part1(cfg));
      ScanConfig cfg2 = cfg;
      cfg2.t_samples = 300;
      reps.push_back(conjecture_scan_part2(cfg2));
      return reps;
    }
    throw precondition_error("unknown suite: " + which);
  }

  int run() {
    require(x.empty() == r_flag.empty(),
            "single-configuration verify needs both --x and --r");
    domain_given = !x.empty() && !r_flag.empty();
    std::vector<CheckReport> reps;
    if (suite == "all") {
      for (const char* s : {"euclid", "j", "k", "lemmas", "conjectures"})
        for (auto& rep : run_suite(s)) reps.push_back(std::move(rep));
    } else {
      reps = run_suite(suite);
    }
    std::sort(reps.begin(), reps.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });

    json out = json::array();
    bool all_pass = true;
    for (const auto& rep : reps) {
      out.push_back(to_json(rep));
      all_pass = all_pass && rep.pass;
      std::fprintf(stderr, "%-28s %s  worst_margin=%.6e\n", rep.name.c_str(),
                   rep.pass ? "PASS" : "FAIL", rep.worst_margin);
    }
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangular ratio metric toolkit"};
  app.require_subcommand(1);

  DistCmd dist_cmd;
  auto* dist = app.add_subcommand("dist", "Evaluate a metric between two points");
  dist_cmd.dom.attach(dist);
  dist->add_option("--x", dist_cmd.x, "First point, e.g. 2,0")->required();
  dist->add_option("--y", dist_cmd.y, "Second point")->required();
  dist->add_option("--metric", dist_cmd.metric, "Metric: s, j, k or rho")
      ->check(CLI::IsMember({"s", "j", "k", "rho"}))
      ->capture_default_str();

  BallCmd ball_cmd;
  auto* ball = app.add_subcommand("ball", "Trace a metric ball boundary (CSV and/or SVG)");
  ball_cmd.dom.attach(ball);
  ball->add_option("--x", ball_cmd.x, "Ball center")->required();
  ball->add_option("--r", ball_cmd.rs, "s radius in (0,1); repeatable")->required();
  ball->add_option("--samples", ball_cmd.samples, "Trace resolution")->capture_default_str();
  ball->add_option("--out", ball_cmd.out_csv, "CSV output path (single --r)");
  ball->add_option("--svg", ball_cmd.out_svg, "SVG output path");
  ball->add_option("--overlay", ball_cmd.overlays, "Comparison balls: euclid, j, k; repeatable")
      ->check(CLI::IsMember({"euclid", "j", "k"}));

  ConvexityCmd conv_cmd;
  auto* conv = app.add_subcommand("convexity", "Estimate the convexity radius of traced balls");
  conv_cmd.dom.attach(conv);
  conv->add_option("--x", conv_cmd.x, "Ball center")->required();
  conv->add_option("--r-lo", conv_cmd.r_lo, "Lower radius")->capture_default_str();
  conv->add_option("--r-hi", conv_cmd.r_hi, "Upper radius")->capture_default_str();
  conv->add_option("--grid", conv_cmd.grid, "Classification grid size")->capture_default_str();
  conv->add_option("--samples", conv_cmd.samples, "Trace resolution")->capture_default_str();
  conv->add_option("--out", conv_cmd.out, "Write the JSON report to a file");

  VerifyCmd verify_cmd;
  auto* verify = app.add_subcommand("verify", "Run inclusion / lemma / conjecture suites");
  verify->add_option("--suite", verify_cmd.suite, "euclid, j, k, lemmas, conjectures or all")
      ->check(CLI::IsMember({"euclid", "j", "k", "lemmas", "conjectures", "all"}))
      ->capture_default_str();
  verify_cmd.dom.attach(verify);
  verify->add_option("--x", verify_cmd.x, "Center for a single-configuration check");
  verify->add_option("--r", verify_cmd.r_flag, "Radius for a single-configuration check");
  verify->add_option("--samples", verify_cmd.samples, "Boundary samples per check")
      ->capture_default_str();
  verify->add_option("--seed", verify_cmd.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--tol", verify_cmd.tol, "Report tolerance (not closed-form tolerances)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (dist->parsed()) return dist_cmd.run();
    if (ball->parsed()) return ball_cmd.run();
    if (conv->parsed()) return conv_cmd.run();
    return verify_cmd.run();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const trim::precondition_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
