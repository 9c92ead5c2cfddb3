#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "trim/balls.hpp"
#include "trim/rng.hpp"

namespace trim {

inline constexpr double kCheckTol = 1e-9;

/// Outcome record of a property / inclusion / conjecture scan.
/// pass is equivalent to worst_margin >= -tolerance for the named check.
struct CheckReport {
  std::string name;
  bool pass = false;
  double worst_margin = kInf;  // >= 0 means the property held with room
  std::vector<double> worst_location;
  std::string grid;
  std::uint64_t seed = kDefaultSeed;
  std::string notes;

  void fold(double margin, std::vector<double> location) {
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_location = std::move(location);
    }
  }
  void finish(double tol = kCheckTol) { pass = worst_margin >= -tol; }
};

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline void note_sampled(CheckReport& rep, const Domain& g) {
  if (is_sampled_boundary(g))
    rep.notes += " s from a sampled boundary is a lower bound; evidence only.";
}

/// Boundary of the j ball of radius jr around x, by first-crossing root
/// finding along `samples` directions.
inline std::vector<Point> j_sphere(const Domain& g, const Point& x, double jr, int samples) {
  std::vector<Point> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double theta = -M_PI + 2.0 * M_PI * i / samples;
    Point u{std::cos(theta), std::sin(theta)};
    auto j_at = [&](double t) { return j_distance(g, x, x + t * u); };
    auto bound = ray_scan_bound(g, x, u, j_at, jr);
    if (!bound) continue;
    auto t = first_crossing(j_at, jr, *bound);
    if (t) pts.push_back(x + *t * u);
  }
  return pts;
}

/// Boundary of the quasihyperbolic ball of radius kr around x in the plane
/// punctured at the origin: |y| = |x| e^{±sqrt(kr^2 - a^2)} at angle a from x.
inline std::vector<Point> k_sphere_punctured(const Point& x, double kr, int samples) {
  std::vector<Point> pts;
  pts.reserve(2 * samples);
  double phi = std::atan2(x.y(), x.x());
  double nx = norm(x);
  for (int i = 0; i < samples; ++i) {
    double a = -kr + 2.0 * kr * i / (samples - 1);
    double lg = std::sqrt(std::max(kr * kr - a * a, 0.0));
    for (double sign : {1.0, -1.0}) {
      double rad = nx * std::exp(sign * lg);
      pts.push_back(rad * Point{std::cos(phi + a), std::sin(phi + a)});
    }
  }
  return pts;
}

}  // namespace detail

/// Euclidean sandwich around the s ball:
/// B(x, 2r/(1+r) d) inside B_s(x,r) inside B(x, 2r/(1-r) d), d = d_G(x).
/// (a) inner-sphere samples must have s <= r; (b) traced boundary vertices
/// must stay within the outer radius.
inline CheckReport euclid_inclusion_check(const Domain& g, const Point& x, double r,
                                          int samples) {
  check_planar(x);
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  double d = dist_to_boundary(g, x);
  double inner = 2.0 * r / (1.0 + r) * d;
  double outer = 2.0 * r / (1.0 - r) * d;

  CheckReport rep;
  rep.name = "euclid-inclusion-" + domain_name(g);
  rep.grid = "domain=" + domain_name(g) + " r=" + detail::fmt(r) +
             " inner-sphere=" + std::to_string(samples) + " trace=" + std::to_string(samples);

  for (int i = 0; i < samples; ++i) {
    double theta = -M_PI + 2.0 * M_PI * i / samples;
    Point y = x + inner * Point{std::cos(theta), std::sin(theta)};
    rep.fold(r - s_distance(g, x, y), {y.x(), y.y()});
  }
  BoundaryTrace tr = trace_ball(g, x, r, samples);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    rep.fold(outer - dist(x, tr.vertices[i]), {tr.vertices[i].x(), tr.vertices[i].y()});
  }
  rep.notes = "inner radius " + detail::fmt(inner) + ", outer radius " + detail::fmt(outer) + ".";
  if (tr.open_rays) rep.notes += " open rays: " + std::to_string(tr.open_rays) + ".";
  detail::note_sampled(rep, g);
  rep.finish();
  return rep;
}

/// j-ball sandwich around the s ball. Lower inclusion B_j(x, m) inside
/// B_s(x, r) holds on every domain with m = log(1+2r) (sharper
/// m = log(1+2r/sqrt(1-r^2)) on the half-space); the upper inclusion uses
/// M = log(1+2r/(1-r)) on the punctured space / half-space and
/// M = log(1+2r/(1-3r)) on general domains, the latter only for r < 1/3.
inline CheckReport j_inclusion_check(const Domain& g, const Point& x, double r, int samples) {
  check_planar(x);
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  bool punct = std::holds_alternative<PuncturedSpace>(g);
  bool hs = std::holds_alternative<HalfSpace>(g);

  CheckReport rep;
  rep.name = "j-inclusion-" + domain_name(g);
  double m_lower = hs ? std::log1p(2.0 * r / std::sqrt(1.0 - r * r)) : std::log1p(2.0 * r);
  rep.grid = "domain=" + domain_name(g) + " r=" + detail::fmt(r) +
             " directions=" + std::to_string(samples);
  rep.notes = "lower j radius " + detail::fmt(m_lower);

  for (const Point& y : detail::j_sphere(g, x, m_lower, samples))
    rep.fold(r - s_distance(g, x, y), {y.x(), y.y()});

  if (punct || hs) {
    double M = std::log1p(2.0 * r / (1.0 - r));
    rep.notes += ", upper j radius " + detail::fmt(M) + ".";
    BoundaryTrace tr = trace_ball(g, x, r, samples);
    for (const Point& v : tr.vertices) rep.fold(M - j_distance(g, x, v), {v.x(), v.y()});
  } else if (r < 1.0 / 3.0) {
    double M = std::log1p(2.0 * r / (1.0 - 3.0 * r));
    rep.notes += ", upper j radius " + detail::fmt(M) +
                 " (general-domain constant, not claimed sharp; measured gap reported by "
                 "the margin).";
    BoundaryTrace tr = trace_ball(g, x, r, samples);
    for (const Point& v : tr.vertices) rep.fold(M - j_distance(g, x, v), {v.x(), v.y()});
    if (tr.open_rays) rep.notes += " open rays: " + std::to_string(tr.open_rays) + ".";
  } else {
    rep.notes += "; upper inclusion needs r < 1/3, skipped.";
  }
  detail::note_sampled(rep, g);
  rep.finish();
  return rep;
}

/// Quasihyperbolic-ball comparisons. Punctured space: B_k(x, log(1+2r))
/// inside B_s(x, r), and for r < 1/2 also B_s(x, r) inside
/// B_k(x, 2 arcsin(r/(1-r))). Half-space: exact equality
/// B_s(x, r) = B_k(x, log(1+2r/(1-r))), asserted through two-sided boundary
/// residuals <= 1e-9.
inline CheckReport k_inclusion_check(const Domain& g, const Point& x, double r, int samples) {
  check_planar(x);
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");

  CheckReport rep;
  rep.name = "k-inclusion-" + domain_name(g);
  rep.grid = "domain=" + domain_name(g) + " r=" + detail::fmt(r) +
             " samples=" + std::to_string(samples);

  if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
    double k_low = std::log1p(2.0 * r);
    for (const Point& yn : detail::k_sphere_punctured(x - d->puncture, k_low, samples)) {
      Point y = yn + d->puncture;
      rep.fold(r - s_distance(g, x, y), {y.x(), y.y()});
    }
    rep.notes = "lower k radius " + detail::fmt(k_low);
    if (r < 0.5) {
      double k_up = 2.0 * std::asin(r / (1.0 - r));
      BoundaryTrace tr = trace_ball(g, x, r, samples);
      for (const Point& v : tr.vertices) {
        double kv = k_distance_punctured(x - d->puncture, v - d->puncture);
        rep.fold(k_up - kv, {v.x(), v.y()});
      }
      rep.notes += ", upper k radius " + detail::fmt(k_up) + ".";
    } else {
      rep.notes += "; upper inclusion needs r < 1/2, skipped.";
    }
    rep.finish();
    return rep;
  }

  if (std::holds_alternative<HalfSpace>(g)) {
    double keq = s_radius_to_k_radius_halfspace(r);
    double worst_res = 0.0;
    Disk kball = rho_ball_halfspace(x, keq);
    for (int i = 0; i < samples; ++i) {
      double theta = -M_PI + 2.0 * M_PI * i / samples;
      Point y = kball.center + kball.radius * Point{std::cos(theta), std::sin(theta)};
      worst_res = std::max(worst_res, std::fabs(s_distance(g, x, y) - r));
    }
    Disk sball = halfspace_s_ball(x, r);
    for (int i = 0; i < samples; ++i) {
      double theta = -M_PI + 2.0 * M_PI * i / samples;
      Point y = sball.center + sball.radius * Point{std::cos(theta), std::sin(theta)};
      worst_res = std::max(worst_res, std::fabs(rho_halfspace(x, y) - keq));
    }
    rep.worst_margin = -worst_res;
    rep.worst_location = {x.x(), x.y()};
    rep.notes = "two-sided boundary residual for the equality at k radius " + detail::fmt(keq) +
                "; margin is minus the worst residual.";
    rep.finish();
    return rep;
  }

  throw precondition_error(
      "quasihyperbolic ball checks are supported on punctured space and half-space only");
}

enum class WitnessKind { euclid_inner, euclid_outer, j_inner, j_outer };

/// Explicit points achieving equality in the punctured-space inclusion bounds
/// (puncture at the origin). Each satisfies s(x, y) = r together with the
/// matching Euclidean / j equality.
inline Point sharpness_witness(WitnessKind kind, const Point& x, double r) {
  require(norm(x) > 0.0, "witness construction needs x away from the puncture");
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  switch (kind) {
    case WitnessKind::euclid_inner:
      return ((1.0 - r) / (1.0 + r)) * x;
    case WitnessKind::euclid_outer:
    case WitnessKind::j_outer:
      return ((1.0 + r) / (1.0 - r)) * x;
    case WitnessKind::j_inner: {
      check_planar(x);
      return rotate2(x, 2.0 * std::asin(r));  // equal norms, chord 2r|x|
    }
  }
  throw precondition_error("unknown witness kind");
}

enum class MonotoneFn { f1, f2, f3, f4 };

/// Strict-monotonicity scan of the comparison functions used by the bound
/// proofs, with endpoint-limit verification:
///   f1(r) = log(1+a r)/r           decreasing on (0, inf), onto (0, a)
///   f2(r) = r/(2-r) - artanh r     decreasing on (0, 1),   onto (-inf, 0)
///   f3(r) = r/((2-r)(-log(1-r)))   decreasing on (0, 1),   onto (0, 1/2)
///   f4(t) = log t - (t-1)/(t+1)    increasing on (1, inf), onto (0, inf)
inline CheckReport monotone_function_check(MonotoneFn fn, double a, int grid_points) {
  require(grid_points >= 16, "monotone scan needs at least 16 grid points");
  require(a > 0.0, "f1 needs a > 0");

  auto f = [&](double t) -> double {
    switch (fn) {
      case MonotoneFn::f1:
        return std::log1p(a * t) / t;
      case MonotoneFn::f2:
        return t / (2.0 - t) - std::atanh(t);
      case MonotoneFn::f3:
        return t / ((2.0 - t) * (-std::log1p(-t)));
      case MonotoneFn::f4:
        return std::log(t) - (t - 1.0) / (t + 1.0);
    }
    return 0.0;
  };

  // Richardson extrapolation along offsets eps, eps/10 assuming a linear
  // leading term, per the open-endpoint policy.
  auto limit_at = [&](double endpoint, double sign) {
    double f1v = f(endpoint + sign * 1e-6);
    double f2v = f(endpoint + sign * 1e-7);
    return (10.0 * f2v - f1v) / 9.0;
  };

  bool increasing = fn == MonotoneFn::f4;
  double lo = 0.0, hi = 1.0;
  bool log_grid = false;
  switch (fn) {
    case MonotoneFn::f1:
      lo = 1e-6, hi = 1e9, log_grid = true;
      break;
    case MonotoneFn::f2:
    case MonotoneFn::f3:
      lo = 1e-6, hi = 1.0 - 1e-6;
      break;
    case MonotoneFn::f4:
      lo = 1.0 + 1e-6, hi = 1e9, log_grid = true;
      break;
  }

  CheckReport rep;
  const char* names[] = {"f1", "f2", "f3", "f4"};
  rep.name = std::string("monotone-") + names[static_cast<int>(fn)];
  rep.grid = std::string(log_grid ? "log" : "linear") + " grid, " +
             std::to_string(grid_points) + " points on [" + detail::fmt(lo) + ", " +
             detail::fmt(hi) + "]";

  double prev = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double u = static_cast<double>(i) / (grid_points - 1);
    double t = log_grid ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    double v = f(t);
    if (i > 0) {
      double step = increasing ? v - prev : prev - v;  // strictly positive expected
      rep.fold(step, {t});
    }
    prev = v;
  }
  bool strict = rep.worst_margin > 0.0;

  bool limits_ok = true;
  std::ostringstream notes;
  notes.precision(12);
  switch (fn) {
    case MonotoneFn::f1: {
      double l0 = limit_at(0.0, 1.0);
      double linf = f(1e9);
      limits_ok = std::fabs(l0 - a) <= 1e-6 && std::fabs(linf) <= 1e-6;
      notes << "limit at 0+: " << l0 << " (expected " << a << "); value at 1e9: " << linf
            << " (limit 0).";
      break;
    }
    case MonotoneFn::f2: {
      double l0 = limit_at(0.0, 1.0);
      double tail1 = f(1.0 - 1e-6), tail2 = f(1.0 - 1e-7);
      limits_ok = std::fabs(l0) <= 1e-6 && tail2 < tail1 && tail1 < -5.0;
      notes << "limit at 0+: " << l0 << " (expected 0); diverges to -inf at 1- (f(1-1e-6)="
            << tail1 << ").";
      break;
    }
    case MonotoneFn::f3: {
      double l0 = limit_at(0.0, 1.0);
      double tail1 = f(1.0 - 1e-6), tail2 = f(1.0 - 1e-7);
      limits_ok = std::fabs(l0 - 0.5) <= 1e-6 && tail2 < tail1 && tail1 < 0.08 && tail1 > 0.0;
      notes << "limit at 0+: " << l0 << " (expected 1/2); tends to 0 at 1- logarithmically "
            << "(f(1-1e-6)=" << tail1 << ", checked via monotone decrease).";
      break;
    }
    case MonotoneFn::f4: {
      double l1 = limit_at(1.0, 1.0);
      double tail = f(1e9);
      limits_ok = std::fabs(l1) <= 1e-6 && tail > 10.0;
      notes << "limit at 1+: " << l1 << " (expected 0); diverges to +inf (f(1e9)=" << tail
            << ").";
      break;
    }
  }
  rep.notes = notes.str();
  rep.pass = strict && limits_ok;
  return rep;
}

/// Grid scan of g(alpha) = cos(alpha) - 2 sqrt(2) cos(alpha/2)
/// sqrt(cos(alpha) + 2r^2 - 1), the factor controlling the inner-branch slope
/// derivative of punctured balls, over r in (0, 1/2], alpha in
/// (0, arccos(1-2r^2)). The margin is min(g) + 1; the infimum of g is exactly
/// -1 (at r = 1/2, alpha -> 0).
inline CheckReport inner_slope_factor_scan(int r_samples = 200, int alpha_samples = 200) {
  CheckReport rep;
  rep.name = "inner-slope-factor-grid";
  rep.grid = std::to_string(r_samples) + "x" + std::to_string(alpha_samples) +
             " grid, r in (0, 1/2], alpha in (0, arccos(1-2r^2)) at relative offset 1e-6";
  double g_small_r = 0, g_small_alpha = 0;
  for (int i = 0; i < r_samples; ++i) {
    double r = 1e-6 + (0.5 - 1e-6) * i / (r_samples - 1);
    double amax = punctured_alpha_max(r);
    for (int j = 0; j < alpha_samples; ++j) {
      double alpha = amax * (1e-6 + (1.0 - 2e-6) * j / (alpha_samples - 1));
      double g = std::cos(alpha) - 2.0 * std::sqrt(2.0) * std::cos(alpha / 2.0) *
                                       std::sqrt(std::cos(alpha) + 2.0 * r * r - 1.0);
      rep.fold(g + 1.0, {r, alpha});
      if (i == 0 && j == 0) g_small_r = g;
      if (i == r_samples - 1 && j == 0) g_small_alpha = g;
    }
  }
  std::ostringstream notes;
  notes.precision(12);
  double r_at = rep.worst_location.empty() ? 0.5 : rep.worst_location[0];
  notes << "min g = " << rep.worst_margin - 1.0 << "; the two candidate small-angle limits "
        << "1-4r = " << 1.0 - 4.0 * r_at << " and 4r-1 = " << 4.0 * r_at - 1.0
        << " disagree in sign; the measured minimum matches 1-4r. "
        << "g at smallest r: " << g_small_r << "; g at r=1/2, alpha->0: " << g_small_alpha << ".";
  rep.notes = notes.str();
  rep.finish();
  return rep;
}

/// Grids for the conjecture scans; open endpoints are approached to within
/// the stated inset.
struct ScanConfig {
  int m_samples = 500;
  int t_samples = 500;
  int r_samples = 300;
  double endpoint_inset = 1e-6;
};

inline double conjecture_part1_f(double m, double t) {
  double s2 = std::sin(m / 2.0);
  s2 *= s2;
  double lg = std::log(t);
  double arg2 = m * m - lg * lg;
  require(arg2 >= -1e-12, "t outside the real-valued region [e^-m, e^m]");
  return (1.0 - s2) * (1.0 + t * t) -
         2.0 * (s2 + std::cos(std::sqrt(std::max(arg2, 0.0)))) * t;
}

/// Scan of f(t) = (1 - sin^2(m/2))(1 + t^2) - 2 (sin^2(m/2) +
/// cos sqrt(m^2 - log^2 t)) t over m in [0, pi/2], t in [e^-m, e^m]; the
/// claim under scan is f <= 0. Evidence only, never a proof.
inline CheckReport conjecture_scan_part1(const ScanConfig& cfg = {}) {
  CheckReport rep;
  rep.name = "conjecture-part1";
  rep.grid = std::to_string(cfg.m_samples) + "x" + std::to_string(cfg.t_samples) +
             " grid, m in [0, pi/2], t = exp(m*(2u-1)) for u in [0,1]";
  for (int i = 0; i < cfg.m_samples; ++i) {
    double m = (M_PI / 2.0) * i / (cfg.m_samples - 1);
    for (int j = 0; j < cfg.t_samples; ++j) {
      double u = static_cast<double>(j) / (cfg.t_samples - 1);
      double t = std::exp(m * (2.0 * u - 1.0));
      rep.fold(-conjecture_part1_f(m, t), {m, t});
    }
  }
  rep.notes =
      "numerical evidence only; max f = " + detail::fmt(-rep.worst_margin) +
      ". The region t < e^-m (square root imaginary) is excluded from the scan.";
  rep.finish();
  return rep;
}

inline double conjecture_part2_f(double r, double t) {
  // ((1-r^2)/2)(t + 1/t) - r^2, evaluated in the factored form
  // 1 + ((1-r^2)/(2t))(t - t_lo)(t - t_hi) with t_lo t_hi = 1, which cannot
  // drift above 1 inside the interval (the direct sum does for r near 1).
  double t_lo = (1.0 - r) / (1.0 + r);
  double t_hi = (1.0 + r) / (1.0 - r);
  double arg = 1.0 + ((1.0 - r * r) / (2.0 * t)) * (t - t_lo) * (t - t_hi);
  require(arg >= -1.0 - 1e-12 && arg <= 1.0 + 1e-12, "arccos argument out of range");
  arg = std::clamp(arg, -1.0, 1.0);
  double ac = std::acos(arg);
  double lg = std::log(t);
  return ac * ac + lg * lg;
}

/// Scan of f(t) = arccos^2(((1-r^2)/2)(t + 1/t) - r^2) + log^2 t against its
/// endpoint value f((1+r)/(1-r)) over t in ((1-r)/(1+r), (1+r)/(1-r)),
/// r in (0,1); also checks the endpoint symmetry. Evidence only.
inline CheckReport conjecture_scan_part2(const ScanConfig& cfg = {}) {
  CheckReport rep;
  rep.name = "conjecture-part2";
  rep.grid = std::to_string(cfg.r_samples) + "x" + std::to_string(cfg.t_samples) +
             " grid, r in (0,1), t in ((1-r)/(1+r), (1+r)/(1-r)), endpoint inset " +
             detail::fmt(cfg.endpoint_inset);
  double worst_sym = 0.0;
  for (int i = 0; i < cfg.r_samples; ++i) {
    double r = cfg.endpoint_inset +
               (1.0 - 2.0 * cfg.endpoint_inset) * i / (cfg.r_samples - 1);
    double t_lo = (1.0 - r) / (1.0 + r);
    double t_hi = (1.0 + r) / (1.0 - r);
    double f_end = conjecture_part2_f(r, t_hi);
    worst_sym = std::max(worst_sym, std::fabs(f_end - conjecture_part2_f(r, t_lo)));
    double a = t_lo + cfg.endpoint_inset;
    double b = t_hi - cfg.endpoint_inset;
    for (int j = 0; j < cfg.t_samples; ++j) {
      double t = a + (b - a) * j / (cfg.t_samples - 1);
      rep.fold(f_end - conjecture_part2_f(r, t), {r, t});
    }
  }
  bool sym_ok = worst_sym <= 1e-12;
  rep.notes = "numerical evidence only; endpoint symmetry worst gap " + detail::fmt(worst_sym) +
              (sym_ok ? " (<= 1e-12)." : " EXCEEDS 1e-12.");
  rep.finish();
  rep.pass = rep.pass && sym_ok;
  return rep;
}

/// Random-pair scan of s * log(c) / j with c = 3 on the punctured space and
/// c = 2 on general domains. The margin is 1 - max ratio.
inline CheckReport s_j_ratio_check(const Domain& g, int samples,
                                   std::uint64_t seed = kDefaultSeed) {
  require(samples > 0, "need a positive sample count");
  bool punct = std::holds_alternative<PuncturedSpace>(g);
  double logc = punct ? std::log(3.0) : std::log(2.0);

  Rng rng(seed);
  auto draw = [&]() -> Point {
    if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
      double rad = std::exp(rng.uniform(-2.0, 2.0));
      double ang = rng.uniform(-M_PI, M_PI);
      return d->puncture + rad * Point{std::cos(ang), std::sin(ang)};
    }
    if (std::get_if<HalfSpace>(&g)) {
      return Point{rng.uniform(-3.0, 3.0), std::exp(rng.uniform(-2.0, 1.5))};
    }
    if (const auto* d = std::get_if<Polygon>(&g)) {
      // rejection sample with a safety margin off the boundary
      Point lo = d->vertices[0], hi = d->vertices[0];
      for (const Point& v : d->vertices) {
        lo = Point{std::min(lo.x(), v.x()), std::min(lo.y(), v.y())};
        hi = Point{std::max(hi.x(), v.x()), std::max(hi.y(), v.y())};
      }
      for (;;) {
        Point p{rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y())};
        if (contains(g, p) && dist_to_boundary(g, p) > 1e-3) return p;
      }
    }
    throw precondition_error("ratio scan supports punctured, half-space and polygon domains");
  };

  CheckReport rep;
  rep.name = "s-j-ratio-" + domain_name(g);
  rep.seed = seed;
  rep.grid = std::to_string(samples) + " random pairs";
  for (int i = 0; i < samples; ++i) {
    Point x = draw();
    Point y = draw();
    if (dist(x, y) == 0.0) continue;
    double ratio = s_distance(g, x, y) * logc / j_distance(g, x, y);
    rep.fold(1.0 - ratio, {x.x(), x.y(), y.x(), y.y()});
  }
  rep.notes = "constant log(" + std::string(punct ? "3" : "2") + "); max ratio " +
              detail::fmt(1.0 - rep.worst_margin) + ".";
  if (punct)
    rep.notes += " Equality configuration: equal-norm points collinear through the puncture.";
  rep.finish();
  return rep;
}

}  // namespace trim
