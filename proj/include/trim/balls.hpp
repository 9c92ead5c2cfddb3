#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "trim/metrics.hpp"

namespace trim {

inline constexpr double kAnalyticTraceTol = 1e-9;
inline constexpr double kRootTraceTol = 1e-6;
inline constexpr double kConvexityTurnTol = 1e-9;
inline constexpr double kMaxTraceRadius = 0.995;  // outer branch blows up like 1/(1-r)

struct Disk {
  Point center;
  double radius = 0.0;
};

/// Ordered closed polyline sampling a metric-ball boundary. Parameters are
/// strictly ascending; residuals are |s(x, vertex) - r|.
struct BoundaryTrace {
  std::vector<Point> vertices;
  std::vector<double> params;
  std::vector<double> residuals;
  int open_rays = 0;               // directions with no crossing below the boundary
  bool lower_bound_metric = false; // true when s came from a sampled boundary
  double tolerance = kRootTraceTol;

  std::size_t size() const { return vertices.size(); }
  double max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
  }
};

enum class Branch { inner, outer };

struct ConvexityVerdict {
  enum class Method { analytic_slope, polyline_turning };
  bool convex = false;
  double worst_turn = 0.0;   // most violating normalized cross product
  double worst_param = 0.0;
  Method method = Method::polyline_turning;
};

/// Radial solutions t(alpha) of s(2*e1, t*(cos a, sin a)) = r in the plane
/// punctured at the origin. Valid for |alpha| <= arccos(1 - 2r^2); the two
/// branches meet where the discriminant vanishes.
inline std::pair<double, double> punctured_ball_radii(double alpha, double r) {
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  double c = std::cos(alpha);
  double disc = (1.0 + c) * (c + 2.0 * r * r - 1.0);
  if (disc < 0.0) {
    require(disc >= -1e-14, "angle outside the discriminant-positive range");
    disc = 0.0;
  }
  double sq = std::sqrt(disc);
  double denom = 1.0 - r * r;
  return {2.0 * (r * r + c - sq) / denom, 2.0 * (r * r + c + sq) / denom};
}

inline double punctured_alpha_max(double r) {
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  return std::acos(1.0 - 2.0 * r * r);
}

/// Analytic boundary trace of B_s(x, r) in the plane punctured at the origin.
///
/// The math is done at the normalized position 2*e1 and similarity-mapped back
/// to x. `samples` is the per-branch count; the alpha grid is chord-equalizing
/// (alpha = alpha_max * cos(theta), theta uniform) so the polyline stays close
/// to the curve at the branch join, where t behaves like a square root.
/// Parameters run over the inner branch as alpha in [-alpha_max, alpha_max]
/// and continue over the outer branch as 2*alpha_max - alpha.
inline BoundaryTrace trace_punctured_ball(const Point& x, double r, int samples) {
  check_planar(x);
  require(norm(x) > 0.0, "ball center coincides with the puncture");
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  require(r <= kMaxTraceRadius, "trace rejected for r > 0.995");
  require(samples >= 8, "analytic trace needs at least 8 samples per branch");

  const double amax = punctured_alpha_max(r);
  const double scale = norm(x) / 2.0;
  const double phi = std::atan2(x.y(), x.x());
  const Point origin{0.0, 0.0};

  const int n = samples;
  std::vector<double> alphas(n);
  for (int j = 0; j < n; ++j) {
    // theta uniform in [0, pi]; alpha descends from +amax to -amax
    alphas[j] = amax * std::cos(M_PI * j / (n - 1));
  }

  BoundaryTrace tr;
  tr.tolerance = kAnalyticTraceTol;
  tr.vertices.reserve(2 * n - 2);
  tr.params.reserve(2 * n - 2);
  tr.residuals.reserve(2 * n - 2);

  auto push = [&](double alpha, double t, double param) {
    Point v = scale * t * Point{std::cos(alpha + phi), std::sin(alpha + phi)};
    double s = dist(x, v) / (norm(x) + norm(v));
    double res = std::fabs(s - r);
    require(res <= tr.tolerance, "analytic trace residual exceeded tolerance");
    tr.vertices.push_back(std::move(v));
    tr.params.push_back(param);
    tr.residuals.push_back(res);
  };

  for (int j = n - 1; j >= 0; --j) {  // inner branch, alpha ascending
    double a = alphas[j];
    push(a, punctured_ball_radii(a, r).first, a);
  }
  for (int j = 1; j <= n - 2; ++j) {  // outer branch, alpha descending
    double a = alphas[j];
    push(a, punctured_ball_radii(a, r).second, 2.0 * amax - a);
  }
  return tr;
}

/// Euclidean realization of B_s(x, r) in the half-space: center has last
/// coordinate x_n (1+r^2)/(1-r^2), radius 2 x_n r / (1-r^2).
inline Disk halfspace_s_ball(const Point& x, double r) {
  require(x.dim() >= 2, "half-space points need dimension >= 2");
  require(x.last() > 0.0, "center must lie strictly inside the half-space");
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  double xn = x.last();
  Disk d{x, 2.0 * xn * r / (1.0 - r * r)};
  d.center[x.dim() - 1] = xn * (1.0 + r * r) / (1.0 - r * r);
  return d;
}

struct SBall {
  Point center;
  double s_radius = 0.0;
};

/// The Euclidean ball B(x, r), r < x_n, seen as an s ball of the half-space.
inline SBall euclid_ball_as_s_ball(const Point& x, double r) {
  require(x.dim() >= 2, "half-space points need dimension >= 2");
  require(x.last() > 0.0, "center must lie strictly inside the half-space");
  require(r > 0.0 && r < x.last(), "Euclidean radius must be smaller than the center height");
  double xn = x.last();
  double u = std::sqrt(xn * xn - r * r);
  SBall b{x, (xn - u) / r};
  b.center[x.dim() - 1] = u;
  return b;
}

/// s radius making B_s(x, sigma) a Euclidean ball of radius R (any R > 0);
/// the realization's center is x + e_n (sqrt(x_n^2 + R^2) - x_n).
inline double s_radius_for_euclid_radius(const Point& x, double R) {
  require(x.dim() >= 2 && x.last() > 0.0, "center must lie strictly inside the half-space");
  require(R > 0.0, "Euclidean radius must be positive");
  double xn = x.last();
  return R / (std::sqrt(xn * xn + R * R) + xn);
}

struct HyperbolicBall {
  Point center;
  double rho_radius = 0.0;
};

/// B_s(x, r) as a hyperbolic ball: since s = tanh(rho/2), the center is x
/// itself and the radius is artanh(2r/(1+r^2)) = 2 artanh(r).
inline HyperbolicBall s_ball_as_hyperbolic_ball(const Point& x, double r) {
  require(x.dim() >= 2 && x.last() > 0.0, "center must lie strictly inside the half-space");
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  return {x, std::atanh(2.0 * r / (1.0 + r * r))};
}

/// Euclidean realization of the hyperbolic ball B_rho(x, t): center raised to
/// x_n cosh t, radius x_n sinh t.
inline Disk rho_ball_halfspace(const Point& x, double t) {
  require(x.dim() >= 2 && x.last() > 0.0, "center must lie strictly inside the half-space");
  require(t > 0.0, "hyperbolic radius must be positive");
  Disk d{x, x.last() * std::sinh(t)};
  d.center[x.dim() - 1] = x.last() * std::cosh(t);
  return d;
}

/// First t in (0, t_hi] with f(t) >= target: 256-step scan for the first sign
/// change, then 60 bisection rounds. f is assumed below target near 0.
template <class F>
inline std::optional<double> first_crossing(F&& f, double target, double t_hi,
                                            int scan_steps = 256, int bisect_iters = 60) {
  double prev = 0.0;
  for (int k = 1; k <= scan_steps; ++k) {
    double t = t_hi * k / scan_steps;
    if (f(t) >= target) {
      double lo = prev, hi = t;
      for (int i = 0; i < bisect_iters; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) >= target ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = t;
  }
  return std::nullopt;
}

namespace detail {

/// Scan bound for a ray: grown geometrically from the local scale until fn
/// exceeds the target, capped just inside the boundary when the ray exits.
/// Keeps the bound within a factor two of the crossing so the bisection that
/// follows resolves it fully. nullopt = no crossing below the boundary.
template <class F>
inline std::optional<double> ray_scan_bound(const Domain& g, const Point& x, const Point& u,
                                            F&& fn, double target) {
  double t_exit = ray_exit(g, x, u);
  double cap = std::isfinite(t_exit) ? t_exit * (1.0 - 1e-9) : kInf;
  double t = std::min(std::max(dist_to_boundary(g, x), 1e-9 * (1.0 + norm(x))), cap);
  for (int grow = 0; grow < 200; ++grow) {
    if (fn(t) >= target) return t;
    if (t >= cap) return std::nullopt;
    t = std::min(t * 2.0, cap);
  }
  return std::nullopt;
}

}  // namespace detail

/// Root-found boundary trace: for each of `directions` unit directions from x,
/// the smallest t > 0 with s(x, x + t u) = r (first-crossing semantics).
/// Directions with no crossing below the domain boundary are recorded as open
/// rays and their vertices omitted.
inline BoundaryTrace trace_ball_generic(const Domain& g, const Point& x, double r,
                                        int directions) {
  check_planar(x);
  require(contains(g, x), "x must lie strictly inside the domain");
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  require(r <= kMaxTraceRadius, "trace rejected for r > 0.995");
  require(directions >= 8, "generic trace needs at least 8 directions");

  BoundaryTrace tr;
  tr.tolerance = kRootTraceTol;
  tr.lower_bound_metric = is_sampled_boundary(g);
  tr.vertices.reserve(directions);
  tr.params.reserve(directions);
  tr.residuals.reserve(directions);

  for (int i = 0; i < directions; ++i) {
    double theta = -M_PI + 2.0 * M_PI * i / directions;
    Point u{std::cos(theta), std::sin(theta)};
    auto s_at = [&](double t) { return s_distance(g, x, x + t * u); };
    auto bound = detail::ray_scan_bound(g, x, u, s_at, r);
    if (!bound) {
      ++tr.open_rays;
      continue;
    }
    auto t = first_crossing(s_at, r, *bound);
    if (!t) {
      ++tr.open_rays;
      continue;
    }
    Point v = x + *t * u;
    double res = std::fabs(s_distance(g, x, v) - r);
    require(res <= tr.tolerance, "root-found trace residual exceeded tolerance");
    tr.vertices.push_back(std::move(v));
    tr.params.push_back(theta);
    tr.residuals.push_back(res);
  }
  return tr;
}

/// Discrete convexity test for a closed trace: all consecutive-edge cross
/// products must share the orientation sign up to tol (normalized by edge
/// lengths). worst_turn is the most violating normalized cross product.
inline ConvexityVerdict polyline_is_convex(const BoundaryTrace& tr,
                                           double tol = kConvexityTurnTol) {
  const auto& v = tr.vertices;
  const std::size_t m = v.size();
  require(m >= 4, "closed trace needs at least 4 vertices");

  std::vector<Point> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = v[(i + 1) % m] - v[i];
    require(norm(e[i]) > 0.0, "degenerate (repeated) trace vertices");
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) area2 += cross2(v[i], v[(i + 1) % m]);
  double orient = area2 >= 0.0 ? 1.0 : -1.0;

  ConvexityVerdict verdict;
  verdict.method = ConvexityVerdict::Method::polyline_turning;
  double worst = kInf;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = (i + 1) % m;
    double turn = orient * cross2(e[i], e[j]) / (norm(e[i]) * norm(e[j]));
    if (turn < worst) {
      worst = turn;
      worst_i = j;
    }
  }
  verdict.worst_turn = worst;
  verdict.worst_param = tr.params.empty() ? 0.0 : tr.params[worst_i];
  verdict.convex = worst >= -tol;
  return verdict;
}

/// Tangent slope of the punctured-ball boundary branch at polar angle alpha
/// (normalized picture; slopes are invariant under the similarity scaling).
inline double slope_punctured(double r, double alpha, Branch branch) {
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  double amax = punctured_alpha_max(r);
  require(alpha > 0.0 && alpha < amax, "angle outside the discriminant-positive range");
  double c = std::cos(alpha);
  double sq = std::sqrt((1.0 + c) * (c + 2.0 * r * r - 1.0));
  double s = std::sin(alpha);
  double tn = std::tan(alpha);
  if (branch == Branch::inner) return (sq + s * tn) / (s - sq * tn);
  return (-sq + s * tn) / (s + sq * tn);
}

/// Slope-monotonicity classification of the punctured ball: convex iff the
/// inner-branch slope never increases and the outer-branch slope never
/// decreases along the sampled angle grid. worst_turn carries the most
/// violating monotonicity step (normalized by the slope magnitudes).
inline ConvexityVerdict punctured_ball_slope_verdict(double r, int grid = 256) {
  double amax = punctured_alpha_max(r);
  ConvexityVerdict verdict;
  verdict.method = ConvexityVerdict::Method::analytic_slope;
  verdict.convex = true;
  verdict.worst_turn = kInf;
  double prev1 = 0.0, prev2 = 0.0;
  for (int j = 0; j < grid; ++j) {
    double a = amax * (1e-4 + (1.0 - 2e-4) * j / (grid - 1));
    double m1 = slope_punctured(r, a, Branch::inner);
    double m2 = slope_punctured(r, a, Branch::outer);
    if (j > 0) {
      double scale1 = std::max({1.0, std::fabs(prev1), std::fabs(m1)});
      double scale2 = std::max({1.0, std::fabs(prev2), std::fabs(m2)});
      double step1 = (prev1 - m1) / scale1;  // positive expected (decreasing)
      double step2 = (m2 - prev2) / scale2;  // positive expected (increasing)
      for (double step : {step1, step2}) {
        if (step < verdict.worst_turn) {
          verdict.worst_turn = step;
          verdict.worst_param = a;
        }
      }
      if (step1 < -1e-9 || step2 < -1e-9) verdict.convex = false;
    }
    prev1 = m1;
    prev2 = m2;
  }
  return verdict;
}

inline bool punctured_ball_convex_by_slopes(double r, int grid = 256) {
  return punctured_ball_slope_verdict(r, grid).convex;
}

/// Trace dispatch used by classification and the inclusion checks: analytic
/// for the punctured plane (translated so the puncture sits at the origin),
/// the exact circle for the half-space, root-found otherwise.
inline BoundaryTrace trace_ball(const Domain& g, const Point& x, double r, int samples) {
  if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
    check_planar(x);
    BoundaryTrace tr = trace_punctured_ball(x - d->puncture, r, samples);
    for (Point& v : tr.vertices) v = v + d->puncture;
    return tr;
  }
  if (std::get_if<HalfSpace>(&g)) {
    check_planar(x);
    Disk disk = halfspace_s_ball(x, r);
    BoundaryTrace tr;
    tr.tolerance = kAnalyticTraceTol;
    for (int i = 0; i < samples; ++i) {
      double theta = -M_PI + 2.0 * M_PI * i / samples;
      Point v = disk.center + disk.radius * Point{std::cos(theta), std::sin(theta)};
      double res = std::fabs(s_distance(g, x, v) - r);
      require(res <= tr.tolerance, "half-space disk residual exceeded tolerance");
      tr.vertices.push_back(std::move(v));
      tr.params.push_back(theta);
      tr.residuals.push_back(res);
    }
    return tr;
  }
  return trace_ball_generic(g, x, r, samples);
}

/// Largest r in [r_lo, r_hi] (to about 1e-4) below which traced balls stay
/// convex. Errors out when the ball is already nonconvex at r_lo; returns
/// r_hi when nonconvexity never shows up.
inline double convexity_radius_estimate(const Domain& g, const Point& x, double r_lo,
                                        double r_hi) {
  require(0.0 < r_lo && r_lo < r_hi && r_hi < 1.0, "need 0 < r_lo < r_hi < 1");
  int samples = std::holds_alternative<PuncturedSpace>(g) ? 2049 : 1024;
  auto convex_at = [&](double r) { return polyline_is_convex(trace_ball(g, x, r, samples)).convex; };
  require(convex_at(r_lo), "ball is already nonconvex at r_lo");
  if (convex_at(r_hi)) return r_hi;
  double lo = r_lo, hi = r_hi;
  while (hi - lo > 2e-4) {
    double mid = 0.5 * (lo + hi);
    (convex_at(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Radius bound below which B_s(x, r) in the punctured half-plane (puncture
/// at e2) is convex, for x = (x1, x2) with 0 < x2 < |x1|.
inline double r0_punctured_halfplane(const Point& x) {
  check_planar(x);
  require(x.y() > 0.0, "x must lie strictly inside the half-plane");
  require(x.y() < std::fabs(x.x()), "formula requires x2 < |x1|");
  return (std::hypot(x.x(), x.y()) - std::sqrt(2.0) * x.y()) / (std::fabs(x.x()) + x.y());
}

/// Smoothness bound for sector balls: below the returned radius the traced
/// boundary is a circle. beta is the angle of the center from the sector
/// axis. For alpha <= pi the bound is sin(beta)/sin(alpha/2); for reflex
/// sectors the derived half-angle pair (beta', alpha') applies, valid when
/// beta > (alpha - pi)/2 (which is what makes beta' positive).
inline double angular_smoothness_bound(double beta, double alpha) {
  require(alpha > 0.0 && alpha < 2.0 * M_PI, "sector opening must lie strictly inside (0, 2*pi)");
  require(beta > 0.0 && beta <= alpha / 2.0, "center angle must satisfy 0 < beta <= alpha/2");
  if (alpha <= M_PI) return std::sin(beta) / std::sin(alpha / 2.0);
  require(beta > (alpha - M_PI) / 2.0, "reflex branch requires beta > (alpha - pi)/2");
  double beta_p = beta / 2.0 + (M_PI - alpha) / 4.0;
  double alpha_p = (M_PI + alpha) / 2.0 - beta;
  return std::sin(beta_p) / std::sin(alpha_p / 2.0);
}

/// Algebraic (Kasa) circle fit; used to check traced boundaries for
/// circularity.
inline Disk fit_circle(const std::vector<Point>& pts) {
  require(pts.size() >= 3, "circle fit needs at least 3 points");
  // Normal equations for x^2 + y^2 + a x + b y + c = 0.
  double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sxz = 0, syz = 0, sz = 0;
  const double n = static_cast<double>(pts.size());
  for (const Point& p : pts) {
    check_planar(p);
    double z = p.x() * p.x() + p.y() * p.y();
    sxx += p.x() * p.x();
    sxy += p.x() * p.y();
    syy += p.y() * p.y();
    sx += p.x();
    sy += p.y();
    sxz += p.x() * z;
    syz += p.y() * z;
    sz += z;
  }
  // Solve the 3x3 system [sxx sxy sx; sxy syy sy; sx sy n] [a b c]' = -[sxz syz sz]'
  double A[3][4] = {{sxx, sxy, sx, -sxz}, {sxy, syy, sy, -syz}, {sx, sy, n, -sz}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::fabs(A[row][col]) > std::fabs(A[piv][col])) piv = row;
    std::swap(A[col], A[piv]);
    require(std::fabs(A[col][col]) > 1e-300, "degenerate circle fit");
    for (int row = col + 1; row < 3; ++row) {
      double f = A[row][col] / A[col][col];
      for (int k = col; k < 4; ++k) A[row][k] -= f * A[col][k];
    }
  }
  double sol[3];
  for (int row = 2; row >= 0; --row) {
    double acc = A[row][3];
    for (int k = row + 1; k < 3; ++k) acc -= A[row][k] * sol[k];
    sol[row] = acc / A[row][row];
  }
  Point center{-sol[0] / 2.0, -sol[1] / 2.0};
  double r2 = dot(center, center) - sol[2];
  require(r2 > 0.0, "degenerate circle fit");
  return {center, std::sqrt(r2)};
}

inline double max_circle_deviation(const std::vector<Point>& pts, const Disk& d) {
  double worst = 0.0;
  for (const Point& p : pts) worst = std::max(worst, std::fabs(dist(p, d.center) - d.radius));
  return worst;
}

}  // namespace trim
