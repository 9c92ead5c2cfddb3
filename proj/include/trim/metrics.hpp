#pragma once

#include <algorithm>
#include <cmath>

#include "trim/domain.hpp"

namespace trim {

enum class MetricKind { S, J, K, RhoHalfSpace };

namespace detail {

inline void check_inside(const Domain& g, const Point& p, const char* who) {
  require(all_finite(p), std::string(who) + " has non-finite coordinates");
  require(contains(g, p), std::string(who) + " must lie strictly inside the domain");
}

}  // namespace detail

/// d_G(x): Euclidean distance from x to the domain boundary.
inline double dist_to_boundary(const Domain& g, const Point& x) {
  detail::check_inside(g, x, "x");
  if (const auto* d = std::get_if<PuncturedSpace>(&g)) return dist(x, d->puncture);
  if (std::get_if<HalfSpace>(&g)) return x.last();
  if (const auto* d = std::get_if<PuncturedHalfSpace>(&g))
    return std::min(x.last(), dist(x, d->puncture));
  if (const auto* d = std::get_if<Angular>(&g)) {
    auto sides = angular_sides(*d);
    return std::min(point_piece_distance(x, sides[0]), point_piece_distance(x, sides[1]));
  }
  if (const auto* d = std::get_if<Polygon>(&g)) {
    double best = kInf;
    for (const Segment& e : polygon_edges(*d)) best = std::min(best, point_piece_distance(x, e));
    return best;
  }
  const auto& d = std::get<SampledBoundary>(g);
  double best = kInf;
  for (const Point& z : d.samples) best = std::min(best, dist(x, z));
  return best;
}

/// Triangular ratio distance s_G(x,y) = sup_z |x-y| / (|x-z| + |z-y|) over
/// boundary points z. Closed forms where available, boundary path
/// minimization otherwise; always in [0,1].
inline double s_distance(const Domain& g, const Point& x, const Point& y) {
  check_dims(x, y);
  detail::check_inside(g, x, "x");
  detail::check_inside(g, y, "y");
  double xy = dist(x, y);
  if (xy == 0.0) return 0.0;

  double value = 0.0;
  if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
    value = xy / (dist(x, d->puncture) + dist(y, d->puncture));
  } else if (std::get_if<HalfSpace>(&g)) {
    value = xy / dist(x, reflect_halfspace(y));
  } else if (const auto* d = std::get_if<PuncturedHalfSpace>(&g)) {
    double hs = xy / dist(x, reflect_halfspace(y));
    double pu = xy / (dist(x, d->puncture) + dist(y, d->puncture));
    value = std::max(hs, pu);
  } else if (const auto* d = std::get_if<Angular>(&g)) {
    auto sides = angular_sides(*d);
    double denom = std::min(min_path_via_boundary_piece(x, y, sides[0]),
                            min_path_via_boundary_piece(x, y, sides[1]));
    value = xy / denom;
  } else if (const auto* d = std::get_if<Polygon>(&g)) {
    double denom = kInf;
    for (const Segment& e : polygon_edges(*d))
      denom = std::min(denom, min_path_via_boundary_piece(x, y, e));
    value = xy / denom;
  } else {
    const auto& sb = std::get<SampledBoundary>(g);
    for (const Point& z : sb.samples)
      value = std::max(value, xy / (dist(x, z) + dist(z, y)));
  }
  return std::clamp(value, 0.0, 1.0);
}

/// Distance-ratio metric j_G(x,y) = log(1 + |x-y| / min(d_G(x), d_G(y))).
inline double j_distance(const Domain& g, const Point& x, const Point& y) {
  check_dims(x, y);
  double xy = dist(x, y);
  if (xy == 0.0) {
    detail::check_inside(g, x, "x");
    return 0.0;
  }
  double d = std::min(dist_to_boundary(g, x), dist_to_boundary(g, y));
  return std::log1p(xy / d);
}

/// Quasihyperbolic distance in space punctured at the origin:
/// sqrt(angle^2 + log^2(|x|/|y|)).
inline double k_distance_punctured(const Point& x, const Point& y) {
  check_dims(x, y);
  require(norm(x) > 0.0 && norm(y) > 0.0, "point coincides with the puncture");
  if (dist(x, y) == 0.0) return 0.0;
  double alpha = angle_at(Point::zero(x.dim()), x, y);
  return std::hypot(alpha, std::log(norm(x) / norm(y)));
}

/// Hyperbolic distance of the upper half-space, via
/// sinh(rho/2) = |x-y| / (2 sqrt(x_n y_n)).
inline double rho_halfspace(const Point& x, const Point& y) {
  check_dims(x, y);
  require(x.dim() >= 2, "half-space points need dimension >= 2");
  require(x.last() > 0.0 && y.last() > 0.0, "nonpositive last coordinate");
  return 2.0 * std::asinh(dist(x, y) / (2.0 * std::sqrt(x.last() * y.last())));
}

/// In the half-space, B_s(x,r) coincides with the quasihyperbolic ball of
/// radius log(1 + 2r/(1-r)); this converts the s radius.
inline double s_radius_to_k_radius_halfspace(double r) {
  require(r > 0.0 && r < 1.0, "s radius must lie in (0,1)");
  return std::log1p(2.0 * r / (1.0 - r));
}

inline double k_radius_to_s_radius_halfspace(double k) {
  require(k > 0.0, "k radius must be positive");
  return std::tanh(k / 2.0);  // (e^k - 1)/(e^k + 1)
}

/// Dispatch by metric kind. K is available on the punctured space
/// (closed form) and the half-space (where it equals rho, the boundary
/// distance being the hyperbolic density).
inline double metric_distance(MetricKind m, const Domain& g, const Point& x, const Point& y) {
  switch (m) {
    case MetricKind::S:
      return s_distance(g, x, y);
    case MetricKind::J:
      return j_distance(g, x, y);
    case MetricKind::K: {
      if (const auto* d = std::get_if<PuncturedSpace>(&g)) {
        detail::check_inside(g, x, "x");
        detail::check_inside(g, y, "y");
        return k_distance_punctured(x - d->puncture, y - d->puncture);
      }
      if (std::get_if<HalfSpace>(&g)) {
        detail::check_inside(g, x, "x");
        detail::check_inside(g, y, "y");
        return rho_halfspace(x, y);
      }
      throw precondition_error(
          "quasihyperbolic distance is supported on punctured space and half-space only");
    }
    case MetricKind::RhoHalfSpace: {
      require(std::holds_alternative<HalfSpace>(g),
              "hyperbolic distance is supported on the half-space only");
      detail::check_inside(g, x, "x");
      detail::check_inside(g, y, "y");
      return rho_halfspace(x, y);
    }
  }
  throw precondition_error("unknown metric kind");
}

}  // namespace trim
