// Test-only oracles and helpers, independent of the library code paths they
// check.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "trim/balls.hpp"
#include "trim/domain.hpp"
#include "trim/rng.hpp"

namespace oracle {

using trim::Point;
using trim::Segment;

// Brute-force min over z on the piece of |x-z| + |z-y|: dense scan followed
// by golden-section refinement (the sum is convex along the line).
inline double dense_min_path(const Point& x, const Point& y, const Segment& s,
                             int scan = 100000) {
  Point d = s.direction();
  double lo, hi;
  switch (s.kind) {
    case Segment::Kind::segment:
      lo = 0.0;
      hi = 1.0;
      break;
    default: {
      // window around the projections of x and y, wide enough to bracket the
      // convex minimum
      double dd = trim::dot(d, d);
      double tx = trim::dot(x - s.a, d) / dd;
      double ty = trim::dot(y - s.a, d) / dd;
      double span = std::fabs(tx - ty) + (trim::dist(x, s.a) + trim::dist(y, s.a)) / std::sqrt(dd) + 1.0;
      lo = std::min(tx, ty) - span;
      hi = std::max(tx, ty) + span;
      if (s.kind == Segment::Kind::ray) lo = std::max(lo, 0.0);
      break;
    }
  }
  auto f = [&](double t) {
    Point z = s.a + t * d;
    return trim::dist(x, z) + trim::dist(z, y);
  };
  double best_t = lo, best = f(lo);
  for (int i = 1; i <= scan; ++i) {
    double t = lo + (hi - lo) * i / scan;
    double v = f(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  double a = std::max(lo, best_t - (hi - lo) / scan);
  double b = std::min(hi, best_t + (hi - lo) / scan);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), e = a + gr * (b - a);
  for (int i = 0; i < 200; ++i) {
    if (f(c) < f(e)) {
      b = e;
    } else {
      a = c;
    }
    c = b - gr * (b - a);
    e = a + gr * (b - a);
  }
  return std::min(best, f(0.5 * (a + b)));
}

// Does the straight segment [x, y] intersect the piece?
inline bool segment_meets_piece(const Point& x, const Point& y, const Segment& s) {
  Point u = y - x;
  Point d = s.direction();
  double det = trim::cross2(d, u);
  Point rhs = s.a - x;
  if (std::fabs(det) < 1e-14) {
    // parallel: meets only if collinear and overlapping; treat distance 0
    return trim::point_piece_distance(x, s) == 0.0 || trim::point_piece_distance(y, s) == 0.0;
  }
  double t = trim::cross2(d, rhs) / det;  // along [x,y], needs [0,1]
  double w = trim::cross2(u, rhs) / det;  // along the piece
  if (t < 0.0 || t > 1.0) return false;
  switch (s.kind) {
    case Segment::Kind::segment:
      return w >= 0.0 && w <= 1.0;
    case Segment::Kind::ray:
      return w >= 0.0;
    case Segment::Kind::line:
      return true;
  }
  return false;
}

// Uniform samples of a polygon boundary (edge endpoints included).
inline std::vector<Point> sample_polygon_boundary(const trim::Polygon& poly, int per_edge) {
  std::vector<Point> samples;
  for (const Segment& e : trim::polygon_edges(poly)) {
    for (int i = 0; i < per_edge; ++i) {
      double t = static_cast<double>(i) / per_edge;
      samples.push_back(e.a + t * (e.b - e.a));
    }
  }
  return samples;
}

// sup over sampled boundary points of |x-y| / (|x-z| + |z-y|).
inline double sampled_sup_ratio(const std::vector<Point>& boundary, const Point& x,
                                const Point& y) {
  double xy = trim::dist(x, y);
  double best = 0.0;
  for (const Point& z : boundary)
    best = std::max(best, xy / (trim::dist(x, z) + trim::dist(z, y)));
  return best;
}

// Symmetric Hausdorff distance between two closed polylines that are both
// star-shaped about `center` and stored in angular order: each vertex of one
// is compared against a window of the other's segments around its angle.
inline double polyline_hausdorff(const std::vector<Point>& A, const std::vector<Point>& B,
                                 const Point& center) {
  auto angles = [&](const std::vector<Point>& P) {
    std::vector<double> a(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
      Point d = P[i] - center;
      a[i] = std::atan2(d.y(), d.x());
    }
    return a;
  };
  auto directed = [&](const std::vector<Point>& from, const std::vector<Point>& to) {
    std::vector<double> ta = angles(to);
    const std::size_t m = to.size();
    // vertex indices sorted by angle about the center (works for either
    // traversal orientation)
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ta[a] < ta[b]; });
    std::vector<double> sorted(m);
    for (std::size_t i = 0; i < m; ++i) sorted[i] = ta[order[i]];

    auto seg_dist = [&](const Point& p, std::size_t vi) {
      const Point& a = to[vi];
      const Point& b = to[(vi + 1) % m];
      if (a == b) return trim::dist(p, a);
      return trim::point_piece_distance(p, Segment::through(a, b));
    };

    double worst = 0.0;
    const long window = 16;
    for (const Point& p : from) {
      Point d = p - center;
      double ang = std::atan2(d.y(), d.x());
      long idx = std::lower_bound(sorted.begin(), sorted.end(), ang) - sorted.begin();
      double best = trim::kInf;
      for (long off = -window; off <= window; ++off) {
        std::size_t i = static_cast<std::size_t>(((idx + off) % static_cast<long>(m) + m) % m);
        std::size_t vi = order[i];
        best = std::min(best, seg_dist(p, vi));
        best = std::min(best, seg_dist(p, (vi + m - 1) % m));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(A, B), directed(B, A));
}

}  // namespace oracle
