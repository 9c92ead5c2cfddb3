#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "trim/geometry.hpp"

namespace trim {

/// R^n minus one point.
struct PuncturedSpace {
  Point puncture;
};

/// Upper half-space {x : x_n > 0}.
struct HalfSpace {
  std::size_t dimension = 2;
};

/// Upper half-space minus one interior point.
struct PuncturedHalfSpace {
  Point puncture;
};

/// Planar sector of opening alpha, symmetric about the positive first axis:
/// {z : angle(z, 0, e1) < alpha/2}.
struct Angular {
  double alpha = 0.0;
};

/// Simple planar polygon (interior as the domain).
struct Polygon {
  std::vector<Point> vertices;
};

/// Domain known only through boundary samples; the s metric computed against
/// it is a lower bound for the true metric.
struct SampledBoundary {
  std::vector<Point> samples;
};

using Domain =
    std::variant<PuncturedSpace, HalfSpace, PuncturedHalfSpace, Angular, Polygon, SampledBoundary>;

inline std::vector<Segment> polygon_edges(const Polygon& p) {
  std::vector<Segment> edges;
  edges.reserve(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    edges.push_back(Segment::through(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()]));
  }
  return edges;
}

inline std::array<Segment, 2> angular_sides(const Angular& a) {
  double h = a.alpha / 2.0;
  return {Segment::ray_from(Point{0.0, 0.0}, Point{std::cos(h), std::sin(h)}),
          Segment::ray_from(Point{0.0, 0.0}, Point{std::cos(h), -std::sin(h)})};
}

namespace detail {

inline bool proper_or_touching_intersection(const Segment& s, const Segment& t) {
  // Bounding-interval reject then orientation tests; endpoints touching count.
  auto orient = [](const Point& a, const Point& b, const Point& c) {
    double v = cross2(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
  };
  int o1 = orient(s.a, s.b, t.a);
  int o2 = orient(s.a, s.b, t.b);
  int o3 = orient(t.a, t.b, s.a);
  int o4 = orient(t.a, t.b, s.b);
  if (o1 != o2 && o3 != o4) return true;
  auto on = [&](const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) == 0 && std::min(a.x(), b.x()) <= c.x() &&
           c.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= c.y() &&
           c.y() <= std::max(a.y(), b.y());
  };
  return on(s.a, s.b, t.a) || on(s.a, s.b, t.b) || on(t.a, t.b, s.a) || on(t.a, t.b, s.b);
}

}  // namespace detail

inline Angular make_angular(double alpha) {
  require(alpha > 0.0 && alpha < 2.0 * M_PI, "sector opening must lie strictly inside (0, 2*pi)");
  return Angular{alpha};
}

inline PuncturedHalfSpace make_punctured_halfspace(Point puncture) {
  require(puncture.dim() >= 2, "puncture must have dimension >= 2");
  require(puncture.last() > 0.0, "puncture must lie strictly inside the half-space");
  return PuncturedHalfSpace{std::move(puncture)};
}

inline Polygon make_polygon(std::vector<Point> vertices) {
  require(vertices.size() >= 3, "polygon needs at least 3 vertices");
  for (const Point& v : vertices) {
    check_planar(v);
    require(all_finite(v), "polygon vertex has non-finite coordinate");
  }
  Polygon p{std::move(vertices)};
  auto edges = polygon_edges(p);
  double area2 = 0.0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    area2 += cross2(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()]);
  require(std::fabs(area2) > 0.0, "polygon has zero area");
  const std::size_t n = edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      require(!detail::proper_or_touching_intersection(edges[i], edges[j]),
              "polygon is self-intersecting");
    }
  }
  return p;
}

inline SampledBoundary make_sampled_boundary(std::vector<Point> samples) {
  require(!samples.empty(), "sampled boundary needs at least one sample");
  for (std::size_t i = 1; i < samples.size(); ++i) check_dims(samples[0], samples[i]);
  return SampledBoundary{std::move(samples)};
}

inline std::string domain_name(const Domain& g) {
  struct V {
    std::string operator()(const PuncturedSpace&) const { return "punctured"; }
    std::string operator()(const HalfSpace&) const { return "halfspace"; }
    std::string operator()(const PuncturedHalfSpace&) const { return "punctured-halfspace"; }
    std::string operator()(const Angular&) const { return "angular"; }
    std::string operator()(const Polygon&) const { return "polygon"; }
    std::string operator()(const SampledBoundary&) const { return "sampled"; }
  };
  return std::visit(V{}, g);
}

inline bool is_sampled_boundary(const Domain& g) {
  return std::holds_alternative<SampledBoundary>(g);
}

namespace detail {

inline bool point_in_polygon(const Polygon& p, const Point& q) {
  // Even-odd crossing count; boundary points are handled by the caller.
  bool inside = false;
  const auto& vs = p.vertices;
  for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++) {
    bool crosses = (vs[i].y() > q.y()) != (vs[j].y() > q.y());
    if (!crosses) continue;
    double t = (q.y() - vs[i].y()) / (vs[j].y() - vs[i].y());
    double xc = vs[i].x() + t * (vs[j].x() - vs[i].x());
    if (q.x() < xc) inside = !inside;
  }
  return inside;
}

}  // namespace detail

/// Strict interior membership test.
inline bool contains(const Domain& g, const Point& p) {
  if (!all_finite(p)) return false;
  struct V {
    const Point& p;
    bool operator()(const PuncturedSpace& d) const {
      return p.dim() == d.puncture.dim() && dist(p, d.puncture) > 0.0;
    }
    bool operator()(const HalfSpace& d) const { return p.dim() == d.dimension && p.last() > 0.0; }
    bool operator()(const PuncturedHalfSpace& d) const {
      return p.dim() == d.puncture.dim() && p.last() > 0.0 && dist(p, d.puncture) > 0.0;
    }
    bool operator()(const Angular& d) const {
      if (p.dim() != 2 || norm(p) == 0.0) return false;
      return angle_at(Point{0.0, 0.0}, p, Point{1.0, 0.0}) < d.alpha / 2.0;
    }
    bool operator()(const Polygon& d) const {
      if (p.dim() != 2) return false;
      for (const Segment& e : polygon_edges(d))
        if (point_piece_distance(p, e) == 0.0) return false;
      return detail::point_in_polygon(d, p);
    }
    bool operator()(const SampledBoundary& d) const {
      if (p.dim() != d.samples.front().dim()) return false;
      for (const Point& z : d.samples)
        if (dist(p, z) == 0.0) return false;
      return true;
    }
  };
  return std::visit(V{p}, g);
}

/// Distance along the ray p + t*u (t > 0) to the first boundary hit,
/// +inf when the ray never leaves the domain. Pre: p strictly inside.
inline double ray_exit(const Domain& g, const Point& p, const Point& u) {
  // A ray meets an isolated boundary point only when exactly collinear.
  auto point_hit = [&](const Point& z) {
    double t = dot(z - p, u) / dot(u, u);
    if (t <= 0.0) return kInf;
    return dist(z, p + t * u) == 0.0 ? t : kInf;
  };
  if (const auto* d = std::get_if<PuncturedSpace>(&g)) return point_hit(d->puncture);
  if (std::get_if<HalfSpace>(&g)) {
    double un = u.last();
    return un < 0.0 ? p.last() / -un : kInf;
  }
  if (const auto* d = std::get_if<PuncturedHalfSpace>(&g)) {
    double un = u.last();
    double t1 = un < 0.0 ? p.last() / -un : kInf;
    return std::min(t1, point_hit(d->puncture));
  }
  if (const auto* d = std::get_if<Angular>(&g)) {
    double best = kInf;
    for (const Segment& s : angular_sides(*d))
      if (auto t = ray_piece_intersection(p, u, s)) best = std::min(best, *t);
    return best;
  }
  if (const auto* d = std::get_if<Polygon>(&g)) {
    double best = kInf;
    for (const Segment& e : polygon_edges(*d))
      if (auto t = ray_piece_intersection(p, u, e)) best = std::min(best, *t);
    return best;
  }
  const auto& d = std::get<SampledBoundary>(g);
  double best = kInf;
  for (const Point& z : d.samples) best = std::min(best, point_hit(z));
  return best;
}

}  // namespace trim
