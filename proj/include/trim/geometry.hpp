#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Thrown when an operation's stated precondition is violated. The message
/// names the precondition so callers (and the CLI) can surface it verbatim.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw precondition_error(what);
}

/// Euclidean point / vector in R^n, n >= 2. Dimension is fixed per
/// computation; mixing dimensions is an error.
struct Point {
  std::vector<double> c;

  Point() = default;
  Point(std::initializer_list<double> v) : c(v) {}
  explicit Point(std::vector<double> v) : c(std::move(v)) {}

  static Point zero(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

  std::size_t dim() const { return c.size(); }
  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }
  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double last() const { return c.back(); }
};

inline bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

inline bool all_finite(const Point& p) {
  for (double v : p.c)
    if (!std::isfinite(v)) return false;
  return true;
}

inline void check_dims(const Point& a, const Point& b) {
  require(a.dim() == b.dim(), "mixed-dimension points");
}

inline Point operator+(const Point& a, const Point& b) {
  check_dims(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  check_dims(a, b);
  Point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

inline Point operator*(double s, const Point& a) {
  Point r = a;
  for (double& v : r.c) v *= s;
  return r;
}

inline double dot(const Point& a, const Point& b) {
  check_dims(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline double sq_dist(const Point& a, const Point& b) {
  check_dims(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(sq_dist(a, b)); }

inline Point normalized(const Point& a) {
  double n = norm(a);
  require(n > 0.0, "zero-length direction");
  return (1.0 / n) * a;
}

inline void check_planar(const Point& p) {
  require(p.dim() == 2, "operation requires planar points");
}

inline double cross2(const Point& a, const Point& b) {
  check_planar(a);
  check_planar(b);
  return a.x() * b.y() - a.y() * b.x();
}

inline Point rotate2(const Point& p, double angle) {
  check_planar(p);
  double ca = std::cos(angle), sa = std::sin(angle);
  return Point{ca * p.x() - sa * p.y(), sa * p.x() + ca * p.y()};
}

/// Unsigned angle at `vertex` between the arms toward a and b, in [0, pi].
/// Uses the half-angle form, which is accurate for nearly parallel arms and
/// exactly symmetric in (a, b).
inline double angle_at(const Point& vertex, const Point& a, const Point& b) {
  Point u = a - vertex;
  Point v = b - vertex;
  require(norm(u) > 0.0 && norm(v) > 0.0, "zero-length arm at angle vertex");
  Point un = normalized(u);
  Point vn = normalized(v);
  return 2.0 * std::atan2(norm(un - vn), norm(un + vn));
}

/// Mirror across the hyperplane {x_n = 0}: negates the last coordinate.
inline Point reflect_halfspace(const Point& y) {
  require(y.dim() >= 2, "reflection requires dimension >= 2");
  Point r = y;
  r[r.dim() - 1] = -r[r.dim() - 1];
  return r;
}

/// A piece of a boundary: a finite segment [a,b], a ray a + t*b (t >= 0,
/// b a direction), or the full line a + t*b (t in R).
struct Segment {
  enum class Kind { segment, ray, line };

  Point a;
  Point b;  // endpoint for Kind::segment, direction otherwise
  Kind kind = Kind::segment;

  static Segment through(Point p, Point q) {
    require(p != q, "degenerate segment: identical endpoints");
    return Segment{std::move(p), std::move(q), Kind::segment};
  }
  static Segment ray_from(Point origin, Point dir) {
    require(norm(dir) > 0.0, "degenerate ray: zero direction");
    return Segment{std::move(origin), std::move(dir), Kind::ray};
  }
  static Segment line_through(Point origin, Point dir) {
    require(norm(dir) > 0.0, "degenerate line: zero direction");
    return Segment{std::move(origin), std::move(dir), Kind::line};
  }

  Point direction() const { return kind == Kind::segment ? b - a : b; }
};

/// Mirror image of p across the infinite line through s.
inline Point reflect_across_line(const Point& p, const Segment& s) {
  check_planar(p);
  Point d = normalized(s.direction());
  Point w = p - s.a;
  double along = dot(w, d);
  Point off = w - along * d;
  return p - 2.0 * off;
}

namespace detail {

// Parameter range of the piece in units of its (unnormalized) direction.
inline std::pair<double, double> piece_range(const Segment& s) {
  switch (s.kind) {
    case Segment::Kind::segment:
      return {0.0, 1.0};
    case Segment::Kind::ray:
      return {0.0, kInf};
    case Segment::Kind::line:
      return {-kInf, kInf};
  }
  return {0.0, 0.0};
}

}  // namespace detail

/// Euclidean distance from p to the piece (segment / ray / line).
inline double point_piece_distance(const Point& p, const Segment& s) {
  Point d = s.direction();
  double dd = dot(d, d);
  require(dd > 0.0, "degenerate boundary piece");
  double t = dot(p - s.a, d) / dd;
  auto [lo, hi] = detail::piece_range(s);
  t = std::clamp(t, lo, hi);
  return dist(p, s.a + t * d);
}

/// min over z on the piece of |x-z| + |z-y|.
///
/// The sum is convex along the line, so the unconstrained minimizer (found by
/// reflecting y when x and y lie on the same side) clamped into the piece's
/// parameter range is the exact minimum. Points on the line itself fall out
/// of the same formula by continuity.
inline double min_path_via_boundary_piece(const Point& x, const Point& y, const Segment& s) {
  check_planar(x);
  check_planar(y);
  Point d = s.direction();
  double dlen = norm(d);
  require(dlen > 0.0, "degenerate boundary piece");
  Point dn = (1.0 / dlen) * d;

  auto along = [&](const Point& p) { return dot(p - s.a, dn); };
  auto off = [&](const Point& p) { return cross2(dn, p - s.a); };

  double hx = off(x);
  double hy = off(y);
  Point ym = (hx * hy > 0.0) ? reflect_across_line(y, s) : y;
  double hm = (hx * hy > 0.0) ? -hy : hy;

  double tx = along(x);
  double ty = along(ym);
  double t;
  double wx = std::fabs(hx), wm = std::fabs(hm);
  if (wx + wm == 0.0) {
    t = 0.5 * (tx + ty);  // both points on the line
  } else {
    t = (tx * wm + ty * wx) / (wx + wm);
  }

  auto [lo, hi] = detail::piece_range(s);
  t = std::clamp(t / dlen, lo, hi);  // to direction units
  Point z = s.a + t * d;
  return dist(x, z) + dist(z, y);
}

/// Intersection of the ray x + t*u (t > 0) with a boundary piece; returns t.
inline std::optional<double> ray_piece_intersection(const Point& x, const Point& u,
                                                    const Segment& s) {
  check_planar(x);
  Point d = s.direction();
  double det = cross2(d, u);
  if (std::fabs(det) < 1e-300) return std::nullopt;  // parallel
  Point rhs = s.a - x;
  double t = cross2(d, rhs) / det;
  double w = cross2(u, rhs) / det;
  auto [lo, hi] = detail::piece_range(s);
  if (t <= 0.0 || w < lo || w > hi) return std::nullopt;
  return t;
}

}  // namespace trim
